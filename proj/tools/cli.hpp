#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isoembed::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (args[0] is the program name). JSON results go to
/// `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isoembed::cli
