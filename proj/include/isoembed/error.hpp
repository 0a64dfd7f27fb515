#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoembed {

enum class ErrorKind {
    // metric-core
    EmptyInput,
    NotSquare,
    NonFiniteEntry,
    AsymmetricMatrix,
    NegativeDistance,
    NonzeroDiagonal,
    CoincidentPoints,
    TriangleViolation,
    DisconnectedGraph,
    SizeMismatch,
    IndexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    NonPositiveWeight,
    // symmat
    DimensionMismatch,
    // schoenberg
    NotEmbeddable,
    // structure
    WrongSize,
    BudgetExceeded,
    // geomspec
    IsolatedVertex,
    ConstantMap,
    TargetTooSmall,
    GraphMismatch,
    TargetMismatch,
    // families / io
    BadParameters,
    ParseError,
};

/// Stable identifier used in CLI output and Python exceptions.
std::string_view error_name(ErrorKind kind) noexcept;

/// Every library failure is reported through this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace isoembed
