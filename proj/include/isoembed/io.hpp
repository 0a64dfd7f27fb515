#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "isoembed/metric.hpp"
#include "isoembed/schoenberg.hpp"

namespace isoembed::io {

using Json = nlohmann::ordered_json;

/// {"labels":[...], "d":[[...]]}; "labels" is optional.
MetricSpace metric_from_json(const Json& j, double tol = kDefaultTol);
Json metric_to_json(const MetricSpace& m);

/// {"n":N, "edges":[[u,v,w],...]} with 0-based indices; w defaults to 1.
WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& g);

Json report_to_json(const EmbeddabilityReport& r, const std::vector<double>& trace_profile);
Json embedding_to_json(const Embedding& e);

Json vector_to_json(const Eigen::VectorXd& v);

/// Compact serialization with insertion key order and every floating-point
/// value printed "%.12g", so equal inputs give byte-identical text.
std::string dump(const Json& j);

Json read_json_file(const std::filesystem::path& path);

}  // namespace isoembed::io
