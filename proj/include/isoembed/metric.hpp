#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "isoembed/error.hpp"

namespace isoembed {

inline constexpr double kDefaultTol = 1e-9;

/**
 * A finite metric space on n labeled points.
 *
 * Instances are only produced by validate_metric() (directly or through the
 * graph/family constructors), so a MetricSpace in hand always satisfies the
 * metric axioms: zero diagonal, exact symmetry, strictly positive
 * off-diagonal distances and the triangle inequality up to the tolerance it
 * was validated with.
 */
class MetricSpace {
public:
    int size() const noexcept { return static_cast<int>(d_.rows()); }
    double operator()(int i, int j) const { return d_(i, j); }
    const Eigen::MatrixXd& matrix() const noexcept { return d_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    double max_distance() const noexcept { return max_; }

    bool operator==(const MetricSpace& other) const;

private:
    MetricSpace(Eigen::MatrixXd d, std::vector<std::string> labels);
    friend MetricSpace validate_metric(const Eigen::MatrixXd&, double,
                                       std::vector<std::string>);

    Eigen::MatrixXd d_;
    std::vector<std::string> labels_;
    double max_ = 0.0;
};

/**
 * Checks the metric axioms and returns the validated space.
 *
 * `tol` is relative to the largest entry: asymmetry, a nonzero diagonal and
 * triangle excess are accepted up to tol * max|d|. The stored matrix is
 * symmetrized and its diagonal zeroed. Missing labels default to "0".."n-1".
 */
MetricSpace validate_metric(const Eigen::MatrixXd& d, double tol = kDefaultTol,
                            std::vector<std::string> labels = {});

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;

    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph with strictly positive edge weights.
/// Edges are normalized to u < v and kept sorted.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int n, std::vector<Edge> edges);

    /// All weights 1.
    static WeightedGraph unweighted(int n, std::span<const std::pair<int, int>> edges);

    int size() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool adjacent(int u, int v) const { return weight(u, v) > 0.0; }
    /// Weight of {u, v}, or 0 when the edge is absent.
    double weight(int u, int v) const { return w_[static_cast<std::size_t>(u) * n_ + v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool is_connected() const;
    /// Some vertex not reachable from vertex 0, or -1 when connected.
    int stranded_vertex() const;

    bool operator==(const WeightedGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> w_;
    std::vector<std::vector<int>> adj_;
};

/// The unique minimal graph generating a metric; edge weights equal distances.
class CriticalGraph {
public:
    explicit CriticalGraph(WeightedGraph g) : g_(std::move(g)) {}
    const WeightedGraph& graph() const noexcept { return g_; }

private:
    WeightedGraph g_;
};

/// All-pairs shortest paths (Floyd-Warshall). Throws DisconnectedGraph.
MetricSpace shortest_path_metric(const WeightedGraph& g);

/**
 * Keeps {u,v} iff d(u,v) < d(u,z) + d(z,v) - tol * max d for every other z.
 * Ties at collinear points therefore always delete the edge.
 */
CriticalGraph critical_graph(const MetricSpace& m, double tol = kDefaultTol);

/// True iff the shortest-path metric of g matches m entrywise within tol * max d.
/// A disconnected g generates nothing and yields false.
bool generates_metric(const WeightedGraph& g, const MetricSpace& m, double tol = kDefaultTol);

/// Graphviz export; weights formatted "%.6g". Labels default to vertex indices.
std::string to_dot(const CriticalGraph& g, std::span<const std::string> labels = {});

}  // namespace isoembed
