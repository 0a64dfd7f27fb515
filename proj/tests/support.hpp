#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// code path it is used to check.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "isoembed/families.hpp"
#include "isoembed/metric.hpp"

namespace isoembed::testing {

/// alpha^T D alpha in exact integer arithmetic.
inline std::int64_t integer_quadratic_form(const std::vector<std::vector<std::int64_t>>& d,
                                           const std::vector<std::int64_t>& alpha) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = 0; j < alpha.size(); ++j) s += alpha[i] * alpha[j] * d[i][j];
    return s;
}

/// Hop distances by breadth-first search; -1 when unreachable.
inline std::vector<std::vector<int>> bfs_distances(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        std::vector<int> queue{s};
        dist[s][s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const int v = queue[h];
            for (int u : adj[v]) {
                if (dist[s][u] < 0) {
                    dist[s][u] = dist[s][v] + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    return dist;
}

/// Squared cycle distances min(|i-j|, n-|i-j|)^2.
inline std::vector<std::vector<std::int64_t>> cycle_squared_distances(int n) {
    std::vector<std::vector<std::int64_t>> d(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::int64_t h = std::min(std::abs(i - j), n - std::abs(i - j));
            d[i][j] = h * h;
        }
    }
    return d;
}

/// Connected random graph: random spanning tree plus each other pair with probability p.
inline WeightedGraph random_connected_graph(std::mt19937_64& rng, int n, double p, bool weighted = false) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> used;
    auto weight = [&] { return weighted ? 0.5 + 2.0 * unit(rng) : 1.0; };
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        edges.push_back({u, v, weight()});
        used.insert({u, v});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!used.count({u, v}) && unit(rng) < p) edges.push_back({u, v, weight()});
    return WeightedGraph(n, std::move(edges));
}

/// n distinct points of the integer grid {0..side-1}^dim, Euclidean metric.
inline MetricSpace random_lattice_metric(std::mt19937_64& rng, int n, int dim, int side) {
    std::set<std::vector<int>> pts;
    while (static_cast<int>(pts.size()) < n) {
        std::vector<int> p(static_cast<std::size_t>(dim));
        for (auto& c : p) c = static_cast<int>(rng() % static_cast<std::uint64_t>(side));
        pts.insert(p);
    }
    Eigen::MatrixXd m(n, dim);
    int r = 0;
    for (const auto& p : pts) {
        for (int c = 0; c < dim; ++c) m(r, c) = p[c];
        ++r;
    }
    return euclidean_metric(m);
}

inline Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = normal(rng);
    return a;
}

}  // namespace isoembed::testing
