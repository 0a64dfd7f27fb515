#include "isoembed/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace isoembed {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NonFiniteEntry: return "NonFiniteEntry";
        case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
        case ErrorKind::NegativeDistance: return "NegativeDistance";
        case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::TriangleViolation: return "TriangleViolation";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotEmbeddable: return "NotEmbeddable";
        case ErrorKind::WrongSize: return "WrongSize";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::IsolatedVertex: return "IsolatedVertex";
        case ErrorKind::ConstantMap: return "ConstantMap";
        case ErrorKind::TargetTooSmall: return "TargetTooSmall";
        case ErrorKind::GraphMismatch: return "GraphMismatch";
        case ErrorKind::TargetMismatch: return "TargetMismatch";
        case ErrorKind::BadParameters: return "BadParameters";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

MetricSpace::MetricSpace(Eigen::MatrixXd d, std::vector<std::string> labels)
    : d_(std::move(d)), labels_(std::move(labels)), max_(d_.size() ? d_.maxCoeff() : 0.0) {}

bool MetricSpace::operator==(const MetricSpace& other) const {
    return d_.rows() == other.d_.rows() && d_ == other.d_;
}

MetricSpace validate_metric(const Eigen::MatrixXd& d, double tol, std::vector<std::string> labels) {
    const Eigen::Index n = d.rows();
    if (n < 1) throw Error(ErrorKind::EmptyInput, "metric must have at least one point");
    if (d.cols() != n) {
        throw Error(ErrorKind::NotSquare, "distance matrix is " + std::to_string(n) + "x" +
                                              std::to_string(d.cols()));
    }
    if (!d.allFinite()) throw Error(ErrorKind::NonFiniteEntry, "distance matrix has non-finite entries");
    if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != n) {
        throw Error(ErrorKind::SizeMismatch, "expected " + std::to_string(n) + " labels, got " +
                                                 std::to_string(labels.size()));
    }

    const double slack = tol * d.cwiseAbs().maxCoeff();
    Eigen::MatrixXd s(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(d(i, i)) > slack) {
            throw Error(ErrorKind::NonzeroDiagonal,
                        "d" + pair_str(int(i), int(i)) + " = " + std::to_string(d(i, i)));
        }
        s(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (d(i, j) < 0.0 || d(j, i) < 0.0) {
                throw Error(ErrorKind::NegativeDistance, "negative distance at " + pair_str(int(i), int(j)));
            }
            if (std::abs(d(i, j) - d(j, i)) > slack) {
                throw Error(ErrorKind::AsymmetricMatrix, "d" + pair_str(int(i), int(j)) + " != d" +
                                                             pair_str(int(j), int(i)));
            }
            const double v = 0.5 * (d(i, j) + d(j, i));
            if (v == 0.0) {
                throw Error(ErrorKind::CoincidentPoints,
                            "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }
            s(i, j) = s(j, i) = v;
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            for (Eigen::Index k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (s(i, j) > s(i, k) + s(k, j) + slack) {
                    std::ostringstream msg;
                    msg << "triangle (" << i << "," << k << "," << j << "): d" << pair_str(int(i), int(j))
                        << " = " << s(i, j) << " > " << s(i, k) + s(k, j);
                    throw Error(ErrorKind::TriangleViolation, msg.str());
                }
            }
        }
    }
    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    return MetricSpace(std::move(s), std::move(labels));
}

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw Error(ErrorKind::BadParameters, "negative vertex count");
    w_.assign(static_cast<std::size_t>(n) * n, 0.0);
    adj_.resize(static_cast<std::size_t>(n));
    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw Error(ErrorKind::IndexOutOfRange, "edge " + pair_str(e.u, e.v) + " outside 0.." +
                                                        std::to_string(n - 1));
        }
        if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(e.u));
        if (!(e.w > 0.0) || !std::isfinite(e.w)) {
            throw Error(ErrorKind::NonPositiveWeight, "edge " + pair_str(e.u, e.v) + " has weight " +
                                                          std::to_string(e.w));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        auto& slot = w_[static_cast<std::size_t>(e.u) * n + e.v];
        if (slot > 0.0) throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + pair_str(e.u, e.v));
        slot = e.w;
        w_[static_cast<std::size_t>(e.v) * n + e.u] = e.w;
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    edges_ = std::move(edges);
}

WeightedGraph WeightedGraph::unweighted(int n, std::span<const std::pair<int, int>> edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back({u, v, 1.0});
    return WeightedGraph(n, std::move(es));
}

int WeightedGraph::stranded_vertex() const {
    if (n_ == 0) return -1;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    for (int v = 0; v < n_; ++v) {
        if (!seen[v]) return v;
    }
    return -1;
}

bool WeightedGraph::is_connected() const { return stranded_vertex() < 0; }

MetricSpace shortest_path_metric(const WeightedGraph& g) {
    const int n = g.size();
    if (n < 1) throw Error(ErrorKind::EmptyInput, "graph has no vertices");
    if (int v = g.stranded_vertex(); v >= 0) {
        throw Error(ErrorKind::DisconnectedGraph, "vertex " + std::to_string(v) +
                                                      " is unreachable from vertex 0");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, inf);
    for (int i = 0; i < n; ++i) d(i, i) = 0.0;
    for (const auto& e : g.edges()) d(e.u, e.v) = d(e.v, e.u) = e.w;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const double dik = d(i, k);
            if (dik == inf) continue;
            for (int j = 0; j < n; ++j) {
                const double via = dik + d(k, j);
                if (via < d(i, j)) d(i, j) = via;
            }
        }
    }
    // Shortest-path distances satisfy the axioms by construction; validation
    // only symmetrizes away rounding differences between d(i,j) and d(j,i).
    return validate_metric(d, kDefaultTol);
}

CriticalGraph critical_graph(const MetricSpace& m, double tol) {
    const int n = m.size();
    const double slack = tol * m.max_distance();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double duv = m(u, v);
            bool keep = true;
            for (int z = 0; z < n && keep; ++z) {
                if (z == u || z == v) continue;
                if (duv >= m(u, z) + m(z, v) - slack) keep = false;
            }
            if (keep) edges.push_back({u, v, duv});
        }
    }
    return CriticalGraph(WeightedGraph(n, std::move(edges)));
}

bool generates_metric(const WeightedGraph& g, const MetricSpace& m, double tol) {
    if (g.size() != m.size()) {
        throw Error(ErrorKind::SizeMismatch, "graph has " + std::to_string(g.size()) +
                                                 " vertices, metric has " + std::to_string(m.size()));
    }
    if (!g.is_connected()) return false;
    const MetricSpace induced = shortest_path_metric(g);
    const double slack = tol * std::max(m.max_distance(), induced.max_distance());
    return ((induced.matrix() - m.matrix()).cwiseAbs().array() <= slack).all();
}

std::string to_dot(const CriticalGraph& cg, std::span<const std::string> labels) {
    const auto& g = cg.graph();
    auto name = [&](int v) {
        return static_cast<std::size_t>(v) < labels.size() ? labels[v] : std::to_string(v);
    };
    std::ostringstream out;
    out << "graph critical {\n";
    for (int v = 0; v < g.size(); ++v) out << "  " << v << " [label=\"" << name(v) << "\"];\n";
    char buf[64];
    for (const auto& e : g.edges()) {
        std::snprintf(buf, sizeof buf, "%.6g", e.w);
        out << "  " << e.u << " -- " << e.v << " [label=\"" << buf << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace isoembed
