#include "isoembed/geomspec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace isoembed {

namespace {

std::vector<double> degrees_of(const WeightedGraph& g) {
    std::vector<double> deg(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) {
        if (g.degree(v) == 0) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
        deg[v] = g.degree(v);
    }
    return deg;
}

void require_connected(const WeightedGraph& g) {
    if (int v = g.stranded_vertex(); v >= 0) {
        throw Error(ErrorKind::DisconnectedGraph, "vertex " + std::to_string(v) +
                                                      " is unreachable from vertex 0");
    }
}

// Precomputed data for evaluating many assignments against one (G, X).
struct QuotientTable {
    std::vector<double> deg;
    double vol = 0.0;
    Eigen::MatrixXd sq;  // squared target distances

    QuotientTable(const WeightedGraph& g, const MetricSpace& x)
        : deg(degrees_of(g)), sq(x.matrix().cwiseProduct(x.matrix())) {
        for (double d : deg) vol += d;
    }

    double operator()(const WeightedGraph& g, std::span<const int> f) const {
        double cut = 0.0;
        for (const auto& e : g.edges()) cut += sq(f[e.u], f[e.v]);
        double spread = 0.0;
        const auto n = f.size();
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) spread += sq(f[u], f[v]) * deg[u] * deg[v];
        return vol * cut / spread;
    }
};

bool is_constant(std::span<const int> f) {
    return std::adjacent_find(f.begin(), f.end(), std::not_equal_to<>()) == f.end();
}

}  // namespace

HarmonicMap::HarmonicMap(WeightedGraph g, MetricSpace x, std::vector<int> f)
    : graph(std::move(g)), target(std::move(x)), assignment(std::move(f)) {
    if (static_cast<int>(assignment.size()) != graph.size()) {
        throw Error(ErrorKind::SizeMismatch, "assignment covers " + std::to_string(assignment.size()) +
                                                 " of " + std::to_string(graph.size()) + " vertices");
    }
    for (int p : assignment) {
        if (p < 0 || p >= target.size()) {
            throw Error(ErrorKind::IndexOutOfRange, "target point " + std::to_string(p) + " outside 0.." +
                                                        std::to_string(target.size() - 1));
        }
    }
}

std::pair<HarmonicMap, HarmonicMap> real_valued_maps(const WeightedGraph& g, std::span<const double> f1,
                                                     std::span<const double> f2) {
    if (static_cast<int>(f1.size()) != g.size() || static_cast<int>(f2.size()) != g.size()) {
        throw Error(ErrorKind::SizeMismatch, "real-valued maps must have one value per vertex");
    }
    std::vector<double> values(f1.begin(), f1.end());
    values.insert(values.end(), f2.begin(), f2.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    const auto k = static_cast<Eigen::Index>(values.size());
    Eigen::MatrixXd d(k, k);
    std::vector<std::string> labels;
    char buf[32];
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) d(i, j) = std::abs(values[i] - values[j]);
        std::snprintf(buf, sizeof buf, "%.17g", values[i]);
        labels.emplace_back(buf);
    }
    MetricSpace target = validate_metric(d, kDefaultTol, std::move(labels));

    auto index_of = [&](std::span<const double> f) {
        std::vector<int> idx;
        for (double v : f) idx.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()));
        return idx;
    };
    return {HarmonicMap(g, target, index_of(f1)), HarmonicMap(g, target, index_of(f2))};
}

SymmetricMatrix normalized_laplacian(const WeightedGraph& g) {
    const auto deg = degrees_of(g);
    const int n = g.size();
    if (n == 0) throw Error(ErrorKind::EmptyInput, "graph has no vertices");
    Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
    for (const auto& e : g.edges()) l(e.u, e.v) = l(e.v, e.u) = -1.0 / std::sqrt(deg[e.u] * deg[e.v]);
    return SymmetricMatrix(l);
}

double classic_lambda2(const WeightedGraph& g) {
    require_connected(g);
    const auto eig = jacobi_eigen(normalized_laplacian(g));
    return eig.eigenvalues(1);
}

double geometric_rayleigh(const HarmonicMap& h) {
    if (is_constant(h.assignment)) throw Error(ErrorKind::ConstantMap, "quotient undefined for a constant map");
    return QuotientTable(h.graph, h.target)(h.graph, h.assignment);
}

GeometricFiedlerResult geometric_fiedler(const WeightedGraph& g, const MetricSpace& x, std::uint64_t budget) {
    const int k = x.size();
    const int n = g.size();
    if (k < 2) throw Error(ErrorKind::TargetTooSmall, "target metric needs at least two points");
    std::uint64_t maps = 1;
    for (int i = 0; i < n; ++i) {
        if (maps > budget / static_cast<std::uint64_t>(k)) {
            throw Error(ErrorKind::BudgetExceeded, std::to_string(k) + "^" + std::to_string(n) +
                                                       " maps exceed the budget of " + std::to_string(budget));
        }
        maps *= static_cast<std::uint64_t>(k);
    }
    const QuotientTable table(g, x);

    GeometricFiedlerResult best;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (;;) {
        int pos = n - 1;
        while (pos >= 0 && f[pos] == k - 1) f[pos--] = 0;
        if (pos < 0) break;
        ++f[pos];
        if (is_constant(f)) continue;
        ++best.maps_searched;
        const double q = table(g, f);
        if (q < best.value) {
            best.value = q;
            best.argmin = f;
        }
    }
    return best;
}

double sparsest_cut_oracle(const WeightedGraph& g) {
    require_connected(g);
    const int n = g.size();
    if (n < 2) throw Error(ErrorKind::IsolatedVertex, "a single vertex has no cuts");
    if (n > 30) throw Error(ErrorKind::BudgetExceeded, "cut enumeration limited to 30 vertices");

    std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
    for (const auto& e : g.edges()) {
        deg[e.u] += 1.0;
        deg[e.v] += 1.0;
    }
    double vol = 0.0;
    for (double d : deg) vol += d;

    double best = std::numeric_limits<double>::infinity();
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t s = 1; s < full; ++s) {
        double vol_s = 0.0;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) vol_s += deg[v];
        double boundary = 0.0;
        for (const auto& e : g.edges())
            if (((s >> e.u) & 1u) != ((s >> e.v) & 1u)) boundary += 1.0;
        best = std::min(best, vol * boundary / (vol_s * (vol - vol_s)));
    }
    return best;
}

double orthogonality_defect(const HarmonicMap& f1, const HarmonicMap& f2) {
    if (!(f1.graph == f2.graph)) throw Error(ErrorKind::GraphMismatch, "maps are defined on different graphs");
    if (!(f1.target == f2.target)) throw Error(ErrorKind::TargetMismatch, "maps have different target metrics");

    const auto deg = degrees_of(f1.graph);
    double vol = 0.0;
    for (double d : deg) vol += d;
    const auto& x = f1.target;
    const auto& a = f1.assignment;
    const auto& b = f2.assignment;
    const auto n = a.size();

    double cross = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            const double dist = x(a[v], b[u]);
            cross += deg[u] * deg[v] * dist * dist;
        }
    }
    double diagonal = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        const double dist = x(a[v], b[v]);
        diagonal += deg[v] * dist * dist;
    }
    return cross / (2.0 * vol) - 0.5 * diagonal;
}

}  // namespace isoembed
