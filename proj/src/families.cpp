#include "isoembed/families.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace isoembed {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadParameters, what); }

WeightedGraph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
    return WeightedGraph(n, std::move(e));
}

WeightedGraph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1.0});
    return WeightedGraph(n, std::move(e));
}

WeightedGraph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
    return WeightedGraph(n, std::move(e));
}

// v = 0, u = 1, z = 2, w = 3
WeightedGraph figure_one_graph(FigureOneConfig c) {
    std::vector<Edge> e{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
    if (c != FigureOneConfig::A) e.push_back({1, 2, 1.0});
    if (c == FigureOneConfig::C) e.push_back({2, 3, 1.0});
    return WeightedGraph(4, std::move(e));
}

std::string point_label(std::int64_t x, std::int64_t y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

MetricSpace pythagorean_k4e(const PythagoreanK4eFamily& f) {
    if (f.z < 1) bad("z must be a positive integer");
    std::set<std::int64_t> seen;
    Eigen::MatrixXd pts(4, 2);
    std::vector<std::string> labels;
    for (int i = 0; i < 3; ++i) {
        const auto [p, q] = f.pairs[i];
        const std::string tag = "pair " + std::to_string(i + 1) + " (" + std::to_string(p) + "," + std::to_string(q) + ")";
        if (q < 1 || p <= q) bad(tag + ": need p > q >= 1");
        if (p * q != f.z) bad(tag + ": p*q != z = " + std::to_string(f.z));
        if ((p - q) % 2 != 0) bad(tag + ": parity p != q (mod 2)");
        if (!seen.insert(q).second) bad(tag + ": repeated pair");
        const std::int64_t x = (p * p - q * q) / 2;
        pts(i, 0) = static_cast<double>(x);
        pts(i, 1) = 0.0;
        labels.push_back(point_label(x, 0));
    }
    pts(3, 0) = 0.0;
    pts(3, 1) = static_cast<double>(f.z);
    labels.push_back(point_label(0, f.z));
    return euclidean_metric(pts, std::move(labels));
}

MetricSpace snk(const SnkFamily& f) {
    if (f.k < 2 || f.k > f.n - 1) bad("Snk needs 2 <= k <= n-1, got n=" + std::to_string(f.n) + " k=" + std::to_string(f.k));
    Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(f.n, 2);
    std::vector<std::string> labels{point_label(0, 0)};
    int row = 1;
    for (int i = 1; i < f.k; ++i, ++row) {
        pts(row, 0) = i;
        labels.push_back(point_label(i, 0));
    }
    for (int j = 1; j <= f.n - f.k; ++j, ++row) {
        pts(row, 1) = j;
        labels.push_back(point_label(0, j));
    }
    return euclidean_metric(pts, std::move(labels));
}

}  // namespace

WeightedGraph family_graph(const FamilySpec& spec) {
    if (auto* p = std::get_if<PathFamily>(&spec)) {
        if (p->n < 1) bad("path needs n >= 1");
        return path_graph(p->n);
    }
    if (auto* c = std::get_if<CycleFamily>(&spec)) {
        if (c->n < 3) bad("cycle needs n >= 3");
        return cycle_graph(c->n);
    }
    if (auto* k = std::get_if<CompleteFamily>(&spec)) {
        if (k->n < 1) bad("complete graph needs n >= 1");
        return complete_graph(k->n);
    }
    if (std::holds_alternative<ClawFamily>(spec)) return figure_one_graph(FigureOneConfig::A);
    if (std::holds_alternative<ClawPlusEdgeFamily>(spec)) return figure_one_graph(FigureOneConfig::B);
    if (auto* f = std::get_if<FigureOneFamily>(&spec)) return figure_one_graph(f->config);
    bad("family is a point set, not a graph");
}

MetricSpace generate(const FamilySpec& spec) {
    if (auto* p = std::get_if<PythagoreanK4eFamily>(&spec)) return pythagorean_k4e(*p);
    if (auto* s = std::get_if<SnkFamily>(&spec)) return snk(*s);
    if (auto* r = std::get_if<RandomEuclideanFamily>(&spec)) {
        if (r->n < 1 || r->dim < 1) bad("random Euclidean needs n >= 1 and dim >= 1");
        return random_euclidean(r->n, r->dim, r->seed);
    }
    return shortest_path_metric(family_graph(spec));
}

MetricSpace euclidean_metric(const Eigen::MatrixXd& points, std::vector<std::string> labels) {
    const Eigen::Index n = points.rows();
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) d(i, j) = (points.row(i) - points.row(j)).norm();
    return validate_metric(d, kDefaultTol, std::move(labels));
}

Eigen::MatrixXd random_gaussian_points(int n, int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    Eigen::MatrixXd pts(n, dim);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double u1 = uniform();
            const double u2 = uniform();
            pts(i, j) = std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
        }
    }
    return pts;
}

MetricSpace random_euclidean(int n, int dim, std::uint64_t seed) {
    if (n < 1 || dim < 1) bad("random Euclidean needs n >= 1 and dim >= 1");
    return euclidean_metric(random_gaussian_points(n, dim, seed));
}

std::vector<std::pair<std::int64_t, std::int64_t>> pythagorean_pairs(std::int64_t z) {
    if (z < 1) bad("z must be a positive integer");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t q = 1; q * q < z; ++q) {
        if (z % q != 0) continue;
        const std::int64_t p = z / q;
        if ((p - q) % 2 == 0) out.emplace_back(p, q);
    }
    if (out.size() < 3) {
        bad("z = " + std::to_string(z) + " has only " + std::to_string(out.size()) +
            " factor pairs of equal parity; three are needed");
    }
    return out;
}

PaperWitness paper_witness(const WitnessConfig& c) {
    PaperWitness w;
    auto place = [&](int n, std::vector<int> vertices, std::initializer_list<double> coeffs) {
        w.vertices = std::move(vertices);
        w.alpha = Eigen::VectorXd::Zero(n);
        auto it = coeffs.begin();
        for (int v : w.vertices) w.alpha(v) = *it++;
    };
    switch (c.kind) {
        case WitnessKind::ClawA:
            w.family = FigureOneFamily{FigureOneConfig::A};
            place(4, {0, 1, 2, 3}, {-3, 1, 1, 1});
            break;
        case WitnessKind::ClawB:
            w.family = FigureOneFamily{FigureOneConfig::B};
            place(4, {0, 1, 2, 3}, {4, -1, -1, -2});
            break;
        case WitnessKind::ClawC:
            w.family = FigureOneFamily{FigureOneConfig::C};
            place(4, {0, 1, 2, 3}, {1, -1, 1, -1});
            break;
        case WitnessKind::EvenCycle:
            if (c.k < 2) bad("cycle witness needs k >= 2");
            w.family = CycleFamily{2 * c.k};
            place(2 * c.k, {0, 2 * c.k - 1, c.k - 1, c.k}, {1, -1, -1, 1});
            break;
        case WitnessKind::OddCycle:
            if (c.k < 2) bad("cycle witness needs k >= 2");
            w.family = CycleFamily{2 * c.k + 1};
            place(2 * c.k + 1, {0, 1, c.k, c.k + 1}, {1, -1, 1, -1});
            break;
    }
    return w;
}

}  // namespace isoembed
