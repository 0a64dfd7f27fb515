#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "isoembed/families.hpp"
#include "isoembed/geomspec.hpp"
#include "isoembed/structure.hpp"
#include "support.hpp"

using namespace isoembed;

namespace {

Eigen::VectorXd degrees(const WeightedGraph& g) {
    Eigen::VectorXd d(g.size());
    for (int v = 0; v < g.size(); ++v) d(v) = g.degree(v);
    return d;
}

// I - T^{-1/2} A T^{-1/2} assembled entry by entry.
Eigen::MatrixXd laplacian_oracle(const WeightedGraph& g) {
    const int n = g.size();
    const auto d = degrees(g);
    Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) l(u, v) = -1.0 / std::sqrt(d(u) * d(v));
    return l;
}

std::vector<double> random_values(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> normal;
    std::vector<double> f(static_cast<std::size_t>(n));
    for (auto& x : f) x = normal(rng);
    return f;
}

// Subtract the degree-weighted mean.
void center(std::vector<double>& f, const Eigen::VectorXd& d) {
    double s = 0.0;
    for (std::size_t v = 0; v < f.size(); ++v) s += d(static_cast<Eigen::Index>(v)) * f[v];
    s /= d.sum();
    for (auto& x : f) x -= s;
}

const WeightedGraph kP3 = WeightedGraph::unweighted(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
const MetricSpace kUnit2 = generate(CompleteFamily{2});

}  // namespace

TEST_CASE("HarmonicMap validates its assignment") {
    CHECK_THROWS_AS(HarmonicMap(kP3, kUnit2, {0, 1}), Error);
    CHECK_THROWS_AS(HarmonicMap(kP3, kUnit2, {0, 1, 2}), Error);
    CHECK_NOTHROW(HarmonicMap(kP3, kUnit2, {0, 1, 1}));
}

TEST_CASE("normalized Laplacian and classic lambda2") {
    CHECK((normalized_laplacian(kP3).matrix() - laplacian_oracle(kP3)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(classic_lambda2(kP3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(classic_lambda2(family_graph(CycleFamily{4})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(classic_lambda2(family_graph(CompleteFamily{5})) == doctest::Approx(5.0 / 4.0).epsilon(1e-12));

    const auto isolated = WeightedGraph::unweighted(3, std::vector<std::pair<int, int>>{{0, 1}});
    CHECK_THROWS_AS(normalized_laplacian(isolated), Error);
    const auto split = WeightedGraph::unweighted(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(classic_lambda2(split), Error);
}

TEST_CASE("geometric Fiedler value of P3 over two points") {
    const auto r = geometric_fiedler(kP3, kUnit2);
    CHECK(std::abs(r.value - 4.0 / 3.0) < 1e-12);
    CHECK(r.argmin == std::vector<int>{0, 0, 1});
    CHECK(r.maps_searched == 6);

    CHECK_THROWS_AS(geometric_fiedler(kP3, generate(PathFamily{1})), Error);
    CHECK_THROWS_AS(geometric_fiedler(family_graph(CompleteFamily{8}), generate(PathFamily{8}), 1000), Error);
    CHECK_THROWS_AS(geometric_rayleigh(HarmonicMap(kP3, kUnit2, {1, 1, 1})), Error);
}

TEST_CASE("sparsest cut examples") {
    CHECK(sparsest_cut_oracle(family_graph(CycleFamily{4})) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sparsest_cut_oracle(kP3) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    for (int n = 2; n <= 7; ++n)
        CHECK(sparsest_cut_oracle(family_graph(CompleteFamily{n})) == doctest::Approx(n / (n - 1.0)).epsilon(1e-14));
}

TEST_CASE("two-point geometric Fiedler value equals the sparsest cut") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const auto g = testing::random_connected_graph(rng, n, 0.3);
        CHECK(std::abs(geometric_fiedler(g, kUnit2).value - sparsest_cut_oracle(g)) <= 1e-12);
    }
}

TEST_CASE("real-valued Rayleigh quotient matches the Laplacian quotient") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const auto g = testing::random_connected_graph(rng, n, 0.4);
        auto f = random_values(rng, n);
        const auto maps = real_valued_maps(g, f, f);
        const double q = geometric_rayleigh(maps.first);

        const auto d = degrees(g);
        center(f, d);
        Eigen::VectorXd x(n);
        for (int v = 0; v < n; ++v) x(v) = std::sqrt(d(v)) * f[v];
        const double classic = x.dot(laplacian_oracle(g) * x) / x.squaredNorm();
        CHECK(std::abs(q - classic) <= 1e-9);
    }
}

TEST_CASE("embeddable targets never beat the classic lambda2") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto g = testing::random_connected_graph(rng, n, 0.35);
        const auto x = random_euclidean(2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 3), rng());
        CHECK(geometric_fiedler(g, x).value >= classic_lambda2(g) - 1e-9);
    }
}

TEST_CASE("orthogonality defect examples") {
    // P3 harmonic eigenvectors for lambda = 1 and 2.
    const std::vector<double> f1{1, 0, -1}, f2{1, -1, 1};
    const auto maps = real_valued_maps(kP3, f1, f2);
    CHECK(std::abs(orthogonality_defect(maps.first, maps.second)) < 1e-12);

    const auto k2 = family_graph(CompleteFamily{2});
    const HarmonicMap h(k2, kUnit2, {0, 1});
    CHECK(orthogonality_defect(h, h) == doctest::Approx(0.5).epsilon(1e-15));

    const HarmonicMap constant(kP3, kUnit2, {0, 0, 0});
    const HarmonicMap other(kP3, kUnit2, {0, 1, 1});
    CHECK(std::abs(orthogonality_defect(constant, other)) < 1e-15);

    CHECK_THROWS_AS(orthogonality_defect(h, other), Error);
    const HarmonicMap far(kP3, euclidean_metric(Eigen::Vector2d(0, 2)), {0, 1, 1});
    CHECK_THROWS_AS(orthogonality_defect(other, far), Error);
}

TEST_CASE("orthogonality defect reduces to the degree-weighted inner product") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const auto g = testing::random_connected_graph(rng, n, 0.4);
        const auto d = degrees(g);
        auto f1 = random_values(rng, n);
        auto f2 = random_values(rng, n);
        center(f1, d);
        center(f2, d);
        double inner = 0.0;
        for (int v = 0; v < n; ++v) inner += d(v) * f1[v] * f2[v];
        const auto maps = real_valued_maps(g, f1, f2);
        CHECK(std::abs(orthogonality_defect(maps.first, maps.second) - inner) <= 1e-9);
    }
}

TEST_CASE("self defect is non-negative for embeddable targets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const auto g = testing::random_connected_graph(rng, n, 0.4);
        const int k = 1 + static_cast<int>(rng() % 5);
        const auto x = random_euclidean(k, 1 + static_cast<int>(rng() % 3), rng());
        std::vector<int> f(static_cast<std::size_t>(n));
        for (auto& v : f) v = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
        const HarmonicMap h(g, x, f);
        CHECK(orthogonality_defect(h, h) >= -1e-12);
    }
}

TEST_CASE("harmonic eigenvectors of distinct eigenvalues have zero defect") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const auto g = graph_from_mask(n, mask);
            if (!g.is_connected()) continue;
            const auto d = degrees(g);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian_oracle(g));
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)) < 1e-6) continue;
                    std::vector<double> f1(n), f2(n);
                    for (int v = 0; v < n; ++v) {
                        f1[v] = es.eigenvectors()(v, i) / std::sqrt(d(v));
                        f2[v] = es.eigenvectors()(v, j) / std::sqrt(d(v));
                    }
                    const auto maps = real_valued_maps(g, f1, f2);
                    REQUIRE(std::abs(orthogonality_defect(maps.first, maps.second)) <= 1e-9);
                }
            }
        }
    }
}
