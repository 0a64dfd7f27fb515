#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "isoembed/symmat.hpp"
#include "support.hpp"

using namespace isoembed;

TEST_CASE("jacobi_eigen on small matrices") {
    Eigen::MatrixXd a(2, 2);
    a << 2, 1, 1, 2;
    const auto e = jacobi_eigen(SymmetricMatrix(a));
    CHECK(e.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));
    // First nonzero component is positive.
    CHECK(e.eigenvectors(0, 0) > 0);
    CHECK(e.eigenvectors(0, 1) > 0);
    CHECK(std::abs(e.eigenvectors(0, 1) - std::sqrt(0.5)) < 1e-14);

    const auto diag = jacobi_eigen(SymmetricMatrix(Eigen::Vector3d(3, -1, 2).asDiagonal().toDenseMatrix()));
    CHECK(diag.eigenvalues == Eigen::Vector3d(-1, 2, 3));

    const auto one = jacobi_eigen(SymmetricMatrix(Eigen::MatrixXd::Constant(1, 1, 5.0)));
    CHECK(one.eigenvalues(0) == 5.0);
    CHECK(one.eigenvectors(0, 0) == 1.0);
}

TEST_CASE("jacobi_eigen input errors") {
    CHECK_THROWS_AS(jacobi_eigen(SymmetricMatrix()), Error);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
    bad(0, 1) = NAN;
    CHECK_THROWS_AS(jacobi_eigen(SymmetricMatrix(bad)), Error);
    CHECK_THROWS_AS(SymmetricMatrix(Eigen::MatrixXd(2, 3)), Error);
}

TEST_CASE("jacobi_eigen reconstructs and matches a reference solver") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const SymmetricMatrix a(testing::random_symmetric(rng, n));
        const auto e = jacobi_eigen(a);
        const Eigen::MatrixXd& u = e.eigenvectors;
        const double scale = std::max(1.0, a.frobenius_norm());

        CHECK((u * e.eigenvalues.asDiagonal() * u.transpose() - a.matrix()).norm() <= 1e-10 * scale);
        CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-12 * n);
        CHECK(std::abs(e.eigenvalues.sum() - a.trace()) <= 1e-12 * scale);
        for (int i = 1; i < n; ++i) CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a.matrix());
        CHECK((ref.eigenvalues() - e.eigenvalues).cwiseAbs().maxCoeff() <= 1e-10 * scale);
    }
}

TEST_CASE("double_center examples") {
    Eigen::MatrixXd p3(3, 3);
    p3 << 0, 1, 4, 1, 0, 1, 4, 1, 0;
    Eigen::MatrixXd expect(3, 3);
    expect << -2, 0, 2, 0, 0, 0, 2, 0, -2;
    CHECK((double_center(SymmetricMatrix(p3)).matrix() - expect).cwiseAbs().maxCoeff() < 1e-14);

    const auto ones = double_center(SymmetricMatrix(Eigen::MatrixXd::Ones(4, 4)));
    CHECK(ones.matrix().cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("double_center annihilates the all-ones vector") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const SymmetricMatrix a(testing::random_symmetric(rng, n));
        const auto m = double_center(a);
        // Oracle: explicit projector product.
        const Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
        CHECK((m.matrix() - p * a.matrix() * p).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, a.frobenius_norm()));
        CHECK((m.matrix() * Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, a.frobenius_norm()));
    }
}

TEST_CASE("definiteness classification") {
    CHECK(definiteness(SymmetricMatrix::zero(3)).kind == Definiteness::Zero);
    CHECK(definiteness(SymmetricMatrix(Eigen::MatrixXd::Identity(2, 2))).kind == Definiteness::PositiveSemiDefinite);
    CHECK(definiteness(SymmetricMatrix(-Eigen::MatrixXd::Identity(2, 2))).kind == Definiteness::NegativeSemiDefinite);

    Eigen::MatrixXd mixed(2, 2);
    mixed << 1, 0, 0, -1;
    const auto r = definiteness(SymmetricMatrix(mixed));
    CHECK(r.kind == Definiteness::Indefinite);
    CHECK(r.lambda_min == doctest::Approx(-1.0));
    CHECK(r.lambda_max == doctest::Approx(1.0));

    Eigen::MatrixXd tiny(2, 2);
    tiny << 1, 0, 0, -1e-12;
    CHECK(definiteness(SymmetricMatrix(tiny)).kind == Definiteness::PositiveSemiDefinite);
    CHECK(definiteness(SymmetricMatrix(tiny), 1e-14).kind == Definiteness::Indefinite);

    CHECK(definiteness_name(Definiteness::NegativeSemiDefinite) == "NegativeSemiDefinite");
}

TEST_CASE("centered sum of squares examples") {
    const std::vector<Eigen::VectorXd> tri{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)};
    const auto s = centered_sum_of_squares(tri);
    CHECK(s.lhs == doctest::Approx(4.0));
    CHECK(s.rhs == doctest::Approx(4.0));

    const std::vector<Eigen::VectorXd> single{Eigen::Vector3d(1, 2, 3)};
    CHECK(centered_sum_of_squares(single).lhs == 0.0);
    CHECK(centered_sum_of_squares(single).rhs == 0.0);

    CHECK_THROWS_AS(centered_sum_of_squares(std::span<const Eigen::VectorXd>{}), Error);
    const std::vector<Eigen::VectorXd> ragged{Eigen::Vector2d(0, 0), Eigen::Vector3d(0, 0, 0)};
    CHECK_THROWS_AS(centered_sum_of_squares(ragged), Error);
}

TEST_CASE("centered sum of squares identity on random point sets") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const int dim = 1 + static_cast<int>(rng() % 5);
        std::vector<Eigen::VectorXd> pts;
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd p(dim);
            for (int c = 0; c < dim; ++c) p(c) = normal(rng);
            pts.push_back(p);
        }
        const auto s = centered_sum_of_squares(pts);
        CHECK(std::abs(s.lhs - s.rhs) <= 1e-10 * std::max(1.0, s.rhs));
    }
}
