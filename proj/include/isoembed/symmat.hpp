#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "isoembed/error.hpp"

namespace isoembed {

/// Dense real symmetric matrix. The input is symmetrized as (A + A^T) / 2 on
/// construction, so entries(i,j) == entries(j,i) holds bitwise.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(const Eigen::MatrixXd& a);

    static SymmetricMatrix zero(int n) { return SymmetricMatrix(Eigen::MatrixXd::Zero(n, n)); }

    int size() const noexcept { return static_cast<int>(a_.rows()); }
    double operator()(int i, int j) const { return a_(i, j); }
    const Eigen::MatrixXd& matrix() const noexcept { return a_; }
    double trace() const { return a_.trace(); }
    double frobenius_norm() const { return a_.norm(); }

private:
    Eigen::MatrixXd a_;
};

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns, eigenvectors.col(i) <-> eigenvalues(i)
};

/**
 * Cyclic Jacobi eigensolver.
 *
 * Sweeps until the off-diagonal Frobenius norm drops below 1e-14 * ||A||_F or
 * 100 sweeps have run. Eigenvalues come back ascending; each eigenvector is
 * sign-normalized so its first nonzero component is positive.
 */
EigenDecomposition jacobi_eigen(const SymmetricMatrix& a);

/// (I - J/n) A (I - J/n).
SymmetricMatrix double_center(const SymmetricMatrix& a);

enum class Definiteness { NegativeSemiDefinite, PositiveSemiDefinite, Indefinite, Zero };

std::string_view definiteness_name(Definiteness d) noexcept;

struct DefinitenessReport {
    Definiteness kind;
    double lambda_min;
    double lambda_max;
};

/// Classifies by eigenvalue signs against +-tol. Without an explicit tol the
/// threshold is 1e-9 * max(1, max |lambda|).
DefinitenessReport definiteness(const SymmetricMatrix& a, std::optional<double> tol = std::nullopt);

struct SumOfSquares {
    double lhs;  // n * sum_i |a_i - mean|^2
    double rhs;  // sum_{i<j} |a_i - a_j|^2
};

/// Both sides of the centered variance identity, evaluated independently.
SumOfSquares centered_sum_of_squares(std::span<const Eigen::VectorXd> points);

}  // namespace isoembed
