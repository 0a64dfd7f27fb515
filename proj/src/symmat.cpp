#include "isoembed/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace isoembed {

SymmetricMatrix::SymmetricMatrix(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NotSquare, "matrix is " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()));
    }
    a_ = 0.5 * (a + a.transpose());
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRel = 1e-14;
// Components below this magnitude are treated as zero when fixing signs.
constexpr double kSignEps = 1e-12;

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double s = 0.0;
    for (Eigen::Index q = 1; q < a.rows(); ++q)
        for (Eigen::Index p = 0; p < q; ++p) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymmetricMatrix& sym) {
    const int n = sym.size();
    if (n < 1) throw Error(ErrorKind::EmptyInput, "empty matrix");
    if (!sym.matrix().allFinite()) throw Error(ErrorKind::NonFiniteEntry, "matrix has non-finite entries");

    Eigen::MatrixXd a = sym.matrix();
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double threshold = kOffDiagonalRel * a.norm();

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - s * akq;
                    a(k, q) = a(q, k) = s * akp + c * akq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    EigenDecomposition out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
    for (int i = 0; i < n; ++i) {
        out.eigenvalues(i) = a(order[i], order[i]);
        Eigen::VectorXd col = v.col(order[i]);
        for (int k = 0; k < n; ++k) {
            if (std::abs(col(k)) > kSignEps) {
                if (col(k) < 0.0) col = -col;
                break;
            }
        }
        out.eigenvectors.col(i) = col;
    }
    return out;
}

SymmetricMatrix double_center(const SymmetricMatrix& sym) {
    const int n = sym.size();
    if (n == 0) return sym;
    const Eigen::MatrixXd& a = sym.matrix();
    const Eigen::VectorXd r = a.rowwise().mean();
    const double g = r.mean();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j) - (r(i) + r(j)) + g;
    return SymmetricMatrix(m);
}

std::string_view definiteness_name(Definiteness d) noexcept {
    switch (d) {
        case Definiteness::NegativeSemiDefinite: return "NegativeSemiDefinite";
        case Definiteness::PositiveSemiDefinite: return "PositiveSemiDefinite";
        case Definiteness::Indefinite: return "Indefinite";
        case Definiteness::Zero: return "Zero";
    }
    return "Unknown";
}

DefinitenessReport definiteness(const SymmetricMatrix& a, std::optional<double> tol) {
    const auto eig = jacobi_eigen(a);
    const double lo = eig.eigenvalues(0);
    const double hi = eig.eigenvalues(eig.eigenvalues.size() - 1);
    const double scale = std::max(std::abs(lo), std::abs(hi));
    const double t = tol.value_or(1e-9 * std::max(1.0, scale));

    Definiteness kind;
    if (scale <= t) kind = Definiteness::Zero;
    else if (hi <= t) kind = Definiteness::NegativeSemiDefinite;
    else if (lo >= -t) kind = Definiteness::PositiveSemiDefinite;
    else kind = Definiteness::Indefinite;
    return {kind, lo, hi};
}

SumOfSquares centered_sum_of_squares(std::span<const Eigen::VectorXd> points) {
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
    const Eigen::Index k = points.front().size();
    for (const auto& p : points) {
        if (p.size() != k) {
            throw Error(ErrorKind::DimensionMismatch, "points of dimension " + std::to_string(k) +
                                                          " and " + std::to_string(p.size()));
        }
    }
    const auto n = static_cast<double>(points.size());
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(k);
    for (const auto& p : points) mean += p;
    mean /= n;

    double spread = 0.0;
    for (const auto& p : points) spread += (p - mean).squaredNorm();

    double pairwise = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) pairwise += (points[i] - points[j]).squaredNorm();

    return {n * spread, pairwise};
}

}  // namespace isoembed
