#include "isoembed/schoenberg.hpp"

#include <algorithm>
#include <cmath>

namespace isoembed {

SymmetricMatrix squared_distance_matrix(const MetricSpace& m) {
    return SymmetricMatrix(m.matrix().cwiseProduct(m.matrix()));
}

double quadratic_form(const SymmetricMatrix& d, const Eigen::VectorXd& alpha) {
    if (alpha.size() != d.size()) {
        throw Error(ErrorKind::DimensionMismatch, "alpha has length " + std::to_string(alpha.size()) +
                                                      ", matrix is " + std::to_string(d.size()));
    }
    return alpha.dot(d.matrix() * alpha);
}

EmbeddabilityReport is_embeddable(const MetricSpace& m, double tol) {
    const SymmetricMatrix d = squared_distance_matrix(m);
    const auto eig = jacobi_eigen(double_center(d));
    const Eigen::Index top = eig.eigenvalues.size() - 1;

    EmbeddabilityReport report;
    report.lambda_max = eig.eigenvalues(top);
    const double threshold = tol * std::max(1.0, d.matrix().maxCoeff());
    report.embeddable = report.lambda_max <= threshold;
    if (!report.embeddable) {
        Eigen::VectorXd alpha = eig.eigenvectors.col(top);
        // Remove the rounding-level component along the all-ones vector.
        alpha.array() -= alpha.mean();
        alpha.normalize();
        report.witness = std::move(alpha);
    }
    return report;
}

Kernel kernel_at_base(const MetricSpace& m, int base) {
    const int n = m.size();
    if (base < 0 || base >= n) {
        throw Error(ErrorKind::IndexOutOfRange, "base point " + std::to_string(base) + " outside 0.." +
                                                    std::to_string(n - 1));
    }
    Eigen::MatrixXd k(n, n);
    for (int x = 0; x < n; ++x) {
        const double dx = m(x, base) * m(x, base);
        for (int y = 0; y < n; ++y) {
            const double dy = m(y, base) * m(y, base);
            k(x, y) = dx + dy - m(x, y) * m(x, y);
        }
    }
    return {base, SymmetricMatrix(k)};
}

std::vector<double> kernel_trace_profile(const MetricSpace& m) {
    std::vector<double> traces;
    traces.reserve(static_cast<std::size_t>(m.size()));
    for (int x = 0; x < m.size(); ++x) traces.push_back(kernel_at_base(m, x).k.trace());
    return traces;
}

Embedding embed_coordinates(const MetricSpace& m, int base, double tol) {
    const Kernel kernel = kernel_at_base(m, base);
    const SymmetricMatrix gram(0.5 * kernel.k.matrix());
    const auto eig = jacobi_eigen(gram);
    const double threshold = tol * std::max(1.0, gram.matrix().cwiseAbs().maxCoeff());

    if (eig.eigenvalues(0) < -threshold) {
        throw Error(ErrorKind::NotEmbeddable,
                    "kernel at base " + std::to_string(base) + " has eigenvalue " +
                        std::to_string(eig.eigenvalues(0)) + "; the metric is not Hilbert-embeddable");
    }

    const int n = m.size();
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        if (eig.eigenvalues(i) > threshold) kept.push_back(i);
    }

    Embedding e;
    e.base = base;
    e.coords.resize(n, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        const Eigen::Index i = kept[c];
        e.coords.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors.col(i) * std::sqrt(eig.eigenvalues(i));
    }
    double worst = 0.0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            worst = std::max(worst, std::abs((e.coords.row(x) - e.coords.row(y)).norm() - m(x, y)));
    e.residual = worst;
    return e;
}

double verify_isometry(const Embedding& e, const MetricSpace& m) {
    const int n = m.size();
    if (e.coords.rows() != n) {
        throw Error(ErrorKind::SizeMismatch, "embedding has " + std::to_string(e.coords.rows()) +
                                                 " points, metric has " + std::to_string(n));
    }
    double worst = 0.0;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            const double err = std::abs((e.coords.row(x) - e.coords.row(y)).norm() - m(x, y));
            worst = std::max(worst, err / std::max(m(x, y), 1e-12));
        }
    }
    return worst;
}

}  // namespace isoembed
