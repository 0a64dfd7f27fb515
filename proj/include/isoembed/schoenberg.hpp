#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "isoembed/metric.hpp"
#include "isoembed/symmat.hpp"

namespace isoembed {

/// D with D(x,y) = d(x,y)^2.
SymmetricMatrix squared_distance_matrix(const MetricSpace& m);

struct EmbeddabilityReport {
    bool embeddable = true;
    /// Largest eigenvalue of the doubly centered squared-distance matrix.
    double lambda_max = 0.0;
    /// Present iff not embeddable: unit alpha with sum(alpha) = 0 and alpha^T D alpha > 0.
    std::optional<Eigen::VectorXd> witness;
};

/**
 * Hilbert-space embeddability test.
 *
 * The space embeds iff the centered squared-distance matrix M is negative
 * semidefinite, i.e. lambda_max(M) <= tol * max(1, max D). Otherwise the
 * eigenvector of lambda_max is returned as witness; since M annihilates the
 * all-ones vector the witness is orthogonal to it and alpha^T D alpha equals
 * lambda_max.
 */
EmbeddabilityReport is_embeddable(const MetricSpace& m, double tol = kDefaultTol);

/// alpha^T D alpha for an arbitrary coefficient vector.
double quadratic_form(const SymmetricMatrix& d, const Eigen::VectorXd& alpha);

struct Kernel {
    int base = 0;
    SymmetricMatrix k;
};

/// K(x,y) = d(x,x0)^2 + d(y,x0)^2 - d(x,y)^2. Row and column x0 vanish.
Kernel kernel_at_base(const MetricSpace& m, int base);

/// trace(kernel_at_base(m, x)) for every x in point order.
std::vector<double> kernel_trace_profile(const MetricSpace& m);

struct Embedding {
    int base = 0;
    Eigen::MatrixXd coords;  // n x rank, row x is the image of point x
    double residual = 0.0;   // max |‖coords[x] - coords[y]‖ - d(x,y)|

    int rank() const noexcept { return static_cast<int>(coords.cols()); }
};

/**
 * Coordinates realizing the metric, anchored so that the base point sits at
 * the origin. K/2 = U diag(lambda) U^T is factored with eigenvalues in
 * [-tol', 0] clamped to zero, where tol' = tol * max(1, max |K/2|); kept
 * dimensions are those with lambda > tol'. Throws NotEmbeddable when some
 * eigenvalue is below -tol'.
 */
Embedding embed_coordinates(const MetricSpace& m, int base = 0, double tol = kDefaultTol);

/// max over pairs of |‖c_x - c_y‖ - d(x,y)| / max(d(x,y), 1e-12).
double verify_isometry(const Embedding& e, const MetricSpace& m);

}  // namespace isoembed
