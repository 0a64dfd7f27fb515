#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "isoembed/metric.hpp"
#include "isoembed/symmat.hpp"

namespace isoembed {

// Everything in this header treats graphs as unweighted: edge weights are
// ignored, degrees count neighbors and vol(G) is the sum of degrees.

/// A map f : V -> X given by point indices of the target metric.
struct HarmonicMap {
    WeightedGraph graph;
    MetricSpace target;
    std::vector<int> assignment;

    /// Validates that the assignment is total and in range.
    HarmonicMap(WeightedGraph g, MetricSpace x, std::vector<int> f);
};

/**
 * Real-valued maps over the finite submetric of the real line spanned by
 * their values. Both maps share one target, so they can be compared with
 * orthogonality_defect().
 */
std::pair<HarmonicMap, HarmonicMap> real_valued_maps(const WeightedGraph& g, std::span<const double> f1,
                                                     std::span<const double> f2);

/// L = I - T^{-1/2} A T^{-1/2}. Throws IsolatedVertex.
SymmetricMatrix normalized_laplacian(const WeightedGraph& g);

/// Second-smallest eigenvalue of the normalized Laplacian.
double classic_lambda2(const WeightedGraph& g);

/**
 * vol(G) * sum_{u~v} d(f u, f v)^2 / sum_{u<v} d(f u, f v)^2 d_u d_v.
 *
 * The denominator runs over unordered pairs; with that convention the
 * quotient of a real-valued map equals the normalized Laplacian Rayleigh
 * quotient of T^{1/2}(f - fbar). Throws ConstantMap.
 */
double geometric_rayleigh(const HarmonicMap& h);

struct GeometricFiedlerResult {
    double value = 0.0;
    std::vector<int> argmin;
    std::uint64_t maps_searched = 0;
};

inline constexpr std::uint64_t kDefaultMapBudget = 10'000'000;

/**
 * Exact minimum of geometric_rayleigh over all non-constant maps V -> X.
 * Maps are visited in lexicographic order (vertex 0 most significant); the
 * first minimizer wins ties. Throws TargetTooSmall when |X| = 1 and
 * BudgetExceeded when |X|^|V| > budget.
 */
GeometricFiedlerResult geometric_fiedler(const WeightedGraph& g, const MetricSpace& x,
                                         std::uint64_t budget = kDefaultMapBudget);

/// min over proper nonempty S of vol(G) |dS| / (vol(S) vol(V - S)).
double sparsest_cut_oracle(const WeightedGraph& g);

/**
 * sum_{u,v} d_u d_v / (2 vol) d(f1 v, f2 u)^2 - sum_v d_v / 2 d(f1 v, f2 v)^2,
 * the first sum over ordered pairs including u = v. Zero means f1 and f2 are
 * orthogonal; for real-valued centered maps it equals sum_v d_v f1(v) f2(v).
 */
double orthogonality_defect(const HarmonicMap& f1, const HarmonicMap& f2);

}  // namespace isoembed
