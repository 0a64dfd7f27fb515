#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "isoembed/metric.hpp"

namespace isoembed {

struct PathFamily { int n = 1; };
struct CycleFamily { int n = 3; };
struct CompleteFamily { int n = 1; };
/// K_{1,3}, points ordered center, leaf, leaf, leaf.
struct ClawFamily {};
/// K_{1,3} plus an edge between the first two leaves.
struct ClawPlusEdgeFamily {};

/// The three neighborhood configurations v, u, z, w of the claw argument:
/// (a) claw, (b) claw plus {u,z}, (c) claw plus {u,z} and {z,w}.
enum class FigureOneConfig { A, B, C };
struct FigureOneFamily { FigureOneConfig config = FigureOneConfig::A; };

/**
 * x_i = ((p_i^2 - q_i^2) / 2, 0) for i = 1..3 and x_4 = (0, z) in the plane,
 * with p_i q_i = z, p_i > q_i >= 1 and p_i = q_i (mod 2). Every distance is an
 * integer and the critical graph is K4 minus an edge.
 */
struct PythagoreanK4eFamily {
    std::int64_t z = 0;
    std::array<std::pair<std::int64_t, std::int64_t>, 3> pairs{};
};

/**
 * Planar points {(0,0)} + {(i,0) : 1 <= i < k} + {(0,j) : 1 <= j <= n-k},
 * listed in that order, 2 <= k <= n-1. The critical graph has the pivot
 * structure with pivot (0,0) at position k.
 */
struct SnkFamily {
    int n = 4;
    int k = 2;
};

/// n standard-normal points in R^dim from a seeded generator, see random_euclidean().
struct RandomEuclideanFamily {
    int n = 1;
    int dim = 1;
    std::uint64_t seed = 0;
};

using FamilySpec = std::variant<PathFamily, CycleFamily, CompleteFamily, ClawFamily, ClawPlusEdgeFamily,
                                FigureOneFamily, PythagoreanK4eFamily, SnkFamily, RandomEuclideanFamily>;

/// Throws BadParameters naming the violated constraint.
MetricSpace generate(const FamilySpec& spec);

/// The unweighted graph behind a graph-based family (path, cycle, complete,
/// claw, claw plus edge, neighborhood configurations). Throws BadParameters for
/// point-set families.
WeightedGraph family_graph(const FamilySpec& spec);

/// Euclidean metric of the rows of `points`.
MetricSpace euclidean_metric(const Eigen::MatrixXd& points, std::vector<std::string> labels = {});

/**
 * Deterministic Gaussian point cloud. Draws come from std::mt19937_64 seeded
 * with `seed`; each normal variate is one Box-Muller cosine branch over two
 * 53-bit uniforms u = (x >> 11) * 2^-53, using 1 - u for the logarithm.
 * Points are filled row by row.
 */
Eigen::MatrixXd random_gaussian_points(int n, int dim, std::uint64_t seed);
MetricSpace random_euclidean(int n, int dim, std::uint64_t seed);

/// Factor pairs (p, q) of z with p > q and p = q (mod 2), largest p first.
/// Throws BadParameters when fewer than three exist.
std::vector<std::pair<std::int64_t, std::int64_t>> pythagorean_pairs(std::int64_t z);

enum class WitnessKind { ClawA, ClawB, ClawC, EvenCycle, OddCycle };

struct WitnessConfig {
    WitnessKind kind = WitnessKind::ClawA;
    int k = 2;  // cycles only: C_{2k} or C_{2k+1}
};

struct PaperWitness {
    FamilySpec family;          // metric the witness applies to
    std::vector<int> vertices;  // support of alpha, in the listed order
    Eigen::VectorXd alpha;      // full length, zero off the support
};

/**
 * The explicit non-embeddability witnesses for the three neighborhood
 * configurations and for cycles. Claw configurations use the point order of
 * FigureOneFamily. EvenCycle(k) uses vertices (0, 2k-1, k-1, k) of C_{2k} with
 * alpha (1,-1,-1,1); OddCycle(k) uses (0, 1, k, k+1) of C_{2k+1} with alpha
 * (1,-1,1,-1). Throws BadParameters for k < 2.
 */
PaperWitness paper_witness(const WitnessConfig& config);

}  // namespace isoembed
