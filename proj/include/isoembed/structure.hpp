#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "isoembed/metric.hpp"

namespace isoembed {

enum class StructureTag {
    Path,
    Complete,
    Cycle,
    FourPointPath,
    K4,
    K4MinusE,
    Claw,
    ClawPlusEdge,
    C4,
    Other,
};

std::string_view tag_name(StructureTag tag) noexcept;

/**
 * Shape of a graph plus data that lets a caller re-check the claim.
 *
 *  - Path, FourPointPath: `order` walks the path.
 *  - Cycle, C4: `order` walks the cycle.
 *  - Complete, K4: `order` is 0..n-1.
 *  - K4MinusE: `missing_edges` holds the single absent pair.
 *  - Claw: `order` is center, then leaves.
 *  - ClawPlusEdge: `order` is center, the two adjacent leaves, the pendant leaf.
 *  - Other: no certificate.
 */
struct StructureClass {
    StructureTag tag = StructureTag::Other;
    std::vector<int> order;
    std::vector<std::pair<int, int>> missing_edges;
};

/// Re-checks a certificate against the adjacency relation of g.
bool certificate_holds(const StructureClass& c, const WeightedGraph& g);

/// Path / Complete / Cycle / Other, ignoring weights. K1 and K2 report Path.
StructureClass classify_unweighted(const WeightedGraph& g);

/// Shape of the critical graph of a 4-point metric.
StructureClass classify_4point(const MetricSpace& m, double tol = kDefaultTol);

struct TwoCut {
    int u = 0;
    int v = 0;
    bool adjacent = false;
};

struct ConnectivityReport {
    bool is_path = false;
    bool is_2_connected = false;
    bool is_3_connected = false;
    /// Every vertex pair whose removal disconnects the rest.
    std::vector<TwoCut> two_cuts;
};

ConnectivityReport connectivity_report(const WeightedGraph& g);

/// Articulation points in ascending order.
std::vector<int> articulation_points(const WeightedGraph& g);

/**
 * Hamiltonian ordering v_1..v_n and pivot position k (1-based, 2 <= k <= n-1)
 * with v_i ~ v_j iff |i - j| = 1 or i < k < j.
 */
struct PivotDecomposition {
    std::vector<int> order;
    int pivot = 0;
};

bool pivot_structure_holds(const PivotDecomposition& p, const WeightedGraph& g);

/// Finds a pivot decomposition of g (weights ignored), preferring the
/// smallest k. Returns nullopt when none exists, or when g is disconnected
/// or has fewer than 4 vertices.
std::optional<PivotDecomposition> match_pivot_structure(const WeightedGraph& g);

/// A vertex of degree > 2 whose closed neighborhood is not a clique, if any.
std::optional<int> incomplete_neighborhood_vertex(const WeightedGraph& g);

/// Graph on n vertices whose edges are the set bits of `mask`, bit b standing
/// for the b-th pair in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
WeightedGraph graph_from_mask(int n, std::uint64_t mask);

struct Counterexample {
    int n = 0;
    std::uint64_t mask = 0;
    bool embeddable = false;
    StructureTag tag = StructureTag::Other;
    double lambda_max = 0.0;
};

struct TheoremCheck {
    std::vector<Counterexample> counterexamples;  // sorted by (n, mask)
    std::uint64_t masks_scanned = 0;
    std::uint64_t graphs_checked = 0;  // connected ones
};

/// Called with (n, masks done for this n, masks for this n).
using ProgressFn = std::function<void(int, std::uint64_t, std::uint64_t)>;

inline constexpr int kMaxTheoremVertices = 7;

/**
 * Runs the embeddability test on the shortest-path metric of every connected
 * graph on 1..max_n vertices and reports each graph where the spectral verdict
 * disagrees with "path or complete". Throws BudgetExceeded for max_n > 7.
 * `threads` = 0 uses the hardware concurrency.
 */
TheoremCheck verify_unweighted_theorem(int max_n, double tol = kDefaultTol, ProgressFn progress = {},
                                       unsigned threads = 0);

}  // namespace isoembed
