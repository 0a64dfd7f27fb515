#include "isoembed/structure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "isoembed/schoenberg.hpp"

namespace isoembed {

std::string_view tag_name(StructureTag tag) noexcept {
    switch (tag) {
        case StructureTag::Path: return "Path";
        case StructureTag::Complete: return "Complete";
        case StructureTag::Cycle: return "Cycle";
        case StructureTag::FourPointPath: return "FourPointPath";
        case StructureTag::K4: return "K4";
        case StructureTag::K4MinusE: return "K4MinusE";
        case StructureTag::Claw: return "Claw";
        case StructureTag::ClawPlusEdge: return "ClawPlusEdge";
        case StructureTag::C4: return "C4";
        case StructureTag::Other: return "Other";
    }
    return "Unknown";
}

namespace {

void require_connected(const WeightedGraph& g) {
    if (int v = g.stranded_vertex(); v >= 0) {
        throw Error(ErrorKind::DisconnectedGraph, "vertex " + std::to_string(v) +
                                                      " is unreachable from vertex 0");
    }
}

// Ordering of `s` along the path G[s] starting at its smaller endpoint, or
// empty when G[s] is not an induced path.
std::vector<int> induced_path_order(const WeightedGraph& g, const std::vector<int>& s) {
    if (s.size() <= 1) return s;
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    for (int v : s) in[v] = 1;
    std::size_t edge_ends = 0;
    int start = -1;
    for (int v : s) {
        int deg = 0;
        for (int u : g.neighbors(v)) deg += in[u];
        if (deg == 0 || deg > 2) return {};
        if (deg == 1 && (start < 0 || v < start)) start = v;
        edge_ends += static_cast<std::size_t>(deg);
    }
    if (start < 0 || edge_ends != 2 * (s.size() - 1)) return {};

    std::vector<int> order{start};
    int prev = -1;
    int cur = start;
    while (order.size() < s.size()) {
        int next = -1;
        for (int u : g.neighbors(cur)) {
            if (in[u] && u != prev) {
                next = u;
                break;
            }
        }
        if (next < 0) return {};
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return order;
}

std::vector<int> all_vertices(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

// Walk of a connected 2-regular graph starting 0 -> smaller neighbor.
std::vector<int> cycle_order(const WeightedGraph& g) {
    std::vector<int> order{0};
    int prev = -1;
    int cur = 0;
    while (static_cast<int>(order.size()) < g.size()) {
        const auto& nb = g.neighbors(cur);
        const int next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return order;
}

std::vector<std::pair<int, int>> non_edges(const WeightedGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool is_permutation_of_vertices(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool remainder_connected(const WeightedGraph& g, int skip_a, int skip_b) {
    const int n = g.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[skip_a] = seen[skip_b] = 1;
    int start = -1;
    int remaining = 0;
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) {
            ++remaining;
            if (start < 0) start = v;
        }
    }
    if (remaining == 0) return true;
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == remaining;
}

}  // namespace

bool certificate_holds(const StructureClass& c, const WeightedGraph& g) {
    const int n = g.size();
    const std::size_t m = g.edge_count();
    const std::size_t full = static_cast<std::size_t>(n) * (n - 1) / 2;
    const auto& o = c.order;
    switch (c.tag) {
        case StructureTag::Path:
        case StructureTag::FourPointPath: {
            if (c.tag == StructureTag::FourPointPath && n != 4) return false;
            if (!is_permutation_of_vertices(o, n) || m + 1 != static_cast<std::size_t>(n)) return false;
            for (int i = 0; i + 1 < n; ++i)
                if (!g.adjacent(o[i], o[i + 1])) return false;
            return true;
        }
        case StructureTag::Cycle:
        case StructureTag::C4: {
            if (c.tag == StructureTag::C4 && n != 4) return false;
            if (n < 3 || !is_permutation_of_vertices(o, n) || m != static_cast<std::size_t>(n)) return false;
            for (int i = 0; i < n; ++i)
                if (!g.adjacent(o[i], o[(i + 1) % n])) return false;
            return true;
        }
        case StructureTag::Complete:
        case StructureTag::K4:
            if (c.tag == StructureTag::K4 && n != 4) return false;
            return m == full;
        case StructureTag::K4MinusE:
            return n == 4 && m == 5 && c.missing_edges.size() == 1 &&
                   !g.adjacent(c.missing_edges[0].first, c.missing_edges[0].second);
        case StructureTag::Claw:
            return n == 4 && m == 3 && is_permutation_of_vertices(o, 4) && g.adjacent(o[0], o[1]) &&
                   g.adjacent(o[0], o[2]) && g.adjacent(o[0], o[3]);
        case StructureTag::ClawPlusEdge:
            return n == 4 && m == 4 && is_permutation_of_vertices(o, 4) && g.adjacent(o[0], o[1]) &&
                   g.adjacent(o[0], o[2]) && g.adjacent(o[0], o[3]) && g.adjacent(o[1], o[2]);
        case StructureTag::Other:
            return true;
    }
    return false;
}

StructureClass classify_unweighted(const WeightedGraph& g) {
    require_connected(g);
    const int n = g.size();
    const std::size_t m = g.edge_count();

    if (m + 1 == static_cast<std::size_t>(n)) {
        auto order = induced_path_order(g, all_vertices(n));
        if (!order.empty()) return {StructureTag::Path, std::move(order), {}};
    }
    if (m == static_cast<std::size_t>(n) * (n - 1) / 2) return {StructureTag::Complete, all_vertices(n), {}};
    if (m == static_cast<std::size_t>(n)) {
        bool regular = true;
        for (int v = 0; v < n; ++v) regular = regular && g.degree(v) == 2;
        if (regular) return {StructureTag::Cycle, cycle_order(g), {}};
    }
    return {};
}

StructureClass classify_4point(const MetricSpace& m, double tol) {
    if (m.size() != 4) {
        throw Error(ErrorKind::WrongSize, "expected 4 points, got " + std::to_string(m.size()));
    }
    const WeightedGraph g = critical_graph(m, tol).graph();
    std::vector<int> by_degree[4];
    for (int v = 0; v < 4; ++v) by_degree[g.degree(v)].push_back(v);

    switch (g.edge_count()) {
        case 3:
            if (by_degree[2].size() == 2) return {StructureTag::FourPointPath, induced_path_order(g, all_vertices(4)), {}};
            if (by_degree[3].size() == 1) {
                std::vector<int> order{by_degree[3][0]};
                order.insert(order.end(), by_degree[1].begin(), by_degree[1].end());
                return {StructureTag::Claw, std::move(order), {}};
            }
            break;
        case 4:
            if (by_degree[2].size() == 4) return {StructureTag::C4, cycle_order(g), {}};
            if (by_degree[3].size() == 1) {
                std::vector<int> order{by_degree[3][0], by_degree[2][0], by_degree[2][1], by_degree[1][0]};
                return {StructureTag::ClawPlusEdge, std::move(order), {}};
            }
            break;
        case 5: return {StructureTag::K4MinusE, {}, non_edges(g)};
        case 6: return {StructureTag::K4, all_vertices(4), {}};
        default: break;
    }
    return {};
}

std::vector<int> articulation_points(const WeightedGraph& g) {
    const int n = g.size();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> cut(static_cast<std::size_t>(n), 0);
    int timer = 0;

    auto dfs = [&](auto&& self, int v, int parent) -> void {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (u == parent) continue;
            if (disc[u] >= 0) {
                low[v] = std::min(low[v], disc[u]);
                continue;
            }
            ++children;
            self(self, u, v);
            low[v] = std::min(low[v], low[u]);
            if (parent >= 0 && low[u] >= disc[v]) cut[v] = 1;
        }
        if (parent < 0 && children > 1) cut[v] = 1;
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(dfs, v, -1);

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

ConnectivityReport connectivity_report(const WeightedGraph& g) {
    require_connected(g);
    const int n = g.size();
    ConnectivityReport r;
    r.is_path = classify_unweighted(g).tag == StructureTag::Path;
    r.is_2_connected = n >= 3 && articulation_points(g).empty();
    if (n >= 4) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!remainder_connected(g, u, v)) r.two_cuts.push_back({u, v, g.adjacent(u, v)});
    }
    r.is_3_connected = n >= 4 && r.is_2_connected && r.two_cuts.empty();
    return r;
}

bool pivot_structure_holds(const PivotDecomposition& p, const WeightedGraph& g) {
    const int n = g.size();
    if (!is_permutation_of_vertices(p.order, n) || p.pivot < 2 || p.pivot > n - 1) return false;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const bool expected = j - i == 1 || (i < p.pivot && p.pivot < j);
            if (g.adjacent(p.order[i - 1], p.order[j - 1]) != expected) return false;
        }
    }
    return true;
}

std::optional<PivotDecomposition> match_pivot_structure(const WeightedGraph& g) {
    const int n = g.size();
    if (n < 4 || !g.is_connected()) return std::nullopt;

    std::optional<PivotDecomposition> best;
    for (int pivot = 0; pivot < n; ++pivot) {
        if (g.degree(pivot) != 2) continue;

        // Co-components of G - pivot: components of its complement. Any two
        // of them are completely joined in G, so each lies on one side.
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (s == pivot || comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int u = 0; u < n; ++u) {
                    if (u == pivot || u == v || comp[u] >= 0 || g.adjacent(u, v)) continue;
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
            }
            ++ncomp;
        }
        if (ncomp < 2 || ncomp > 20) continue;

        const int left_nb = g.neighbors(pivot)[0];
        const int right_nb = g.neighbors(pivot)[1];
        for (std::uint32_t mask = 1; mask + 1 < (1u << ncomp); ++mask) {
            std::vector<int> a, b;
            for (int v = 0; v < n; ++v) {
                if (v == pivot) continue;
                ((mask >> comp[v]) & 1u ? a : b).push_back(v);
            }
            const bool a_has_left = std::find(a.begin(), a.end(), left_nb) != a.end();
            const int a_nb = a_has_left ? left_nb : right_nb;
            const int b_nb = a_has_left ? right_nb : left_nb;
            if (std::find(a.begin(), a.end(), a_nb) == a.end() || std::find(b.begin(), b.end(), b_nb) == b.end())
                continue;

            auto pa = induced_path_order(g, a);
            auto pb = induced_path_order(g, b);
            if (pa.empty() || pb.empty()) continue;
            // A runs toward the pivot, B away from it.
            if (pa.front() == a_nb) std::reverse(pa.begin(), pa.end());
            if (pb.back() == b_nb) std::reverse(pb.begin(), pb.end());
            if (pa.back() != a_nb || pb.front() != b_nb) continue;

            PivotDecomposition cand;
            cand.order = std::move(pa);
            cand.order.push_back(pivot);
            cand.order.insert(cand.order.end(), pb.begin(), pb.end());
            cand.pivot = static_cast<int>(a.size()) + 1;
            if (!pivot_structure_holds(cand, g)) continue;
            if (!best || cand.pivot < best->pivot) best = std::move(cand);
        }
    }
    return best;
}

std::optional<int> incomplete_neighborhood_vertex(const WeightedGraph& g) {
    for (int v = 0; v < g.size(); ++v) {
        if (g.degree(v) <= 2) continue;
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j])) return v;
    }
    return std::nullopt;
}

WeightedGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) edges.push_back({u, v, 1.0});
    return WeightedGraph(n, std::move(edges));
}

namespace {

bool mask_connected(int n, std::uint64_t mask) {
    std::uint32_t adj[kMaxTheoremVertices] = {};
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1u) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
        }
    }
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1u);
}

}  // namespace

TheoremCheck verify_unweighted_theorem(int max_n, double tol, ProgressFn progress, unsigned threads) {
    if (max_n > kMaxTheoremVertices) {
        throw Error(ErrorKind::BudgetExceeded, "exhaustive enumeration is limited to " +
                                                   std::to_string(kMaxTheoremVertices) + " vertices");
    }
    if (max_n < 1) throw Error(ErrorKind::BadParameters, "max_n must be at least 1");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    TheoremCheck result;
    std::mutex merge;
    constexpr std::uint64_t kBlock = 4096;

    for (int n = 1; n <= max_n; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
        std::atomic<std::uint64_t> next_block{0}, done{0}, connected{0};
        auto last_report = std::chrono::steady_clock::now();

        auto work = [&](bool reporter) {
            std::vector<Counterexample> local;
            std::uint64_t local_connected = 0;
            for (std::uint64_t blk; (blk = next_block.fetch_add(1)) < blocks;) {
                const std::uint64_t hi = std::min(total, (blk + 1) * kBlock);
                for (std::uint64_t mask = blk * kBlock; mask < hi; ++mask) {
                    if (!mask_connected(n, mask)) continue;
                    ++local_connected;
                    const WeightedGraph g = graph_from_mask(n, mask);
                    const auto report = is_embeddable(shortest_path_metric(g), tol);
                    const auto cls = classify_unweighted(g);
                    const bool predicted = cls.tag == StructureTag::Path || cls.tag == StructureTag::Complete;
                    if (report.embeddable != predicted)
                        local.push_back({n, mask, report.embeddable, cls.tag, report.lambda_max});
                }
                const auto finished = done.fetch_add(hi - blk * kBlock) + (hi - blk * kBlock);
                if (reporter && progress) {
                    const auto now = std::chrono::steady_clock::now();
                    if (now - last_report > std::chrono::seconds(2)) {
                        progress(n, finished, total);
                        last_report = now;
                    }
                }
            }
            connected += local_connected;
            std::lock_guard lock(merge);
            result.counterexamples.insert(result.counterexamples.end(), local.begin(), local.end());
        };

        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, false);
        work(true);
        for (auto& t : pool) t.join();

        result.masks_scanned += total;
        result.graphs_checked += connected.load();
        if (progress) progress(n, total, total);
    }

    std::sort(result.counterexamples.begin(), result.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return std::pair(a.n, a.mask) < std::pair(b.n, b.mask);
              });
    return result;
}

}  // namespace isoembed
