#pragma once

// Exact TVC on underlying paths/cycles (single window [1, T]) and the
// local-search approximation for delta-TVC on paths/cycles, run on the
// combinatorial range space whose hitting sets are exactly the covers.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "tvc/core.hpp"
#include "tvc/oracle.hpp"

namespace tvc {

namespace detail {

// Vertex sequence of the underlying path covering all n vertices, oriented
// from the smaller-id endpoint. Throws TopologyError otherwise.
inline std::vector<int> path_order(const TemporalGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    if (n == 1 && g.edge_count() == 0) return {0};
    if (g.edge_count() != n - 1) throw TopologyError("underlying graph is not a path");
    std::vector<std::vector<int>> nbr(n);
    for (const auto& e : g.edges()) {
        nbr[e.u].push_back(e.v);
        nbr[e.v].push_back(e.u);
    }
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (nbr[v].size() > 2 || nbr[v].empty())
            throw TopologyError("underlying graph is not a path");
        if (nbr[v].size() == 1 && start < 0) start = v;
    }
    if (start < 0) throw TopologyError("underlying graph is not a path");
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (order.size() < static_cast<std::size_t>(n)) {
        int next = -1;
        for (int w : nbr[cur])
            if (w != prev) next = w;
        if (next < 0) throw TopologyError("underlying graph is not a path");
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

// Vertex sequence around the underlying cycle, starting at vertex 0 and
// turning toward its smaller neighbor.
inline std::vector<int> cycle_order(const TemporalGraph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n) throw TopologyError("underlying graph is not a cycle");
    std::vector<std::vector<int>> nbr(n);
    for (const auto& e : g.edges()) {
        nbr[e.u].push_back(e.v);
        nbr[e.v].push_back(e.u);
    }
    for (int v = 0; v < n; ++v)
        if (nbr[v].size() != 2) throw TopologyError("underlying graph is not a cycle");
    std::vector<int> order{0, std::min(nbr[0][0], nbr[0][1])};
    while (order.size() < static_cast<std::size_t>(n)) {
        int cur = order.back(), prev = order[order.size() - 2];
        order.push_back(nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0]);
    }
    if (nbr[order.back()][0] != 0 && nbr[order.back()][1] != 0)
        throw TopologyError("underlying graph is not a cycle");
    return order;
}

inline int edge_index_between(const TemporalGraph& g, int a, int b) {
    for (int e : g.incident_edges(a)) {
        const auto& ed = g.edge(e);
        if (ed.u == b || ed.v == b) return e;
    }
    throw TopologyError("expected edge is missing");
}

inline std::vector<int> shared_labels(const TemporalGraph& g, int e1, int e2) {
    std::vector<int> out;
    std::set_intersection(g.edge(e1).labels.begin(), g.edge(e1).labels.end(),
                          g.edge(e2).labels.begin(), g.edge(e2).labels.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace detail

// Left-to-right greedy sweep; exact for TVC on temporal paths. An uncovered
// edge is covered at its right endpoint, jointly with its successor when the
// two share a time (the smallest shared time; otherwise the smallest label).
inline TemporalVertexSet solve_tvc_path(const TemporalGraph& g) {
    auto order = detail::path_order(g);
    TemporalVertexSet cover;
    bool prev_covered = false;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        int e = detail::edge_index_between(g, order[i], order[i + 1]);
        if (prev_covered) {
            prev_covered = false;
            continue;
        }
        if (i + 2 < order.size()) {
            int next = detail::edge_index_between(g, order[i + 1], order[i + 2]);
            auto shared = detail::shared_labels(g, e, next);
            if (!shared.empty()) {
                cover.insert(order[i + 1], shared.front());
                prev_covered = true;
                continue;
            }
        }
        cover.insert(order[i + 1], g.edge(e).labels.front());
    }
    return cover;
}

// Cycle case via the two auxiliary path instances of the textbook argument:
// a dummy vertex splits the cycle so that an optimum avoiding either of two
// adjacent vertices survives in one of the paths.
inline TemporalVertexSet solve_tvc_cycle(const TemporalGraph& g) {
    auto order = detail::cycle_order(g);
    const int n = g.vertex_count();
    const int dummy = n;
    const int declared = g.lifetime();

    std::vector<TemporalEdge> first, second;
    auto labels_between = [&](int i, int j) {
        return g.edge(detail::edge_index_between(g, order[i], order[j])).labels;
    };
    for (int i = 0; i + 1 < n; ++i)
        first.push_back({order[i], order[i + 1], labels_between(i, i + 1)});
    first.push_back({order[n - 1], dummy, labels_between(n - 1, 0)});

    for (int i = 1; i + 1 < n; ++i)
        second.push_back({order[i], order[i + 1], labels_between(i, i + 1)});
    second.push_back({order[n - 1], dummy, labels_between(n - 1, 0)});
    second.push_back({dummy, order[0], labels_between(0, 1)});

    TemporalVertexSet best;
    bool have = false;
    for (auto* edges : {&first, &second}) {
        TemporalGraph aux(n + 1, *edges, declared);
        auto sol = solve_tvc_path(aux);
        TemporalVertexSet mapped;
        for (const auto& a : sol) mapped.insert(a.v == dummy ? order[0] : a.v, a.t);
        if (!have || mapped.size() < best.size()) {
            best = std::move(mapped);
            have = true;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Range space and local search
// ---------------------------------------------------------------------------

struct RangeSpace {
    struct Range {
        int edge = 0;
        int window = 0;
        std::vector<int> point_ids;
    };
    std::vector<VertexAppearance> points;  // sorted by (t, v)
    std::vector<Range> ranges;

    std::optional<int> point_id(const VertexAppearance& a) const {
        auto it = std::lower_bound(points.begin(), points.end(), a,
                                   [](const VertexAppearance& x, const VertexAppearance& y) {
                                       return x.t != y.t ? x.t < y.t : x.v < y.v;
                                   });
        if (it == points.end() || !(*it == a)) return std::nullopt;
        return static_cast<int>(it - points.begin());
    }
};

// One range per (edge, window) obligation; a set hits every range iff it is
// a delta-TVC. Restricted to underlying paths/cycles, where the local-search
// guarantee applies.
inline RangeSpace build_range_space(const TemporalGraph& g, int delta) {
    try {
        detail::path_order(g);
    } catch (const TopologyError&) {
        detail::cycle_order(g);  // throws if neither
    }
    RangeSpace space;
    for (const auto& a : candidate_appearances(g)) space.points.push_back(a);
    std::sort(space.points.begin(), space.points.end(),
              [](const VertexAppearance& a, const VertexAppearance& b) {
                  return a.t != b.t ? a.t < b.t : a.v < b.v;
              });
    const int wcount = g.window_count(delta);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        for (int i = 1; i <= wcount; ++i) {
            if (!g.edge_active_in(e, i, i + delta - 1)) continue;
            RangeSpace::Range range{e, i, {}};
            for (int t = g.next_label(e, i); t != 0 && t <= i + delta - 1;
                 t = g.next_label(e, t + 1)) {
                range.point_ids.push_back(*space.point_id({ed.u, t}));
                range.point_ids.push_back(*space.point_id({ed.v, t}));
            }
            std::sort(range.point_ids.begin(), range.point_ids.end());
            space.ranges.push_back(std::move(range));
        }
    }
    return space;
}

struct LocalSearchConfig {
    int swap_size = 3;         // p
    int max_rounds = 10'000;
    std::uint64_t seed = 0;    // 0 = lexicographic greedy ties, else randomized
};

struct LocalSearchResult {
    TemporalVertexSet cover;
    bool locally_optimal = false;
    int rounds = 0;
};

namespace detail {

struct SwapSearch {
    const RangeSpace& space;
    std::vector<std::vector<std::uint64_t>> point_mask;
    std::size_t words;

    explicit SwapSearch(const RangeSpace& s) : space(s) {
        words = (space.ranges.size() + 63) / 64;
        point_mask.assign(space.points.size(), std::vector<std::uint64_t>(std::max<std::size_t>(words, 1), 0));
        for (std::size_t r = 0; r < space.ranges.size(); ++r)
            for (int p : space.ranges[r].point_ids) point_mask[p][r / 64] |= 1ull << (r % 64);
    }

    bool covers(const std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& need) const {
        for (std::size_t w = 0; w < need.size(); ++w)
            if ((acc[w] & need[w]) != need[w]) return false;
        return true;
    }

    // First subset S of `sol` with |S| <= p whose removal can be repaired by
    // fewer than |S| points; subsets and replacements are enumerated by
    // increasing size, then lexicographically.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> improving_swap(
        const std::vector<int>& sol, int p) const {
        std::vector<int> hit_count(space.ranges.size(), 0);
        for (int s : sol)
            for (std::size_t r = 0; r < space.ranges.size(); ++r)
                if (point_mask[s][r / 64] >> (r % 64) & 1) ++hit_count[r];

        std::vector<char> in_sol(space.points.size(), 0);
        for (int s : sol) in_sol[s] = 1;

        std::vector<int> subset;
        std::vector<std::uint64_t> missing(std::max<std::size_t>(words, 1), 0);
        std::optional<std::pair<std::vector<int>, std::vector<int>>> found;

        auto try_subset = [&]() -> bool {
            // ranges covered only by `subset` members
            std::fill(missing.begin(), missing.end(), 0);
            std::vector<int> local = hit_count;
            for (int s : subset)
                for (std::size_t r = 0; r < space.ranges.size(); ++r)
                    if (point_mask[s][r / 64] >> (r % 64) & 1)
                        if (--local[r] == 0) missing[r / 64] |= 1ull << (r % 64);
            bool any_missing = false;
            for (auto w : missing) any_missing |= w != 0;
            if (!any_missing) {
                found = {{subset, {}}};
                return true;
            }
            // candidate replacement points must hit something missing
            std::vector<int> useful;
            for (std::size_t q = 0; q < space.points.size(); ++q) {
                if (in_sol[q]) continue;
                for (std::size_t w = 0; w < words; ++w)
                    if (point_mask[q][w] & missing[w]) {
                        useful.push_back(static_cast<int>(q));
                        break;
                    }
            }
            int max_r = static_cast<int>(subset.size()) - 1;
            std::vector<int> repl;
            std::vector<std::uint64_t> acc(std::max<std::size_t>(words, 1), 0);
            std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int left) -> bool {
                if (covers(acc, missing)) {
                    found = {{subset, repl}};
                    return true;
                }
                if (left == 0) return false;
                for (std::size_t j = from; j < useful.size(); ++j) {
                    auto saved = acc;
                    for (std::size_t w = 0; w < words; ++w) acc[w] |= point_mask[useful[j]][w];
                    repl.push_back(useful[j]);
                    if (rec(j + 1, left - 1)) return true;
                    repl.pop_back();
                    acc = saved;
                }
                return false;
            };
            for (int rsize = 0; rsize <= max_r; ++rsize)
                if (rec(0, rsize)) return true;
            return false;
        };

        std::function<bool(std::size_t, int)> choose = [&](std::size_t from, int left) -> bool {
            if (left == 0) return try_subset();
            for (std::size_t j = from; j < sol.size(); ++j) {
                subset.push_back(sol[j]);
                if (choose(j + 1, left - 1)) return true;
                subset.pop_back();
            }
            return false;
        };
        for (int s = 1; s <= p && s <= static_cast<int>(sol.size()); ++s)
            if (choose(0, s)) return found;
        return std::nullopt;
    }

    std::vector<int> greedy(std::uint64_t seed) const {
        std::vector<std::uint64_t> unhit(std::max<std::size_t>(words, 1), 0);
        for (std::size_t r = 0; r < space.ranges.size(); ++r) unhit[r / 64] |= 1ull << (r % 64);
        std::mt19937_64 rng(seed);
        std::vector<int> sol;
        auto gain = [&](int q) {
            int c = 0;
            for (std::size_t w = 0; w < words; ++w)
                c += __builtin_popcountll(point_mask[q][w] & unhit[w]);
            return c;
        };
        while (true) {
            bool empty = true;
            for (auto w : unhit) empty &= w == 0;
            if (empty) break;
            int best = -1, best_gain = 0;
            std::vector<int> ties;
            for (std::size_t q = 0; q < space.points.size(); ++q) {
                int gn = gain(static_cast<int>(q));
                if (gn > best_gain) {
                    best_gain = gn;
                    best = static_cast<int>(q);
                    ties = {best};
                } else if (gn == best_gain && gn > 0) {
                    ties.push_back(static_cast<int>(q));
                }
            }
            if (best < 0) throw InfeasibleError("range with no points");
            int pick = (seed == 0) ? best : ties[rng() % ties.size()];
            sol.push_back(pick);
            for (std::size_t w = 0; w < words; ++w) unhit[w] &= ~point_mask[pick][w];
        }
        std::sort(sol.begin(), sol.end());
        return sol;
    }
};

}  // namespace detail

inline bool is_locally_optimal(const RangeSpace& space, const std::vector<int>& sol, int p) {
    detail::SwapSearch search(space);
    return !search.improving_swap(sol, p).has_value();
}

// Greedy start, then first-improvement swaps of up to p points for fewer
// points until p-locally optimal or the round cap trips. The output always
// hits every range.
inline LocalSearchResult local_search(const RangeSpace& space, const LocalSearchConfig& cfg = {},
                                      const std::vector<int>* initial = nullptr) {
    if (cfg.swap_size < 1) throw InputError("swap size must be >= 1");
    detail::SwapSearch search(space);
    std::vector<int> sol = initial ? *initial : search.greedy(cfg.seed);

    LocalSearchResult result;
    while (result.rounds < cfg.max_rounds) {
        auto swap = search.improving_swap(sol, cfg.swap_size);
        if (!swap) {
            result.locally_optimal = true;
            break;
        }
        const auto& [out, in] = *swap;
        std::vector<int> next;
        for (int s : sol)
            if (std::find(out.begin(), out.end(), s) == out.end()) next.push_back(s);
        next.insert(next.end(), in.begin(), in.end());
        std::sort(next.begin(), next.end());
        sol = std::move(next);
        ++result.rounds;
    }
    for (int s : sol) result.cover.insert(space.points[s]);
    return result;
}

// epsilon -> swap size for the approximation-scheme interface.
inline int swap_size_for_epsilon(double epsilon) {
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    return std::max(1, static_cast<int>(std::ceil(1.0 / (epsilon * epsilon))));
}

}  // namespace tvc
