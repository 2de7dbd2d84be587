#pragma once

// Branching search for covers of size <= k. Takes the earliest uncovered
// (edge, window) obligation and branches over the at most 2*delta vertex
// appearances that can cover it.

#include <cstdint>

#include "tvc/core.hpp"

namespace tvc {

struct FptOptions {
    bool dominance_prune = false;      // skip branch choices strictly covered by a sibling
    std::uint64_t node_budget = 0;     // 0 = unlimited; exceeded -> GuardError
};

struct FptStats {
    std::uint64_t nodes = 0;
    int max_branch = 0;
};

namespace detail {

struct Obligation {
    int edge;
    int window;
};

// Earliest uncovered obligation at or after window `from`, scanning windows
// ascending and edges in file order.
inline std::optional<Obligation> first_violation(const TemporalGraph& g, int delta,
                                                 const std::vector<VertexAppearance>& chosen,
                                                 const PartialBounds* bounds, int from) {
    const int wcount = g.window_count(delta);
    for (int i = from; i <= wcount; ++i) {
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [lo, hi] = resolve_bounds(bounds, e, wcount);
            if (i < lo || i > hi) continue;
            if (!g.edge_active_in(e, i, i + delta - 1)) continue;
            bool covered = false;
            for (const auto& a : chosen) {
                if (a.t < i || a.t > i + delta - 1) continue;
                if ((a.v == g.edge(e).u || a.v == g.edge(e).v) && g.edge_active_at(e, a.t)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return Obligation{e, i};
        }
    }
    return std::nullopt;
}

inline bool fpt_search(const TemporalGraph& g, int delta, const PartialBounds* bounds, int budget,
                       int frontier, std::vector<VertexAppearance>& chosen,
                       const FptOptions& opts, FptStats& stats) {
    ++stats.nodes;
    if (opts.node_budget && stats.nodes > opts.node_budget)
        throw GuardError("fpt node budget exceeded");

    auto violation = first_violation(g, delta, chosen, bounds, frontier);
    if (!violation) return true;
    if (budget == 0) return false;

    const auto& ed = g.edge(violation->edge);
    const int wlo = violation->window;
    const int whi = violation->window + delta - 1;

    std::vector<VertexAppearance> choices;
    for (int t = wlo; t <= whi; ++t) {
        if (!g.edge_active_at(violation->edge, t)) continue;
        choices.push_back({ed.u, t});
        choices.push_back({ed.v, t});
    }
    stats.max_branch = std::max(stats.max_branch, static_cast<int>(choices.size()));

    std::vector<char> skip(choices.size(), 0);
    if (opts.dominance_prune) {
        const int wcount = g.window_count(delta);
        auto covered_by = [&](const VertexAppearance& a) {
            std::set<std::pair<int, int>> out;
            for (int e : g.incident_edges(a.v)) {
                if (!g.edge_active_at(e, a.t)) continue;
                auto [lo, hi] = resolve_bounds(bounds, e, wcount);
                for (int i = std::max({1, a.t - delta + 1, lo});
                     i <= std::min(a.t, hi); ++i)
                    out.insert({e, i});
            }
            return out;
        };
        std::vector<std::set<std::pair<int, int>>> covers(choices.size());
        for (std::size_t i = 0; i < choices.size(); ++i) covers[i] = covered_by(choices[i]);
        for (std::size_t i = 0; i < choices.size(); ++i)
            for (std::size_t j = 0; j < choices.size(); ++j) {
                if (i == j || skip[j]) continue;
                if (covers[i].size() < covers[j].size() &&
                    std::includes(covers[j].begin(), covers[j].end(), covers[i].begin(),
                                  covers[i].end())) {
                    skip[i] = 1;
                    break;
                }
            }
    }

    for (std::size_t i = 0; i < choices.size(); ++i) {
        if (skip[i]) continue;
        chosen.push_back(choices[i]);
        if (fpt_search(g, delta, bounds, budget - 1, violation->window, chosen, opts, stats))
            return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

// Returns a cover of size <= k when one exists.
inline std::optional<TemporalVertexSet> solve_bounded(const TemporalGraph& g, int delta, int k,
                                                      const PartialBounds* bounds = nullptr,
                                                      const FptOptions& opts = {},
                                                      FptStats* stats_out = nullptr) {
    if (delta < 1) throw InputError("delta must be >= 1");
    if (k < 0) throw InputError("k must be >= 0");
    FptStats stats;
    std::vector<VertexAppearance> chosen;
    bool found = detail::fpt_search(g, delta, bounds, k, 1, chosen, opts, stats);
    if (stats_out) *stats_out = stats;
    if (!found) return std::nullopt;
    return TemporalVertexSet(chosen);
}

}  // namespace tvc
