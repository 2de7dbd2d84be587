#pragma once

// Two independent brute-force exact solvers used as ground truth in tests:
// subset enumeration over candidate appearances, and iterative deepening
// over the bounded branching search. They share no solver machinery.

#include <cstdint>

#include "tvc/core.hpp"
#include "tvc/fpt.hpp"

namespace tvc {

struct OracleResult {
    int size = 0;
    TemporalVertexSet witness;
    std::uint64_t explored = 0;
};

struct EnumerateOptions {
    int max_candidates = 24;            // GuardError above this
    std::uint64_t node_budget = 400'000'000;
    bool all_pairs = false;             // enumerate every (v,t), not just candidates
};

struct IdsOptions {
    std::uint64_t node_budget = 50'000'000;  // total across deepening rounds
    int max_k = 64;
};

// All (v,t) with an incident edge active at t; every minimum cover is a
// subset of this set.
inline TemporalVertexSet candidate_appearances(const TemporalGraph& g) {
    TemporalVertexSet out;
    for (const auto& e : g.edges())
        for (int t : e.labels) {
            out.insert(e.u, t);
            out.insert(e.v, t);
        }
    return out;
}

namespace detail {

using Mask = std::vector<std::uint64_t>;

inline void mask_or(Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

inline bool mask_covers(const Mask& a, const Mask& full) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & full[i]) != full[i]) return false;
    return true;
}

struct EnumerateSearch {
    const std::vector<VertexAppearance>& cands;
    const std::vector<Mask>& masks;
    const std::vector<Mask>& suffix;
    const Mask& full;
    std::uint64_t budget;
    std::uint64_t explored = 0;
    std::vector<int> picked;

    // Lexicographic DFS over index subsets of exactly `remaining` more picks.
    bool run(std::size_t from, int remaining, const Mask& accum) {
        if (++explored > budget) throw GuardError("enumeration budget exceeded");
        if (mask_covers(accum, full)) return true;
        if (remaining == 0) return false;
        if (from >= cands.size()) return false;
        Mask reach = accum;
        mask_or(reach, suffix[from]);
        if (!mask_covers(reach, full)) return false;
        for (std::size_t j = from; j + remaining <= cands.size(); ++j) {
            Mask next = accum;
            mask_or(next, masks[j]);
            picked.push_back(static_cast<int>(j));
            if (run(j + 1, remaining - 1, next)) return true;
            picked.pop_back();
        }
        return false;
    }
};

}  // namespace detail

// Exact optimum by enumerating candidate subsets in increasing size and,
// within one size, in lexicographic order over the (t, v)-sorted candidate
// list. The returned witness is therefore the lexicographically least
// optimum.
inline OracleResult solve_enumerate(const TemporalGraph& g, int delta,
                                    const PartialBounds* bounds = nullptr,
                                    const EnumerateOptions& opts = {}) {
    if (delta < 1) throw InputError("delta must be >= 1");

    std::vector<VertexAppearance> cands;
    if (opts.all_pairs) {
        for (int t = 1; t <= g.lifetime(); ++t)
            for (int v = 0; v < g.vertex_count(); ++v) cands.push_back({v, t});
    } else {
        for (const auto& a : candidate_appearances(g)) cands.push_back(a);
        std::sort(cands.begin(), cands.end(),
                  [](const VertexAppearance& a, const VertexAppearance& b) {
                      return a.t != b.t ? a.t < b.t : a.v < b.v;
                  });
    }
    if (static_cast<int>(cands.size()) > opts.max_candidates)
        throw GuardError("oracle too large: " + std::to_string(cands.size()) + " candidates");

    // Collect obligations (edge, window) and give each a bit.
    const int wcount = g.window_count(delta);
    std::vector<std::pair<int, int>> obligations;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [lo, hi] = resolve_bounds(bounds, e, wcount);
        for (int i = lo; i <= hi; ++i)
            if (g.edge_active_in(e, i, i + delta - 1)) obligations.emplace_back(e, i);
    }
    const std::size_t words = (obligations.size() + 63) / 64;
    detail::Mask full(std::max<std::size_t>(words, 1), 0);
    for (std::size_t b = 0; b < obligations.size(); ++b) full[b / 64] |= 1ull << (b % 64);

    std::vector<detail::Mask> masks(cands.size(), detail::Mask(std::max<std::size_t>(words, 1), 0));
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
        const auto& a = cands[ci];
        for (std::size_t b = 0; b < obligations.size(); ++b) {
            auto [e, i] = obligations[b];
            if (a.t < i || a.t > i + delta - 1) continue;
            if ((a.v == g.edge(e).u || a.v == g.edge(e).v) && g.edge_active_at(e, a.t))
                masks[ci][b / 64] |= 1ull << (b % 64);
        }
    }
    std::vector<detail::Mask> suffix(cands.size() + 1,
                                     detail::Mask(std::max<std::size_t>(words, 1), 0));
    for (int i = static_cast<int>(cands.size()) - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1];
        detail::mask_or(suffix[i], masks[i]);
    }

    detail::EnumerateSearch search{cands, masks, suffix, full, opts.node_budget, 0, {}};
    detail::Mask empty(std::max<std::size_t>(words, 1), 0);
    for (int size = 0; size <= static_cast<int>(cands.size()); ++size) {
        if (search.run(0, size, empty)) {
            OracleResult result;
            result.size = size;
            for (int idx : search.picked) result.witness.insert(cands[idx]);
            result.explored = search.explored;
            return result;
        }
    }
    throw InfeasibleError("no cover exists even with all candidates");  // unreachable
}

// Exact optimum via iterative deepening on solve_bounded.
inline OracleResult solve_ids(const TemporalGraph& g, int delta,
                              const PartialBounds* bounds = nullptr,
                              const IdsOptions& opts = {}) {
    if (delta < 1) throw InputError("delta must be >= 1");
    std::uint64_t total_nodes = 0;
    for (int k = 0; k <= opts.max_k; ++k) {
        FptOptions fopts;
        fopts.node_budget = opts.node_budget - total_nodes;
        FptStats stats;
        auto found = solve_bounded(g, delta, k, bounds, fopts, &stats);
        total_nodes += stats.nodes;
        if (found) {
            OracleResult result;
            result.size = static_cast<int>(found->size());
            result.witness = std::move(*found);
            result.explored = total_nodes;
            return result;
        }
    }
    throw GuardError("solve_ids exceeded max_k");
}

}  // namespace tvc
