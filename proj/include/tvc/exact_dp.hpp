#pragma once

// Exact dynamic program for Partial delta-TVC. States are (base window t,
// per-edge offset of the next uncovered window), memoized over reachable
// states only. Covering a due edge branches over the last appearance of each
// edge configuration at either endpoint inside the current window.
//
// Offsets are clamped at delta. An offset of delta decodes to the first
// obligated window >= t+delta, which is the same value for every reachable
// state with that key (obligated windows are a fixed function of the labels
// and bounds), so the clamp loses nothing.

#include <cstdint>
#include <unordered_map>

#include "tvc/core.hpp"

namespace tvc {

struct EdgeConfiguration {
    int edge = 0;
    int endpoint = 0;
    std::vector<int> members;  // other incident edges active alongside, sorted
    std::vector<int> times;    // label times at which this configuration occurs, sorted
};

// Partitions lambda(e) by the set of other edges incident to `v` that are
// active at the same time. Returned in order of first occurrence.
inline std::vector<EdgeConfiguration> configurations_of(const TemporalGraph& g, int e, int v) {
    const auto& ed = g.edge(e);
    if (ed.u != v && ed.v != v) throw InputError("vertex is not an endpoint of the edge");
    std::vector<EdgeConfiguration> configs;
    for (int t : ed.labels) {
        std::vector<int> members;
        for (int other : g.incident_edges(v))
            if (other != e && g.edge_active_at(other, t)) members.push_back(other);
        std::sort(members.begin(), members.end());
        auto it = std::find_if(configs.begin(), configs.end(),
                               [&](const EdgeConfiguration& c) { return c.members == members; });
        if (it == configs.end()) {
            configs.push_back({e, v, std::move(members), {t}});
        } else {
            it->times.push_back(t);
        }
    }
    return configs;
}

struct DPOptions {
    std::uint64_t state_guard = 1ull << 26;  // refuses when the state-space estimate exceeds this
    std::uint64_t max_states = 1ull << 25;   // hard cap on memoized states
    bool try_all_appearances = false;        // branch on every appearance, not per-config
};

struct DPResult {
    int size = 0;
    TemporalVertexSet witness;
    std::uint64_t states_visited = 0;
};

namespace detail {

constexpr int kUnset = -1;

struct DPEntry {
    int best = kUnset;
    int choice_v = -1;
    int choice_t = -1;
};

struct DPContext {
    const TemporalGraph& g;
    int delta;
    int wcount;
    std::vector<int> lo, hi;
    DPOptions opts;
    std::unordered_map<std::string, DPEntry> memo;

    static constexpr int kFin = -1;

    // First window >= j, within the edge's bounds, in which the edge appears.
    int next_obligated(int e, int j) const {
        j = std::max(j, lo[e]);
        if (j > hi[e]) return kFin;
        int lstar = g.next_label(e, j);
        if (lstar == 0) return kFin;
        int w = std::max(j, lstar - delta + 1);
        return w > hi[e] ? kFin : w;
    }

    std::string encode(int base, const std::vector<int>& dues) const {
        std::string key;
        key.reserve(dues.size() + 2);
        key.push_back(static_cast<char>(base & 0xff));
        key.push_back(static_cast<char>((base >> 8) & 0xff));
        for (std::size_t i = 0; i < dues.size(); ++i) {
            int off = dues[i] == kFin ? delta + 1 : std::min(dues[i] - base, delta);
            key.push_back(static_cast<char>(off));
        }
        return key;
    }

    std::vector<int> decode(int base, const std::string& key) const {
        std::vector<int> dues(key.size() - 2);
        for (std::size_t i = 0; i < dues.size(); ++i) {
            int off = static_cast<unsigned char>(key[i + 2]);
            if (off == delta + 1)
                dues[i] = kFin;
            else if (off < delta)
                dues[i] = base + off;
            else
                dues[i] = next_obligated(static_cast<int>(i), base + delta);
        }
        return dues;
    }

    // Rebase to the minimum due; returns false when everything is finished.
    bool normalize(const std::vector<int>& dues, int& base_out) const {
        int mn = kFin;
        for (int d : dues)
            if (d != kFin && (mn == kFin || d < mn)) mn = d;
        if (mn == kFin) return false;
        base_out = mn;
        return true;
    }

    // Candidate cover appearances for the due edge in window [base, base+delta-1]:
    // endpoint u then v, and per endpoint the last appearance of each distinct
    // configuration, in descending time.
    std::vector<VertexAppearance> candidates(int e, int base) const {
        const auto& ed = g.edge(e);
        std::vector<int> times;
        for (int t = g.next_label(e, base); t != 0 && t <= base + delta - 1;
             t = g.next_label(e, t + 1))
            times.push_back(t);

        std::vector<VertexAppearance> out;
        for (int v : {ed.u, ed.v}) {
            if (opts.try_all_appearances) {
                for (auto it = times.rbegin(); it != times.rend(); ++it) out.push_back({v, *it});
                continue;
            }
            std::vector<std::vector<int>> seen;
            for (auto it = times.rbegin(); it != times.rend(); ++it) {
                std::vector<int> members;
                for (int other : g.incident_edges(v))
                    if (other != e && g.edge_active_at(other, *it)) members.push_back(other);
                std::sort(members.begin(), members.end());
                if (std::find(seen.begin(), seen.end(), members) == seen.end()) {
                    seen.push_back(std::move(members));
                    out.push_back({v, *it});
                }
            }
        }
        return out;
    }

    std::vector<int> apply(std::vector<int> dues, const VertexAppearance& a) const {
        for (int e : g.incident_edges(a.v)) {
            if (dues[e] == kFin || !g.edge_active_at(e, a.t)) continue;
            if (dues[e] <= a.t) dues[e] = next_obligated(e, a.t + 1);
        }
        return dues;
    }

    int solve(int base, const std::vector<int>& dues) {
        std::string key = encode(base, dues);
        auto [it, inserted] = memo.try_emplace(key);
        if (!inserted) return it->second.best;
        if (memo.size() > opts.max_states)
            throw GuardError("dp state cap exceeded (" + std::to_string(memo.size()) +
                             " states)");

        int due_edge = -1;
        for (std::size_t e = 0; e < dues.size(); ++e)
            if (dues[e] == base) {
                due_edge = static_cast<int>(e);
                break;
            }

        DPEntry entry;
        entry.best = kUnset;
        for (const auto& cand : candidates(due_edge, base)) {
            auto child = apply(dues, cand);
            int child_base;
            int sub = 0;
            if (normalize(child, child_base)) sub = solve(child_base, child);
            if (entry.best == kUnset || 1 + sub < entry.best) {
                entry.best = 1 + sub;
                entry.choice_v = cand.v;
                entry.choice_t = cand.t;
            }
        }
        memo[key] = entry;
        return entry.best;
    }
};

}  // namespace detail

inline DPResult solve_partial(const TemporalGraph& g, int delta,
                              const PartialBounds* bounds = nullptr, const DPOptions& opts = {}) {
    if (delta < 1) throw InputError("delta must be >= 1");
    if (g.edge_count() == 0) return {};
    if (delta > g.lifetime()) throw InputError("delta exceeds the lifetime");

    if (g.window_count(delta) > 0xffff) throw InputError("lifetime beyond supported range");

    detail::DPContext ctx{g, delta, g.window_count(delta), {}, {}, opts, {}};
    ctx.lo.resize(g.edge_count());
    ctx.hi.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        std::tie(ctx.lo[e], ctx.hi[e]) = resolve_bounds(bounds, e, ctx.wcount);

    // Soft guard on the theorem-style state bound: wcount * c^m.
    {
        const std::uint64_t c = std::max<std::uint64_t>(
            1, std::min<std::uint64_t>(1ull << std::min(underlying_degree(g), 62),
                                       static_cast<std::uint64_t>(delta)));
        long double estimate = ctx.wcount;
        for (int e = 0; e < g.edge_count() && estimate <= static_cast<long double>(opts.state_guard);
             ++e)
            estimate *= c;
        if (estimate > static_cast<long double>(opts.state_guard))
            throw GuardError("dp state-space estimate exceeds the guard");
    }

    std::vector<int> dues(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) dues[e] = ctx.next_obligated(e, ctx.lo[e]);

    DPResult result;
    int base;
    if (!ctx.normalize(dues, base)) {
        result.states_visited = 0;
        return result;
    }
    result.size = ctx.solve(base, dues);
    result.states_visited = ctx.memo.size();

    // Walk the recorded decisions to rebuild the witness.
    std::vector<int> cur = dues;
    int cur_base = base;
    while (true) {
        const auto& entry = ctx.memo.at(ctx.encode(cur_base, cur));
        if (entry.best == 0 || entry.choice_v < 0) break;
        VertexAppearance chosen{entry.choice_v, entry.choice_t};
        result.witness.insert(chosen);
        cur = ctx.apply(cur, chosen);
        if (!ctx.normalize(cur, cur_base)) break;
    }
    return result;
}

}  // namespace tvc
