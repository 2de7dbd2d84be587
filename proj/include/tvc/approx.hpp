#pragma once

// The d-approximation baseline (every edge solved alone) and the improved
// (d-1)-approximation: Phase 1 repeatedly carves out two-edge Partial
// delta-TVC instances around a co-appearing 3-vertex path and solves them
// exactly, which puts the shared center vertex into the cover; Phase 2
// sweeps up whatever single-edge obligations remain.

#include "tvc/core.hpp"
#include "tvc/exact_dp.hpp"

namespace tvc {

struct SubInstance {
    enum class Kind { phase1, phase2 };
    Kind kind = Kind::phase2;
    int left = -1, center = -1, right = -1;  // phase1 path (left, center, right)
    int edge = -1;                           // phase2 edge index
    std::vector<int> times;                  // the S_i slice
    int lo = 0, hi = 0;                      // window bounds of the subinstance
    int origin = 0;                          // iteration tag
    int optimum = 0;
    TemporalVertexSet witness;
};

struct ApproxReport {
    TemporalVertexSet cover;
    std::vector<SubInstance> subinstances;
    int ratio_bound_used = 0;
};

struct ApproxConfig {
    int phase1_gap = 0;  // 0 = delta
    int phase2_gap = 0;  // 0 = 2*delta - 1
};

namespace detail {

inline bool covered_in_window(const TemporalGraph& g, int delta, const TemporalVertexSet& x,
                              int e, int w) {
    const auto& ed = g.edge(e);
    for (int t = g.next_label(e, w); t != 0 && t <= w + delta - 1; t = g.next_label(e, t + 1))
        if (x.contains(ed.u, t) || x.contains(ed.v, t)) return true;
    return false;
}

// Is (e, t) left uncovered by x in some valid window containing t?
inline bool uncovered_near(const TemporalGraph& g, int delta, const TemporalVertexSet& x, int e,
                           int t) {
    const int wcount = g.window_count(delta);
    for (int w = std::max(1, t - delta + 1); w <= std::min(t, wcount); ++w)
        if (!covered_in_window(g, delta, x, e, w)) return true;
    return false;
}

// Smallest (or largest) window containing t in which at least one of the
// given edges is uncovered.
inline std::optional<int> boundary_window(const TemporalGraph& g, int delta,
                                          const TemporalVertexSet& x,
                                          const std::vector<int>& edges, int t, bool smallest) {
    const int wcount = g.window_count(delta);
    const int lo = std::max(1, t - delta + 1), hi = std::min(t, wcount);
    for (int step = 0; step <= hi - lo; ++step) {
        int w = smallest ? lo + step : hi - step;
        for (int e : edges)
            if (g.edge_active_in(e, w, w + delta - 1) && !covered_in_window(g, delta, x, e, w))
                return w;
    }
    return std::nullopt;
}

inline std::vector<std::vector<int>> split_at_gaps(const std::vector<int>& times, int gap) {
    std::vector<std::vector<int>> parts;
    for (int t : times) {
        if (parts.empty() || t - parts.back().back() >= gap) parts.push_back({t});
        else parts.back().push_back(t);
    }
    return parts;
}

}  // namespace detail

// Exact minimum cover of one edge over its bound windows: scan the windows
// in order and stab each first-uncovered one at the edge's latest appearance
// inside it, at the lower-id endpoint.
inline TemporalVertexSet solve_single_edge(const TemporalGraph& g, int delta, int e, int lo,
                                           int hi) {
    const int wcount = g.window_count(delta);
    if (lo < 1 || lo > hi || hi > wcount) throw ValidationError("bounds outside window range");
    const int endpoint = std::min(g.edge(e).u, g.edge(e).v);
    TemporalVertexSet out;
    int last = 0;
    for (int w = lo; w <= hi; ++w) {
        if (!g.edge_active_in(e, w, w + delta - 1)) continue;
        if (last >= w) continue;
        int tc = g.prev_label(e, w + delta - 1);
        if (tc < w) throw InfeasibleError("obligated window without an appearance");
        out.insert(endpoint, tc);
        last = tc;
    }
    return out;
}

// Baseline: optimally cover every edge separately and take the union.
inline ApproxReport approx_d(const TemporalGraph& g, int delta) {
    ApproxReport report;
    report.ratio_bound_used = max_snapshot_degree(g);
    const int wcount = g.window_count(delta);
    if (wcount <= 0) return report;
    for (int e = 0; e < g.edge_count(); ++e) {
        SubInstance sub;
        sub.kind = SubInstance::Kind::phase2;
        sub.edge = e;
        sub.times = g.edge(e).labels;
        sub.lo = 1;
        sub.hi = wcount;
        sub.witness = solve_single_edge(g, delta, e, 1, wcount);
        sub.optimum = static_cast<int>(sub.witness.size());
        report.cover.merge(sub.witness);
        report.subinstances.push_back(std::move(sub));
    }
    return report;
}

// Phase 1 subinstances of the first eligible 3-vertex path under the current
// cover x, ordered (earliest eligible time, center id, neighbor pair). Empty
// when no path qualifies.
inline std::vector<SubInstance> build_phase1_instances(const TemporalGraph& g, int delta,
                                                       const TemporalVertexSet& x,
                                                       const ApproxConfig& cfg = {}) {
    const int gap = cfg.phase1_gap > 0 ? cfg.phase1_gap : delta;
    if (g.window_count(delta) <= 0) return {};

    int sel_center = -1, sel_a = -1, sel_b = -1;
    for (int t = 1; t <= g.lifetime() && sel_center < 0; ++t) {
        for (int m = 0; m < g.vertex_count() && sel_center < 0; ++m) {
            std::vector<std::pair<int, int>> active;  // (other endpoint, edge)
            for (int e : g.incident_edges(m))
                if (g.edge_active_at(e, t)) active.emplace_back(g.other_endpoint(e, m), e);
            std::sort(active.begin(), active.end());
            for (std::size_t i = 0; i < active.size() && sel_center < 0; ++i)
                for (std::size_t j = i + 1; j < active.size() && sel_center < 0; ++j) {
                    if (detail::uncovered_near(g, delta, x, active[i].second, t) &&
                        detail::uncovered_near(g, delta, x, active[j].second, t)) {
                        sel_center = m;
                        sel_a = active[i].first;
                        sel_b = active[j].first;
                    }
                }
        }
    }
    if (sel_center < 0) return {};

    const int e1 = *g.find_edge(sel_center, sel_a);
    const int e2 = *g.find_edge(sel_center, sel_b);
    std::vector<int> s;
    for (int t : g.edge(e1).labels)
        if (g.edge_active_at(e2, t) && detail::uncovered_near(g, delta, x, e1, t) &&
            detail::uncovered_near(g, delta, x, e2, t))
            s.push_back(t);

    std::vector<SubInstance> subs;
    for (auto& part : detail::split_at_gaps(s, gap)) {
        SubInstance sub;
        sub.kind = SubInstance::Kind::phase1;
        sub.left = sel_a;
        sub.center = sel_center;
        sub.right = sel_b;
        sub.times = part;
        sub.lo = *detail::boundary_window(g, delta, x, {e1, e2}, part.front(), true);
        sub.hi = *detail::boundary_window(g, delta, x, {e1, e2}, part.back(), true);
        subs.push_back(std::move(sub));
    }
    return subs;
}

// The (d-1)-approximation. The ratio claim needs d >= 3; for smaller d the
// algorithm still runs and the report falls back to the baseline bound.
inline ApproxReport approx_d_minus_1(const TemporalGraph& g, int delta,
                                     const ApproxConfig& cfg = {}) {
    const int d = max_snapshot_degree(g);
    ApproxReport report;
    report.ratio_bound_used = d >= 3 ? d - 1 : d;
    const int wcount = g.window_count(delta);
    if (wcount <= 0) return report;

    TemporalVertexSet x;
    int origin = 0;

    // Phase 1: exhaust co-appearing two-edge paths.
    while (true) {
        auto subs = build_phase1_instances(g, delta, x, cfg);
        if (subs.empty()) break;
        for (auto& sub : subs) {
            const int e1 = *g.find_edge(sub.center, sub.left);
            const int e2 = *g.find_edge(sub.center, sub.right);
            int nominal = sub.times.back() + delta - 1;
            TemporalGraph piece(g.vertex_count(),
                                {{g.edge(e1).u, g.edge(e1).v, sub.times},
                                 {g.edge(e2).u, g.edge(e2).v, sub.times}},
                                nominal);
            auto bounds = PartialBounds::uniform(2, sub.lo, sub.hi);
            auto solved = solve_partial(piece, delta, &bounds);
            sub.witness = solved.witness;
            sub.optimum = solved.size;
            sub.origin = origin++;
            x.merge(sub.witness);
            report.subinstances.push_back(std::move(sub));
        }
    }

    // Phase 2: remaining single-edge obligations.
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<int> s;
        for (int t : g.edge(e).labels)
            if (detail::uncovered_near(g, delta, x, e, t)) s.push_back(t);
        if (s.empty()) continue;
        const int gap = cfg.phase2_gap > 0 ? cfg.phase2_gap : 2 * delta - 1;
        for (auto& part : detail::split_at_gaps(s, gap)) {
            SubInstance sub;
            sub.kind = SubInstance::Kind::phase2;
            sub.edge = e;
            sub.times = part;
            sub.lo = *detail::boundary_window(g, delta, x, {e}, part.front(), true);
            sub.hi = *detail::boundary_window(g, delta, x, {e}, part.back(), false);
            sub.origin = origin++;
            int nominal = part.back() + delta - 1;
            TemporalGraph piece(g.vertex_count(), {{g.edge(e).u, g.edge(e).v, part}}, nominal);
            sub.witness = solve_single_edge(piece, delta, 0, sub.lo, sub.hi);
            sub.optimum = static_cast<int>(sub.witness.size());
            x.merge(sub.witness);
            report.subinstances.push_back(std::move(sub));
        }
    }

    report.cover = std::move(x);
    return report;
}

}  // namespace tvc
