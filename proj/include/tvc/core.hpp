#pragma once

// Temporal-graph data model, sliding-window machinery and the cover verifier.
// Time slots are 1-based, vertices are 0-based. A window W_i = [i, i+delta-1]
// is identified by its start slot i, valid for 1 <= i <= T-delta+1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvc {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (carries a 1-based line number when known).
struct ParseError : Error {
    int line = 0;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally well-formed input that violates a data invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Bad call argument (out-of-range time slot, invalid window index, ...).
struct InputError : Error {
    using Error::Error;
};

// Underlying graph is not of the shape an algorithm requires.
struct TopologyError : Error {
    using Error::Error;
};

// A resource guard tripped (state space, candidate count, node budget).
struct GuardError : Error {
    using Error::Error;
};

// No solution exists within the given constraints.
struct InfeasibleError : Error {
    using Error::Error;
};

// A malformed monotone formula (non-monotone clause, level or occurrence
// collisions, repeated literals).
struct FormulaError : Error {
    using Error::Error;
};

// Gadget placement conflict: two fragments claim the same time-edge, which
// happens when the implied rectilinear embedding is not crossing-free.
struct LayoutError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

struct TemporalEdge {
    int u = 0;
    int v = 0;
    std::vector<int> labels;  // strictly increasing, all >= 1, non-empty
};

struct VertexAppearance {
    int v = 0;
    int t = 0;

    friend bool operator==(const VertexAppearance& a, const VertexAppearance& b) {
        return a.v == b.v && a.t == b.t;
    }
    friend bool operator<(const VertexAppearance& a, const VertexAppearance& b) {
        return a.v != b.v ? a.v < b.v : a.t < b.t;
    }
};

// Set of vertex appearances; iteration order is (v, t) lexicographic.
class TemporalVertexSet {
public:
    TemporalVertexSet() = default;
    explicit TemporalVertexSet(std::vector<VertexAppearance> items) {
        for (const auto& a : items) set_.insert(a);
    }

    bool insert(VertexAppearance a) { return set_.insert(a).second; }
    bool insert(int v, int t) { return insert(VertexAppearance{v, t}); }
    void merge(const TemporalVertexSet& other) {
        set_.insert(other.set_.begin(), other.set_.end());
    }
    bool erase(VertexAppearance a) { return set_.erase(a) > 0; }
    bool contains(VertexAppearance a) const { return set_.count(a) > 0; }
    bool contains(int v, int t) const { return contains(VertexAppearance{v, t}); }
    std::size_t size() const { return set_.size(); }
    bool empty() const { return set_.empty(); }

    auto begin() const { return set_.begin(); }
    auto end() const { return set_.end(); }

    friend bool operator==(const TemporalVertexSet& a, const TemporalVertexSet& b) {
        return a.set_ == b.set_;
    }

private:
    std::set<VertexAppearance> set_;
};

// Per-edge inclusive window range restricting where the edge must be covered.
// A disengaged entry means "every window", resolved once delta is known.
struct PartialBounds {
    std::vector<std::optional<std::pair<int, int>>> ranges;

    static PartialBounds full(std::size_t edge_count) {
        PartialBounds b;
        b.ranges.resize(edge_count);
        return b;
    }
    static PartialBounds uniform(std::size_t edge_count, int lo, int hi) {
        PartialBounds b;
        b.ranges.assign(edge_count, std::make_pair(lo, hi));
        return b;
    }
};

struct CoverViolation {
    int edge = 0;    // edge index in file order
    int window = 0;  // start slot of the uncovered window
};

struct CoverageReport {
    bool valid = true;
    std::vector<CoverViolation> violations;
};

// ---------------------------------------------------------------------------
// TemporalGraph
// ---------------------------------------------------------------------------

// Immutable after construction. The lifetime T is the maximum label unless a
// larger value is declared explicitly; the declared form exists because some
// instances need trailing edge-free slots whose windows still bind (a window
// [t, t+delta-1] that starts at the last label forces coverage at exactly
// that label).
class TemporalGraph {
public:
    TemporalGraph() = default;

    TemporalGraph(int n, std::vector<TemporalEdge> edges, int declared_lifetime = 0)
        : n_(n), edges_(std::move(edges)) {
        validate();
        int max_label = 0;
        for (const auto& e : edges_) max_label = std::max(max_label, e.labels.back());
        if (declared_lifetime != 0 && declared_lifetime < max_label)
            throw ValidationError("declared lifetime below maximum label");
        lifetime_ = std::max(max_label, declared_lifetime);
        max_label_ = max_label;
        adj_.assign(n_, {});
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            adj_[edges_[i].u].push_back(i);
            adj_[edges_[i].v].push_back(i);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int lifetime() const { return lifetime_; }
    int max_label() const { return max_label_; }
    const std::vector<TemporalEdge>& edges() const { return edges_; }
    const TemporalEdge& edge(int i) const { return edges_.at(i); }
    const std::vector<int>& incident_edges(int v) const { return adj_.at(v); }

    int window_count(int delta) const {
        if (delta < 1) throw InputError("delta must be >= 1");
        return std::max(0, lifetime_ - delta + 1);
    }

    bool edge_active_at(int e, int t) const {
        const auto& l = edges_[e].labels;
        return std::binary_search(l.begin(), l.end(), t);
    }

    // Smallest label >= t, or 0 when none.
    int next_label(int e, int t) const {
        const auto& l = edges_[e].labels;
        auto it = std::lower_bound(l.begin(), l.end(), t);
        return it == l.end() ? 0 : *it;
    }

    // Whether lambda(e) intersects [lo, hi].
    bool edge_active_in(int e, int lo, int hi) const {
        int nl = next_label(e, lo);
        return nl != 0 && nl <= hi;
    }

    int other_endpoint(int e, int v) const {
        const auto& ed = edges_[e];
        if (ed.u == v) return ed.v;
        if (ed.v == v) return ed.u;
        throw InputError("vertex is not an endpoint of the edge");
    }

    std::optional<int> find_edge(int a, int b) const {
        for (int e : adj_.at(a)) {
            if (edges_[e].u == b || edges_[e].v == b) return e;
        }
        return std::nullopt;
    }

    // Largest label <= t, or 0 when none.
    int prev_label(int e, int t) const {
        const auto& l = edges_[e].labels;
        auto it = std::upper_bound(l.begin(), l.end(), t);
        return it == l.begin() ? 0 : *(it - 1);
    }

private:
    void validate() const {
        if (n_ < 0) throw ValidationError("negative vertex count");
        std::set<std::pair<int, int>> seen;
        for (const auto& e : edges_) {
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
                throw ValidationError("edge endpoint out of range");
            if (e.u == e.v) throw ValidationError("self-loop");
            auto key = std::minmax(e.u, e.v);
            if (!seen.insert(key).second) throw ValidationError("duplicate edge");
            if (e.labels.empty()) throw ValidationError("edge with empty label set");
            int prev = 0;
            for (int t : e.labels) {
                if (t < 1) throw ValidationError("label below 1");
                if (t <= prev) throw ValidationError("labels not strictly increasing");
                prev = t;
            }
        }
    }

    int n_ = 0;
    std::vector<TemporalEdge> edges_;
    std::vector<std::vector<int>> adj_;
    int lifetime_ = 0;
    int max_label_ = 0;
};

// ---------------------------------------------------------------------------
// Window helpers
// ---------------------------------------------------------------------------

// Resolves an optional per-edge bound against the window range [1, wcount].
inline std::pair<int, int> resolve_bounds(const PartialBounds* bounds, int edge, int wcount) {
    if (bounds && edge < static_cast<int>(bounds->ranges.size()) && bounds->ranges[edge]) {
        auto [lo, hi] = *bounds->ranges[edge];
        if (lo < 1 || lo > hi || hi > wcount)
            throw ValidationError("edge bounds outside the valid window range");
        return {lo, hi};
    }
    return {1, wcount};
}

// E_t: indices of edges active at time slot t.
inline std::vector<int> snapshot(const TemporalGraph& g, int t) {
    if (t < 1 || t > g.lifetime()) throw InputError("time slot out of range");
    std::vector<int> out;
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edge_active_at(i, t)) out.push_back(i);
    return out;
}

// E[W_i]: indices of edges appearing somewhere in window i.
inline std::vector<int> edges_in_window(const TemporalGraph& g, int delta, int i) {
    if (i < 1 || i > g.window_count(delta)) throw InputError("window index out of range");
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge_active_in(e, i, i + delta - 1)) out.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// Cover verification
// ---------------------------------------------------------------------------

// Checks that C covers every edge in every window in which the edge appears
// (restricted per edge when bounds are given). Sweeps each edge's labels and
// its relevant cover times; no window is materialized.
inline CoverageReport verify_cover(const TemporalGraph& g, int delta, const TemporalVertexSet& c,
                                   const PartialBounds* bounds = nullptr) {
    if (delta < 1) throw InputError("delta must be >= 1");
    for (const auto& a : c) {
        if (a.v < 0 || a.v >= g.vertex_count()) throw InputError("cover vertex out of range");
        if (a.t < 1 || a.t > g.lifetime()) throw InputError("cover time outside lifetime");
    }
    CoverageReport report;
    const int wcount = g.window_count(delta);
    if (wcount <= 0) return report;

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        std::vector<int> cover_times;
        for (int t : ed.labels)
            if (c.contains(ed.u, t) || c.contains(ed.v, t)) cover_times.push_back(t);

        auto [lo, hi] = resolve_bounds(bounds, e, wcount);
        std::size_t li = 0, ci = 0;
        for (int i = lo; i <= hi; ++i) {
            while (li < ed.labels.size() && ed.labels[li] < i) ++li;
            if (li == ed.labels.size()) break;
            if (ed.labels[li] > i + delta - 1) {
                // edge dormant; jump to the first window that sees the label
                i = std::max(i, ed.labels[li] - delta);
                continue;
            }
            while (ci < cover_times.size() && cover_times[ci] < i) ++ci;
            if (ci == cover_times.size() || cover_times[ci] > i + delta - 1)
                report.violations.push_back({e, i});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Degrees
// ---------------------------------------------------------------------------

// d: maximum vertex degree over all snapshots.
inline int max_snapshot_degree(const TemporalGraph& g) {
    std::vector<std::pair<int, int>> hits;  // (t, v)
    for (const auto& e : g.edges())
        for (int t : e.labels) {
            hits.emplace_back(t, e.u);
            hits.emplace_back(t, e.v);
        }
    std::sort(hits.begin(), hits.end());
    int best = 0, run = 0;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        run = (i > 0 && hits[i] == hits[i - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

// d_G: maximum degree of the underlying graph.
inline int underlying_degree(const TemporalGraph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, static_cast<int>(g.incident_edges(v).size()));
    return best;
}

}  // namespace tvc
