#pragma once

// Compiles planar monotone rectilinear 3SAT embeddings into temporal-path
// 2-TVC instances.
//
// Geometry, with time growing upward: four empty lead-in slots, the negative
// clause levels (outermost lowest), one spacer slot, the variable gadgets
// (nine slots), another spacer slot, the positive levels, and one trailing
// empty slot. Every clause level is four slots tall, so the lifetime is
// 4(m+4). Vertical line gadgets span from a block's boundary edge to its
// clause; the spacer slots make their height even.
//
// Clause input order is the embedding order. Levels and occurrence indices
// can be given explicitly; when omitted they are assigned deterministically
// (occurrences innermost-first, leftmost copy first). The assignment does
// not compute a planar embedding: if the implied vertical segments cross, a
// connector row collides with a vertical gadget and assembly stops with a
// LayoutError.

#include <array>
#include <map>
#include <numeric>

#include "tvc/core.hpp"
#include "tvc/gadgets.hpp"
#include "tvc/instances.hpp"

namespace tvc {

struct Clause {
    bool positive = true;
    std::array<int, 3> vars{};  // 1-based, strictly increasing
    int level = 0;              // 0 = assign from input order
    std::array<int, 3> occ{};   // occurrence index per literal; 0 = assign
};

struct MonotoneFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int m1() const {
        int c = 0;
        for (const auto& cl : clauses) c += cl.positive;
        return c;
    }
    int m2() const { return static_cast<int>(clauses.size()) - m1(); }

    // d_i: number of appearances of variable i (1-based) as a literal.
    std::vector<int> appearance_counts() const {
        std::vector<int> d(num_vars + 1, 0);
        for (const auto& cl : clauses)
            for (int v : cl.vars) ++d[v];
        return d;
    }
};

// ---------------------------------------------------------------------------
// Formula parsing and finalization
// ---------------------------------------------------------------------------

inline MonotoneFormula parse_formula(const std::string& text) {
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;
    MonotoneFormula f;
    int m = -1;
    bool header = false;

    while (std::getline(input, raw)) {
        ++lineno;
        std::istringstream in(detail::strip_comment(raw));
        std::string tag;
        if (!(in >> tag)) continue;
        if (tag == "mono3sat") {
            if (header) throw ParseError(lineno, "duplicate header");
            if (!(in >> f.num_vars >> m) || f.num_vars < 1 || m < 0)
                throw ParseError(lineno, "expected 'mono3sat <n> <m>'");
            header = true;
        } else if (tag == "+" || tag == "-") {
            if (!header) throw ParseError(lineno, "clause before header");
            Clause cl;
            cl.positive = tag == "+";
            if (!(in >> cl.vars[0] >> cl.vars[1] >> cl.vars[2]))
                throw ParseError(lineno, "expected three variable ids");
            std::string opt;
            while (in >> opt) {
                if (opt == "level") {
                    if (!(in >> cl.level) || cl.level == 0)
                        throw ParseError(lineno, "bad level");
                } else if (opt == "g") {
                    if (!(in >> cl.occ[0] >> cl.occ[1] >> cl.occ[2]))
                        throw ParseError(lineno, "bad occurrence triple");
                } else {
                    throw ParseError(lineno, "unknown clause option '" + opt + "'");
                }
            }
            std::sort(cl.vars.begin(), cl.vars.end());
            for (int v : cl.vars)
                if (v < 1 || v > f.num_vars) throw FormulaError("variable id out of range");
            if (cl.vars[0] == cl.vars[1] || cl.vars[1] == cl.vars[2])
                throw FormulaError("repeated literal in a clause");
            f.clauses.push_back(cl);
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!header) throw ParseError("missing 'mono3sat' header");
    if (static_cast<int>(f.clauses.size()) != m)
        throw ParseError("clause count does not match header");
    return f;
}

// Fills in missing levels (from input order: the first positive clause is the
// outermost) and missing occurrence indices (clauses by increasing |level|,
// positive before negative on ties, each consuming the leftmost unused copy).
// Validates bijectivity either way.
inline MonotoneFormula finalize_formula(MonotoneFormula f) {
    if (f.clauses.empty()) throw FormulaError("formula without clauses");
    const int m1 = f.m1(), m2 = f.m2();

    bool any_level = false, all_level = true;
    for (const auto& cl : f.clauses) (cl.level != 0 ? any_level : all_level) = true;
    if (any_level && !all_level) throw FormulaError("levels must be given for all clauses or none");
    if (!any_level) {
        int next_pos = m1, next_neg = -m2;
        for (auto& cl : f.clauses) cl.level = cl.positive ? next_pos-- : next_neg++;
    }
    std::set<int> pos_levels, neg_levels;
    for (const auto& cl : f.clauses) {
        if (cl.positive && (cl.level < 1 || cl.level > m1 || !pos_levels.insert(cl.level).second))
            throw FormulaError("positive levels must cover 1..m1 exactly once");
        if (!cl.positive &&
            (cl.level > -1 || cl.level < -m2 || !neg_levels.insert(cl.level).second))
            throw FormulaError("negative levels must cover -m2..-1 exactly once");
    }

    auto d = f.appearance_counts();
    bool any_occ = false, all_occ = true;
    for (const auto& cl : f.clauses)
        for (int g : cl.occ) (g != 0 ? any_occ : all_occ) = true;
    if (any_occ && !all_occ)
        throw FormulaError("occurrence indices must be given for all clauses or none");
    if (!any_occ) {
        std::vector<int> order(f.clauses.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int la = std::abs(f.clauses[a].level), lb = std::abs(f.clauses[b].level);
            if (la != lb) return la < lb;
            if (f.clauses[a].positive != f.clauses[b].positive) return f.clauses[a].positive;
            return a < b;
        });
        std::vector<int> next_copy(f.num_vars + 1, 1);
        for (int idx : order)
            for (int slot = 0; slot < 3; ++slot)
                f.clauses[idx].occ[slot] = next_copy[f.clauses[idx].vars[slot]]++;
    }
    std::vector<std::set<int>> used(f.num_vars + 1);
    for (const auto& cl : f.clauses)
        for (int slot = 0; slot < 3; ++slot) {
            int v = cl.vars[slot], g = cl.occ[slot];
            if (g < 1 || g > d[v] || !used[v].insert(g).second)
                throw FormulaError("occurrence indices of a variable must form a permutation");
        }
    return f;
}

// ---------------------------------------------------------------------------
// Layout and assembly
// ---------------------------------------------------------------------------

struct Fragment {
    enum class Kind { block, bridge, vertical, clause_column, connector };
    Kind kind;
    int var = 0;      // 1-based; 0 for clause parts not tied to one variable
    int copy = 0;
    int clause = -1;  // clause index, -1 for variable-side parts
    int lo_vertex = 0, hi_vertex = 0;
    int lo_time = 0, hi_time = 0;
    int time_edges = 0;  // owned (edge, time) pairs
};

struct ClauseGeometry {
    int t_clause = 0;               // bottom row of the three 4-slot edges
    int conn_row = 0;
    std::array<int, 3> block_sv{};  // start vertices of the attached blocks
    int k_height = 0;               // vertical gadget k (same for all three)
    int p1 = 0, p2 = 0;             // connector lengths, both odd
};

struct ReductionOutput {
    MonotoneFormula formula;  // finalized
    TemporalGraph instance;
    long long target_size = 0;           // direct evaluation of the size formula
    std::vector<long long> clause_terms;  // per-clause share of target_size
    int var_row = 0;                      // bottom row of the variable gadgets
    std::vector<std::vector<int>> block_sv;  // [var][copy-1] -> start vertex
    std::vector<Fragment> fragments;
    std::vector<ClauseGeometry> clause_geo;
};

namespace detail {

struct Assembly {
    std::map<int, std::set<int>> labels;          // left vertex of edge -> times
    std::map<std::pair<int, int>, int> owner;     // (left vertex, time) -> fragment

    void add(int x, int t, int frag) {
        auto [it, fresh] = owner.try_emplace({x, t}, frag);
        if (!fresh)
            throw LayoutError("time-edge (" + std::to_string(x) + "-" + std::to_string(x + 1) +
                              ", " + std::to_string(t) + ") claimed twice; embedding crosses");
        labels[x].insert(t);
    }
};

}  // namespace detail

inline ReductionOutput reduce_formula(const MonotoneFormula& input) {
    ReductionOutput out;
    out.formula = finalize_formula(input);
    const auto& f = out.formula;
    const int n = f.num_vars;
    const int m = static_cast<int>(f.clauses.size());
    const int m2 = f.m2();
    const auto d = f.appearance_counts();
    const int total_d = std::accumulate(d.begin(), d.end(), 0);
    const int lifetime = 4 * (m + 4);
    const int tv = 6 + 4 * m2;  // bottom row of every variable gadget
    out.var_row = tv;

    // Vertex layout: blocks of 8, bridges of 4 within a variable, gaps of 4
    // between variables.
    out.block_sv.assign(n + 1, {});
    int cursor = 0;
    for (int v = 1; v <= n; ++v) {
        for (int g = 1; g <= d[v]; ++g) {
            out.block_sv[v].push_back(cursor);
            cursor += 8;
            if (g < d[v]) cursor += 4;
        }
        if (v < n) cursor += 4;
    }
    const int vertex_count = 12 * total_d - 4;
    if (cursor != vertex_count) throw LayoutError("vertex layout accounting is off");

    detail::Assembly asmb;
    auto frag = [&](Fragment fr) {
        out.fragments.push_back(fr);
        return static_cast<int>(out.fragments.size()) - 1;
    };

    // Variable gadgets.
    for (int v = 1; v <= n; ++v)
        for (int g = 1; g <= d[v]; ++g) {
            int sv = out.block_sv[v][g - 1];
            int id = frag({Fragment::Kind::block, v, g, -1, sv, sv + 7, tv, tv + 8, 0});
            for (int t = tv; t <= tv + 8; ++t) {
                asmb.add(sv, t, id);
                asmb.add(sv + 6, t, id);
                out.fragments[id].time_edges += 2;
            }
            for (int x = sv + 1; x <= sv + 5; ++x)
                for (int t : {tv + 1, tv + 7}) {
                    asmb.add(x, t, id);
                    ++out.fragments[id].time_edges;
                }
            if (g < d[v]) {
                int bid = frag({Fragment::Kind::bridge, v, g, -1, sv + 7, sv + 12, tv + 2,
                                tv + 5, 0});
                for (int x = sv + 7; x <= sv + 11; ++x)
                    for (int t : {tv + 2, tv + 5}) {
                        asmb.add(x, t, bid);
                        ++out.fragments[bid].time_edges;
                    }
            }
        }

    // Clause gadgets with their vertical line gadgets and connectors.
    out.clause_geo.resize(m);
    for (int a = 0; a < m; ++a) {
        const auto& cl = f.clauses[a];
        const int level = std::abs(cl.level);
        const int k = 2 * level - 1;  // vertical height is 2k = 4(level-1)+2
        auto& geo = out.clause_geo[a];
        geo.k_height = k;
        for (int slot = 0; slot < 3; ++slot)
            geo.block_sv[slot] = out.block_sv[cl.vars[slot]][cl.occ[slot] - 1];

        int tc;  // bottom row of the 4-slot clause edges
        if (cl.positive) {
            tc = tv + 10 + 4 * (level - 1);
            geo.conn_row = tc + 2;
        } else {
            tc = tv - 4 * level - 1;
            geo.conn_row = tc + 1;
        }
        geo.t_clause = tc;

        for (int slot = 0; slot < 3; ++slot) {
            int sv = geo.block_sv[slot];
            int col = cl.positive ? sv + 6 : sv;  // left vertex of the column edge
            // vertical gadget rows strictly between the block and the clause
            int vlo = cl.positive ? tv + 9 : tc + 4;
            int vhi = cl.positive ? tc - 1 : tv - 1;
            int vid = frag({Fragment::Kind::vertical, cl.vars[slot], cl.occ[slot], a, col,
                            col + 1, vlo, vhi, 0});
            for (int t = vlo; t <= vhi; ++t) {
                asmb.add(col, t, vid);
                ++out.fragments[vid].time_edges;
            }
            int cid = frag({Fragment::Kind::clause_column, cl.vars[slot], cl.occ[slot], a, col,
                            col + 1, tc, tc + 3, 0});
            for (int t = tc; t <= tc + 3; ++t) {
                asmb.add(col, t, cid);
                ++out.fragments[cid].time_edges;
            }
        }

        // Connectors between consecutive columns at the designated row.
        auto connector = [&](int from_sv, int to_sv, int& plen) {
            int a0 = cl.positive ? from_sv + 7 : from_sv + 1;
            int aend = cl.positive ? to_sv + 6 : to_sv;
            plen = aend - a0;
            if (plen <= 0 || plen % 2 == 0)
                throw LayoutError("connector length must be positive and odd");
            int cid = frag({Fragment::Kind::connector, 0, 0, a, a0, aend, geo.conn_row,
                            geo.conn_row, 0});
            for (int x = a0; x < aend; ++x) {
                asmb.add(x, geo.conn_row, cid);
                ++out.fragments[cid].time_edges;
            }
        };
        connector(geo.block_sv[0], geo.block_sv[1], geo.p1);
        connector(geo.block_sv[1], geo.block_sv[2], geo.p2);
    }

    // Target size, evaluated term by term.
    long long s = 19ll * total_d - m - 4ll * n;
    out.clause_terms.resize(m);
    for (int a = 0; a < m; ++a) {
        const auto& cl = f.clauses[a];
        long long between = 0;
        for (int b = cl.vars[0] + 1; b < cl.vars[2]; ++b) between += d[b];
        long long term = 6ll * std::abs(cl.level) + 6 * between +
                         6ll * (d[cl.vars[0]] - cl.occ[0] + cl.occ[2]) +
                         (cl.vars[2] - cl.vars[0]);
        out.clause_terms[a] = term;
        s += term;
    }
    out.target_size = s;

    // Materialize the instance; edges in path order.
    std::vector<TemporalEdge> edges;
    for (const auto& [x, times] : asmb.labels)
        edges.push_back({x, x + 1, std::vector<int>(times.begin(), times.end())});
    out.instance = TemporalGraph(vertex_count, std::move(edges), lifetime);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical covers
// ---------------------------------------------------------------------------

// The assignment-derived cover: per variable the green (true) or red (false)
// block and bridge covers, the matching vertical parity, and the clause
// pattern that is optimal when at least one attached vertical carries the
// satisfying parity. For a satisfying assignment the result is a valid
// 2-TVC; a falsified clause leaves its middle column uncovered in the window
// right above the connector row.
inline TemporalVertexSet assignment_to_cover(const ReductionOutput& out,
                                             const std::vector<bool>& assignment) {
    const auto& f = out.formula;
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw InputError("assignment size does not match the variable count");
    const auto d = f.appearance_counts();
    const int tv = out.var_row;
    auto green = [&](int var) { return assignment[var - 1]; };

    TemporalVertexSet cover;

    // Which side of each block hosts a vertical (positive clause: top of the
    // right end edge; negative: bottom of the left one).
    std::vector<std::vector<int>> host(f.num_vars + 1);  // +1 pos, -1 neg per copy
    for (int v = 1; v <= f.num_vars; ++v) host[v].assign(d[v], 0);
    for (const auto& cl : f.clauses)
        for (int slot = 0; slot < 3; ++slot)
            host[cl.vars[slot]][cl.occ[slot] - 1] = cl.positive ? 1 : -1;

    for (int v = 1; v <= f.num_vars; ++v) {
        for (int g = 1; g <= d[v]; ++g) {
            const int sv = out.block_sv[v][g - 1];
            auto block = canonical_block_cover(green(v), sv, tv);
            // merged boundary: the hosting side's dummy is taken over by the
            // vertical gadget's parity class
            block.erase({host[v][g - 1] > 0 ? sv + 6 : sv + 1, host[v][g - 1] > 0 ? tv + 8 : tv});
            // bridge junctions use the outer endpoint so one appearance also
            // covers the first or last bridge edge
            if (g < d[v]) {  // bridge on the right
                int t = green(v) ? tv + 5 : tv + 2;
                block.erase({sv + 6, t});
                block.insert(sv + 7, t);
            }
            if (g > 1) {  // bridge on the left
                int t = green(v) ? tv + 2 : tv + 5;
                block.erase({sv + 1, t});
                block.insert(sv, t);
            }
            cover.merge(block);
            if (g < d[v]) {
                int w1 = sv + 8;
                if (green(v)) {
                    cover.insert(w1, tv + 2);
                    cover.insert(w1 + 2, tv + 2);
                    cover.insert(w1 + 1, tv + 5);
                    cover.insert(w1 + 3, tv + 5);
                } else {
                    cover.insert(w1 + 1, tv + 2);
                    cover.insert(w1 + 3, tv + 2);
                    cover.insert(w1, tv + 5);
                    cover.insert(w1 + 2, tv + 5);
                }
            }
        }
    }

    for (std::size_t a = 0; a < f.clauses.size(); ++a) {
        const auto& cl = f.clauses[a];
        const auto& geo = out.clause_geo[a];
        const int tc = geo.t_clause;

        for (int slot = 0; slot < 3; ++slot) {
            const int var = cl.vars[slot];
            const int sv = geo.block_sv[slot];
            const bool satisfying = cl.positive ? green(var) : !green(var);
            if (cl.positive) {
                const int inner = sv + 6;
                // vertical parity: green covers the odd rows ending at tc-1,
                // red the even rows starting at the block's top dummy
                for (int t = green(var) ? tv + 9 : tv + 8; t <= tc - 1; t += 2)
                    cover.insert(inner, t);
                cover.insert(inner, tc + 3);
                cover.insert(inner, satisfying ? tc + 1 : tc);
            } else {
                const int inner = sv + 1;
                for (int t = green(var) ? tv : tv - 1; t >= tc + 4; t -= 2)
                    cover.insert(inner, t);
                cover.insert(inner, tc);
                cover.insert(inner, satisfying ? tc + 2 : tc + 3);
            }
        }

        // Connector vertex covers: the alternating class is chosen so that a
        // falsifying outer column gets its extra appearance at the shared
        // endpoint for free.
        auto falsifying = [&](int slot) {
            int var = cl.vars[slot];
            return cl.positive ? !green(var) : green(var);
        };
        auto emit_class = [&](int a0, int aend, bool include_a0) {
            for (int x = include_a0 ? a0 : a0 + 1; x <= aend; x += 2)
                cover.insert(x, geo.conn_row);
        };
        if (cl.positive) {
            emit_class(geo.block_sv[0] + 7, geo.block_sv[1] + 6, falsifying(0));
            emit_class(geo.block_sv[1] + 7, geo.block_sv[2] + 6, !falsifying(2));
        } else {
            emit_class(geo.block_sv[0] + 1, geo.block_sv[1], falsifying(0));
            emit_class(geo.block_sv[1] + 1, geo.block_sv[2], !falsifying(2));
        }
    }
    return cover;
}

// Closes the path into a cycle through one fresh vertex with two time-edges
// at slot 1; any cover must additionally pick that vertex at slot 1.
inline TemporalGraph to_cycle(const ReductionOutput& out) {
    const int n = out.instance.vertex_count();
    auto edges = out.instance.edges();
    edges.push_back({n - 1, n, {1}});
    edges.push_back({0, n, {1}});
    return TemporalGraph(n + 1, std::move(edges), out.instance.lifetime());
}

inline TemporalVertexSet extend_cover_for_cycle(const ReductionOutput& out,
                                                const TemporalVertexSet& cover) {
    TemporalVertexSet extended = cover;
    extended.insert(out.instance.vertex_count(), 1);
    return extended;
}

}  // namespace tvc
