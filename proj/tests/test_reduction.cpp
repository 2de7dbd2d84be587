#include "catch2/catch_amalgamated.hpp"

#include "tvc/exact_dp.hpp"
#include "tvc/oracle.hpp"
#include "tvc/reduction.hpp"

using namespace tvc;

namespace {

const char* kTriple = "mono3sat 3 1\n+ 1 2 3\n";

// The five-clause example in embedding order (outermost positive first),
// with occurrence indices that keep the implied verticals crossing-free.
const char* kFiveClause =
    "mono3sat 5 5\n"
    "+ 1 4 5 g 1 3 1\n"
    "+ 1 2 4 g 2 1 2\n"
    "+ 2 3 4 g 2 1 1\n"
    "- 1 2 5 g 3 3 3\n"
    "- 2 3 5 g 4 2 2\n";

long long canonical_cover_size(const ReductionOutput& out) {
    // target_size's closed form books each clause's connectors as if an
    // inter-gadget gap were four edges wide; the walkable layout has five,
    // so the canonical cover is smaller by the clause span minus one.
    long long s = out.target_size;
    for (const auto& cl : out.formula.clauses) s -= cl.vars[2] - cl.vars[0] - 1;
    return s;
}

}  // namespace

TEST_CASE("parse_formula") {
    auto f = finalize_formula(parse_formula(kTriple));
    CHECK(f.num_vars == 3);
    CHECK(f.clauses.size() == 1);
    CHECK(f.clauses[0].level == 1);
    CHECK(f.clauses[0].occ == std::array<int, 3>{1, 1, 1});

    auto five = finalize_formula(parse_formula(kFiveClause));
    CHECK(five.m1() == 3);
    CHECK(five.m2() == 2);
    CHECK(five.clauses[0].level == 3);
    CHECK(five.clauses[2].level == 1);
    CHECK(five.clauses[3].level == -2);
    CHECK(five.clauses[4].level == -1);

    CHECK_THROWS_AS(parse_formula("mono3sat 3 1\n+ 1 1 2\n"), FormulaError);
    CHECK_THROWS_AS(parse_formula("mono3sat 3 1\n+ 1 9 2\n"), FormulaError);
    CHECK_THROWS_AS(parse_formula("mono3sat 3 2\n+ 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(finalize_formula(parse_formula("mono3sat 3 0\n")), FormulaError);
    // forced occurrence reuse
    CHECK_THROWS_AS(
        finalize_formula(parse_formula("mono3sat 4 2\n+ 1 2 3 g 1 1 1\n+ 1 2 4 g 1 1 1\n")),
        FormulaError);
    // levels either everywhere or nowhere
    CHECK_THROWS_AS(
        finalize_formula(parse_formula("mono3sat 4 2\n+ 1 2 3 level 1\n+ 1 2 4\n")),
        FormulaError);
}

TEST_CASE("reduce the one-clause formula") {
    auto out = reduce_formula(parse_formula(kTriple));
    CHECK(out.instance.vertex_count() == 32);   // 12 * 3 - 4
    CHECK(out.instance.lifetime() == 20);       // 4 * (1 + 4)
    CHECK(out.instance.lifetime() % 4 == 0);
    CHECK(out.target_size == 64);
    CHECK(out.var_row == 6);

    // per-fragment ownership sums to the whole label multiset
    long long owned = 0;
    for (const auto& fr : out.fragments) owned += fr.time_edges;
    long long labels = 0;
    for (const auto& e : out.instance.edges()) labels += static_cast<long long>(e.labels.size());
    CHECK(owned == labels);

    // blocks start one slot above an empty row and the top row is empty too
    CHECK(out.instance.max_label() == out.instance.lifetime() - 1);
}

TEST_CASE("assignment witness on the one-clause formula") {
    auto out = reduce_formula(parse_formula(kTriple));

    auto witness = assignment_to_cover(out, {true, true, true});
    CHECK(static_cast<long long>(witness.size()) == canonical_cover_size(out));
    CHECK(canonical_cover_size(out) == 63);
    CHECK(verify_cover(out.instance, 2, witness).valid);

    // each single-true assignment satisfies the clause as well
    for (int v = 0; v < 3; ++v) {
        std::vector<bool> tau(3, false);
        tau[v] = true;
        auto w = assignment_to_cover(out, tau);
        CHECK(w.size() == witness.size());
        CHECK(verify_cover(out.instance, 2, w).valid);
    }

    // all-false falsifies the positive clause: same size, violation within
    // the clause gadget's rows
    auto bad = assignment_to_cover(out, {false, false, false});
    CHECK(bad.size() == witness.size());
    auto report = verify_cover(out.instance, 2, bad);
    REQUIRE_FALSE(report.valid);
    const auto& geo = out.clause_geo[0];
    for (const auto& viol : report.violations) {
        CHECK(viol.window >= geo.t_clause - 1);
        CHECK(viol.window <= geo.t_clause + 3);
    }
    CHECK_THROWS_AS(assignment_to_cover(out, {true}), InputError);
}

TEST_CASE("cycle corollary") {
    auto out = reduce_formula(parse_formula(kTriple));
    auto cyc = to_cycle(out);
    CHECK(cyc.vertex_count() == 33);
    CHECK(cyc.edge_count() == out.instance.edge_count() + 2);

    int ring_edges_at_1 = 0;
    for (const auto& e : cyc.edges())
        if (e.labels == std::vector<int>{1}) ++ring_edges_at_1;
    CHECK(ring_edges_at_1 == 2);

    std::vector<int> deg(cyc.vertex_count(), 0);
    for (const auto& e : cyc.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int d : deg) CHECK(d == 2);  // underlying graph is exactly a cycle

    auto witness = extend_cover_for_cycle(out, assignment_to_cover(out, {true, true, true}));
    CHECK(static_cast<long long>(witness.size()) == canonical_cover_size(out) + 1);
    CHECK(verify_cover(cyc, 2, witness).valid);
}

TEST_CASE("segment blocks sit at odd pairwise distance") {
    auto out = reduce_formula(parse_formula(kFiveClause));
    std::vector<int> starts;
    for (int v = 1; v <= out.formula.num_vars; ++v)
        for (int sv : out.block_sv[v]) starts.push_back(sv);
    for (std::size_t i = 0; i < starts.size(); ++i)
        for (std::size_t j = i + 1; j < starts.size(); ++j) {
            int rightmost = (starts[j] + 6) - (starts[i] + 7);
            int leftmost = starts[j] - (starts[i] + 1);
            CHECK(rightmost % 2 == 1);
            CHECK(leftmost % 2 == 1);
        }
}

TEST_CASE("reduce the five-clause example") {
    auto out = reduce_formula(parse_formula(kFiveClause));
    const auto d = out.formula.appearance_counts();
    int total_d = 0;
    for (int v = 1; v <= 5; ++v) total_d += d[v];
    CHECK(total_d == 15);
    CHECK(out.instance.vertex_count() == 176);  // 12 * 15 - 4
    CHECK(out.instance.lifetime() == 36);       // 4 * (5 + 4)
    CHECK(out.var_row == 14);                   // two negative levels below

    // connector lengths and vertical heights agree with the position arithmetic
    for (std::size_t a = 0; a < out.clause_geo.size(); ++a) {
        const auto& cl = out.formula.clauses[a];
        const auto& geo = out.clause_geo[a];
        CHECK(2 * geo.k_height == 4 * (std::abs(cl.level) - 1) + 2);
        CHECK(geo.p1 % 2 == 1);
        CHECK(geo.p2 % 2 == 1);
        long long between = 0;
        for (int b = cl.vars[0] + 1; b < cl.vars[2]; ++b) between += d[b];
        CHECK(geo.p1 + geo.p2 ==
              12 * between + 12 * (d[cl.vars[0]] - cl.occ[0] + cl.occ[2] - 1) + 10);
    }

    long long owned = 0;
    for (const auto& fr : out.fragments) {
        owned += fr.time_edges;
        if (fr.kind == Fragment::Kind::vertical) {
            // one shared boundary row lives with the block, 2k-1 rows here
            int k = out.clause_geo[fr.clause].k_height;
            CHECK(fr.hi_time - fr.lo_time + 1 == 2 * k - 1);
        }
    }
    long long labels = 0;
    for (const auto& e : out.instance.edges()) labels += static_cast<long long>(e.labels.size());
    CHECK(owned == labels);

    // satisfying assignment: x4 true, everything else false
    auto good = assignment_to_cover(out, {false, false, false, true, false});
    CHECK(static_cast<long long>(good.size()) == canonical_cover_size(out));
    CHECK(verify_cover(out.instance, 2, good).valid);

    // all-true falsifies both negative clauses and nothing else
    auto bad = assignment_to_cover(out, {true, true, true, true, true});
    auto report = verify_cover(out.instance, 2, bad);
    REQUIRE_FALSE(report.valid);
    for (const auto& viol : report.violations) {
        bool inside_falsified = false;
        for (std::size_t a = 3; a <= 4; ++a)
            inside_falsified |= viol.window >= out.clause_geo[a].t_clause - 1 &&
                                viol.window <= out.clause_geo[a].t_clause + 3;
        CHECK(inside_falsified);
    }
}

TEST_CASE("crossing embeddings are rejected") {
    // auto-assigned occurrences give the innermost clause the leftmost copy,
    // which makes the outer clause's left-arm vertical cross the inner span
    const char* nested =
        "mono3sat 4 2\n"
        "+ 1 2 3\n"
        "+ 1 3 4\n";
    CHECK_THROWS_AS(reduce_formula(parse_formula(nested)), LayoutError);
}

TEST_CASE("gadget fixtures match the assembled reduction") {
    // the emitted block of the one-clause reduction carries the same local
    // label pattern as the stand-alone fixture
    auto out = reduce_formula(parse_formula(kTriple));
    int sv = out.block_sv[1][0];
    auto fixture = segment_block_edges(sv, out.var_row);
    for (const auto& fe : fixture) {
        auto idx = out.instance.find_edge(fe.u, fe.v);
        REQUIRE(idx.has_value());
        const auto& labels = out.instance.edge(*idx).labels;
        for (int t : fe.labels)
            CHECK(std::binary_search(labels.begin(), labels.end(), t));
    }
}
