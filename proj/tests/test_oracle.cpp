#include "catch2/catch_amalgamated.hpp"

#include "tvc/exact_dp.hpp"
#include "tvc/gadgets.hpp"
#include "tvc/instances.hpp"
#include "tvc/oracle.hpp"

using namespace tvc;

TEST_CASE("candidate_appearances") {
    TemporalGraph g(2, {{0, 1, {1, 3}}});
    auto c = candidate_appearances(g);
    CHECK(c.size() == 4);
    CHECK(c.contains(0, 1));
    CHECK(c.contains(1, 3));

    auto block = segment_block_instance(1);
    std::size_t expected = 0;
    for (int t = 1; t <= block.lifetime(); ++t) {
        std::set<int> active;
        for (int e : snapshot(block, t)) {
            active.insert(block.edge(e).u);
            active.insert(block.edge(e).v);
        }
        expected += active.size();
    }
    CHECK(candidate_appearances(block).size() == expected);
}

TEST_CASE("solve_enumerate basics") {
    TemporalGraph g(2, {{0, 1, {1}}}, 2);
    auto r = solve_enumerate(g, 2);
    CHECK(r.size == 1);
    CHECK(verify_cover(g, 2, r.witness).valid);

    TemporalGraph empty(2, {});
    CHECK(solve_enumerate(empty, 3).size == 0);

    // vertical law at k=3: edge active 1..6, obligations over windows 1..5
    auto doc = vertical_instance(3);
    auto res = solve_enumerate(doc.graph, 2, &*doc.bounds);
    CHECK(res.size == 3);
    CHECK(verify_cover(doc.graph, 2, res.witness, &*doc.bounds).valid);
}

TEST_CASE("solve_enumerate guard") {
    auto block = segment_block_instance(1);  // 40 candidates
    CHECK_THROWS_AS(solve_enumerate(block, 2), GuardError);
}

TEST_CASE("solve_ids basics") {
    TemporalGraph empty(1, {});
    CHECK(solve_ids(empty, 2).size == 0);

    TemporalGraph two(4, {{0, 1, {1}}, {2, 3, {2}}});
    auto r = solve_ids(two, 1);
    CHECK(r.size == 2);
    CHECK(verify_cover(two, 1, r.witness).valid);
}

TEST_CASE("oracles agree") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = generate_random(
            {.n = 4, .edge_probability = 0.6, .label_probability = 0.35, .t_max = 4, .seed = seed});
        if (candidate_appearances(g).size() > 18) continue;
        for (int delta : {1, 2, 3}) {
            if (g.lifetime() == 0) continue;
            int d = std::min(delta, g.lifetime());
            auto a = solve_enumerate(g, d);
            auto b = solve_ids(g, d);
            INFO("seed " << seed << " delta " << d);
            CHECK(a.size == b.size);
            CHECK(verify_cover(g, d, a.witness).valid);
            CHECK(verify_cover(g, d, b.witness).valid);
        }
    }
}

TEST_CASE("witness is the lexicographically least optimum") {
    TemporalGraph g(3, {{0, 1, {2}}, {1, 2, {2}}});
    auto r = solve_enumerate(g, 2);
    REQUIRE(r.size == 1);
    CHECK(r.witness.contains(1, 2));  // (t,v)-least single cover
}

TEST_CASE("restricting to candidates never changes the optimum") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto g = generate_random(
            {.n = 3, .edge_probability = 0.7, .label_probability = 0.4, .t_max = 3, .seed = seed});
        if (g.lifetime() == 0 || g.edge_count() == 0) continue;
        EnumerateOptions all;
        all.all_pairs = true;
        all.max_candidates = 64;
        int delta = std::min(2, g.lifetime());
        CHECK(solve_enumerate(g, delta).size == solve_enumerate(g, delta, nullptr, all).size);
    }
}
