#include "catch2/catch_amalgamated.hpp"

#include "tvc/fpt.hpp"
#include "tvc/gadgets.hpp"
#include "tvc/instances.hpp"
#include "tvc/oracle.hpp"

using namespace tvc;

TEST_CASE("solve_bounded basics") {
    TemporalGraph g(2, {{0, 1, {1}}});
    CHECK(solve_bounded(g, 1, 1).has_value());
    CHECK_FALSE(solve_bounded(g, 1, 0).has_value());
    CHECK(solve_bounded(TemporalGraph(2, {}), 2, 0).has_value());
    CHECK_THROWS_AS(solve_bounded(g, 1, -1), InputError);
}

TEST_CASE("found covers always verify") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = generate_random({.n = 4, .label_probability = 0.4, .t_max = 4, .seed = seed});
        if (g.edge_count() == 0 || g.lifetime() < 2) continue;
        for (int k = 0; k <= 6; ++k) {
            auto sol = solve_bounded(g, 2, k);
            if (sol) {
                CHECK(sol->size() <= static_cast<std::size_t>(k));
                CHECK(verify_cover(g, 2, *sol).valid);
            }
        }
    }
}

TEST_CASE("completeness and monotonicity against the enumeration oracle") {
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 30 && seed <= 200; ++seed) {
        auto g = generate_random(
            {.n = 4, .edge_probability = 0.6, .label_probability = 0.4, .t_max = 4, .seed = seed});
        if (g.edge_count() == 0 || g.lifetime() < 2) continue;
        if (candidate_appearances(g).size() > 16) continue;
        ++checked;
        int opt = solve_enumerate(g, 2).size;
        for (int k = 0; k <= opt + 1; ++k) {
            auto sol = solve_bounded(g, 2, k);
            INFO("seed " << seed << " k " << k << " opt " << opt);
            CHECK(sol.has_value() == (k >= opt));
        }
    }
    CHECK(checked == 30);
}

TEST_CASE("block prefix golden values") {
    // first three edges of a block starting at slot 1
    auto all = segment_block_edges(0, 1);
    std::vector<TemporalEdge> prefix(all.begin(), all.begin() + 3);
    TemporalGraph g(4, prefix, 0);
    int opt = solve_enumerate(g, 2, nullptr, {.max_candidates = 30}).size;
    CHECK(solve_bounded(g, 2, opt).has_value());
    CHECK_FALSE(solve_bounded(g, 2, opt - 1).has_value());
}

TEST_CASE("branch factor never exceeds 2*delta") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = generate_random({.n = 5, .label_probability = 0.5, .t_max = 5, .seed = seed});
        if (g.edge_count() == 0 || g.lifetime() < 3) continue;
        for (int delta : {2, 3}) {
            FptStats stats;
            solve_bounded(g, delta, 4, nullptr, {}, &stats);
            CHECK(stats.max_branch <= 2 * delta);
        }
    }
}

TEST_CASE("dominance prune preserves the answer") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto g = generate_random({.n = 4, .label_probability = 0.5, .t_max = 4, .seed = seed});
        if (g.edge_count() == 0 || g.lifetime() < 2) continue;
        FptOptions pruned;
        pruned.dominance_prune = true;
        for (int k = 0; k <= 5; ++k) {
            auto plain = solve_bounded(g, 2, k);
            auto fast = solve_bounded(g, 2, k, nullptr, pruned);
            CHECK(plain.has_value() == fast.has_value());
            if (fast) CHECK(verify_cover(g, 2, *fast).valid);
        }
    }
}

TEST_CASE("node budget trips") {
    auto chain = chain_instance(2);
    FptOptions opts;
    opts.node_budget = 50;
    CHECK_THROWS_AS(solve_bounded(chain, 2, 30, nullptr, opts), GuardError);
}
