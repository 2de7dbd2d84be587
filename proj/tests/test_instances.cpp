#include "catch2/catch_amalgamated.hpp"

#include <fstream>

#include "tvc/gadgets.hpp"
#include "tvc/instances.hpp"
#include "tvc/oracle.hpp"

using namespace tvc;

TEST_CASE("parse_instance basics") {
    auto doc = parse_instance("tg 2 1\ne 0 1 1 1\n");
    CHECK(doc.graph.vertex_count() == 2);
    CHECK(doc.graph.edge_count() == 1);
    CHECK(doc.graph.lifetime() == 1);
    CHECK_FALSE(doc.bounds.has_value());

    CHECK_THROWS_AS(parse_instance("tg 2 1\ne 0 0 1 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_instance("tg 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("e 0 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("tg 2 1\ne 0 1 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("tg 2 1\nq 1\n"), ParseError);

    try {
        parse_instance("tg 2 1\ne 0 1 x\n");
        FAIL("expected parse error");
    } catch (const ParseError& err) {
        CHECK(err.line == 2);
    }
}

TEST_CASE("instance round-trip is the identity on canonical text") {
    InstanceDocument doc;
    doc.graph = segment_block_instance(2);
    std::string once = serialize_instance(doc);
    CHECK(serialize_instance(parse_instance(once)) == once);
    CHECK(once.find("t 11\n") != std::string::npos);  // declared lifetime survives

    auto mini = clause_assembly_instance(false);
    std::string text = serialize_instance(mini);
    auto back = parse_instance(text);
    REQUIRE(back.bounds.has_value());
    CHECK(serialize_instance(back) == text);
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("golden fixture files round-trip byte for byte") {
    std::string fixture = slurp(std::string(TVC_FIXTURE_DIR) + "/segment_block.tg");
    CHECK(serialize_instance(parse_instance(fixture)) == fixture);

    std::string sol = slurp(std::string(TVC_FIXTURE_DIR) + "/segment_block_green.sol");
    auto cover = parse_solution(sol);
    CHECK(cover.size() == 15);
    CHECK(serialize_solution(cover) == sol);
    CHECK(cover == canonical_block_cover(true, 0, 2));

    auto doc = parse_instance(fixture);
    CHECK(verify_cover(doc.graph, 2, cover).valid);
}

TEST_CASE("solution format") {
    CHECK(parse_solution("").empty());
    auto s = parse_solution("3 7\n");
    CHECK(s.contains(3, 7));
    CHECK(s.size() == 1);
    CHECK_THROWS_AS(parse_solution("1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("1\n"), ParseError);

    auto cover = canonical_block_cover(true, 0, 2);
    CHECK(parse_solution(serialize_solution(cover)) == cover);
}

TEST_CASE("generator determinism") {
    RandomSpec spec{.n = 6, .edge_probability = 0.6, .label_probability = 0.3, .t_max = 6,
                    .seed = 42};
    auto a = generate_random(spec);
    auto b = generate_random(spec);
    CHECK(serialize_instance({a, std::nullopt, "", ""}) ==
          serialize_instance({b, std::nullopt, "", ""}));
}

TEST_CASE("generator topologies") {
    auto path = generate_random({.n = 5, .seed = 9, .topology = Topology::path});
    REQUIRE(path.edge_count() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(path.edge(i).u == i);
        CHECK(path.edge(i).v == i + 1);
    }

    auto cyc = generate_random({.n = 5, .seed = 9, .topology = Topology::cycle});
    CHECK(cyc.edge_count() == 5);
    CHECK(underlying_degree(cyc) == 2);

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto g = generate_random({.n = 7,
                                  .edge_probability = 0.8,
                                  .seed = seed,
                                  .topology = Topology::degree_bounded,
                                  .degree_bound = 3});
        CHECK(underlying_degree(g) <= 3);
    }
    CHECK_THROWS_AS(generate_random({.n = 4, .topology = Topology::degree_bounded,
                                     .degree_bound = 0}),
                    InputError);
}

TEST_CASE("every generated instance is valid and labelled") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = generate_random({.n = 5, .label_probability = 0.05, .t_max = 4, .seed = seed});
        for (const auto& e : g.edges()) CHECK(!e.labels.empty());
    }
}
