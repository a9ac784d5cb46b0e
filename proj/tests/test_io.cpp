#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "packing/generators.hpp"
#include "packing/io.hpp"
#include "packing/selftest.hpp"

using namespace packing;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("graph parsing") {
  const Graph g = parse_graph("p graph 2 1\ne 1 2\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  CHECK(parse_graph("p graph 3 0\n").vertex_count() == 3);

  SECTION("comments and blank lines are skipped") {
    const Graph h = parse_graph("c header comment\n\np graph 3 1\nc mid\ne 2 3\n");
    CHECK(h.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  }

  SECTION("errors carry line numbers") {
    CHECK_THROWS_MATCHES(parse_graph("p graph 2 1\ne 1 1\n"), InputError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("line 2")));
    CHECK_THROWS_MATCHES(parse_graph("p graph 2 2\ne 1 2\ne 2 1\n"), InputError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("duplicate")));
    CHECK_THROWS_AS(parse_graph("p graph 2 1\ne 1 3\n"), InputError);
    CHECK_THROWS_AS(parse_graph("p graph 2 2\ne 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("p graph 2 0\ne 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("p graph 2 1\ne 1 x\n"), InputError);
    CHECK_THROWS_AS(parse_graph(""), InputError);
    CHECK_THROWS_AS(parse_graph("p something 1 0\n"), InputError);
  }
}

TEST_CASE("set system parsing") {
  const SetSystem t = parse_set_system("p setsystem 2 2\ns 1 1\ns 1 2\n");
  CHECK(t.universe_size() == 2);
  CHECK(t.sets() == std::vector<std::vector<int>>{{0}, {1}});

  const SetSystem u = parse_set_system("p setsystem 3 1\ns 2 1 3\n");
  CHECK(u.sets() == std::vector<std::vector<int>>{{0, 2}});

  SECTION("empty sets are allowed at parse time") {
    const SetSystem v = parse_set_system("p setsystem 2 1\ns 0\n");
    CHECK_FALSE(is_normalized(v));
  }

  SECTION("errors carry line numbers") {
    CHECK_THROWS_MATCHES(parse_set_system("p setsystem 2 1\ns 2 1 3\n"), InputError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("line 2")));
    CHECK_THROWS_AS(parse_set_system("p setsystem 2 1\ns 3 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_set_system("p setsystem 2 1\ns 2 1 1\n"), InputError);
    CHECK_THROWS_AS(parse_set_system("p setsystem 2 2\ns 1 1\n"), InputError);
  }
}

TEST_CASE("canonical roundtrips are byte-identical") {
  SplitMix64 rng(101);
  for (int it = 0; it < 200; ++it) {
    const Graph g = random_graph(rng, 9);
    const std::string s = serialize_graph(g);
    CHECK(serialize_graph(parse_graph(s)) == s);

    const SetSystem t = random_set_system(rng, 7, 6);
    const std::string u = serialize_set_system(t);
    CHECK(serialize_set_system(parse_set_system(u)) == u);
  }
}

TEST_CASE("non-canonical files keep positional edge ids") {
  const Graph g = parse_graph("p graph 3 2\ne 2 3\ne 1 2\n");
  CHECK(g.edge(0) == std::pair{1, 2});  // file order defines ids
  CHECK(serialize_graph(g) == "p graph 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("solution id files") {
  CHECK(parse_solution_ids("3 1 2\n") == std::vector<int>{2, 0, 1});
  CHECK(parse_solution_ids("\n").empty());
  CHECK(parse_solution_ids("").empty());
  CHECK_THROWS_AS(parse_solution_ids("0 1\n"), InputError);
  CHECK_THROWS_AS(parse_solution_ids("1 two\n"), InputError);
  CHECK(serialize_solution_ids(std::vector<int>{2, 0, 1}) == "3 1 2\n");
  CHECK(serialize_solution_ids(std::vector<int>{}) == "\n");
}

TEST_CASE("instance dispatch by header") {
  CHECK(parse_instance("p graph 1 0\n").kind == InstanceKind::graph);
  CHECK(parse_instance("p setsystem 1 0\n").kind == InstanceKind::set_system);
  CHECK_THROWS_AS(parse_instance("p matrix 1 0\n"), InputError);
}

TEST_CASE("gnp generator") {
  CHECK(gen_gnp(5, 0.0, 9).edge_count() == 0);
  CHECK(gen_gnp(4, 1.0, 9).edge_count() == 6);
  CHECK(serialize_graph(gen_gnp(8, 0.3, 42)) == serialize_graph(gen_gnp(8, 0.3, 42)));
  CHECK_THROWS_AS(gen_gnp(4, 1.5, 1), InputError);
  CHECK_THROWS_AS(gen_gnp(-1, 0.5, 1), InputError);

  SECTION("golden instance") {
    const std::string golden = read_file(std::string(GOLDEN_DIR) + "/gnp_8_03_42.graph");
    CHECK(serialize_graph(gen_gnp(8, 0.3, 42)) == golden);
  }
}

TEST_CASE("set system generator") {
  CHECK(gen_setsystem(3, 0, 2, 1).set_count() == 0);

  const SetSystem singles = gen_setsystem(5, 4, 1, 7);
  for (const auto& s : singles.sets()) CHECK(s.size() == 1);

  CHECK_THROWS_AS(gen_setsystem(0, 1, 1, 1), InputError);
  CHECK_THROWS_AS(gen_setsystem(3, 1, 4, 1), InputError);
  CHECK_THROWS_AS(gen_setsystem(3, -1, 2, 1), InputError);

  SECTION("golden instance") {
    const std::string golden =
        read_file(std::string(GOLDEN_DIR) + "/setsystem_6_5_3_7.setsystem");
    CHECK(serialize_set_system(gen_setsystem(6, 5, 3, 7)) == golden);
  }
}
