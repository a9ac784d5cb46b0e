#include <catch2/catch_amalgamated.hpp>

#include "packing/core.hpp"
#include "packing/generators.hpp"
#include "packing/selftest.hpp"
#include "support/oracle.hpp"

using namespace packing;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

}  // namespace

TEST_CASE("graph construction validates its invariants") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph(-1, {}), InputError);

  const Graph g(4, {{2, 0}, {1, 3}});
  CHECK(g.edge(0) == std::pair{0, 2});  // endpoints normalized, order kept
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_id(3, 1).value() == 1);
  CHECK_FALSE(g.edge_id(0, 1).has_value());
}

TEST_CASE("set system construction validates its invariants") {
  CHECK_THROWS_AS(SetSystem(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(SetSystem(2, {{2}}), InputError);
  CHECK_THROWS_AS(SetSystem(-1, {}), InputError);

  const SetSystem t(3, {{2, 0}, {}, {1}});
  CHECK(t.sets()[0] == std::vector<int>{0, 2});  // stored sorted
  CHECK_FALSE(is_normalized(t));
  const auto norm = normalize(t);
  CHECK(norm.system.set_count() == 2);
  CHECK(norm.kept_ids == std::vector<int>{0, 2});
  CHECK(norm.removed_ids == std::vector<int>{1});
  CHECK(is_normalized(norm.system));
}

TEST_CASE("closed vertex neighborhood") {
  const Graph iso(3, {{1, 2}});
  CHECK(closed_nbhd_vertex(iso, 0) == std::vector<int>{0});
  CHECK(closed_nbhd_vertex(path(3), 1) == std::vector<int>{0, 1, 2});
  CHECK(closed_nbhd_vertex(cycle(5), 0) == std::vector<int>{0, 1, 4});
  CHECK_THROWS_AS(closed_nbhd_vertex(path(3), 3), InputError);

  SplitMix64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Graph g = detail::gen_gnp_with(rng, 1 + rng.next_below(8), 0.4);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto n = closed_nbhd_vertex(g, v);
      CHECK(std::binary_search(n.begin(), n.end(), v));
      CHECK(static_cast<int>(n.size()) == g.degree(v) + 1);
    }
  }
}

TEST_CASE("closed edge neighborhood") {
  CHECK(closed_nbhd_edge(Graph(2, {{0, 1}}), 0) == std::vector<int>{0});

  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(closed_nbhd_edge(triangle, 0) == std::vector<int>{0, 1, 2});

  CHECK(closed_nbhd_edge(path(5), 0) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(closed_nbhd_edge(path(5), 4), InputError);

  SECTION("agrees with the line graph") {
    SplitMix64 rng(11);
    for (int it = 0; it < 40; ++it) {
      const Graph g = detail::gen_gnp_with(rng, rng.next_below(8), 0.5);
      const Graph lg = line_graph(g);
      for (int e = 0; e < g.edge_count(); ++e) {
        auto expected = closed_nbhd_vertex(lg, e);  // closed nbhd in L(G)
        CHECK(closed_nbhd_edge(g, e) == expected);
      }
    }
  }
}

TEST_CASE("vertex packing predicate") {
  const Graph p5 = path(5);
  CHECK(is_vertex_packing(p5, VertexPacking{}));
  CHECK(is_vertex_packing(p5, VertexPacking{{0, 4}}));

  const Graph p4 = path(4);
  CHECK(is_vertex_packing(p4, VertexPacking{{0, 3}}));
  CHECK_FALSE(is_vertex_packing(p4, VertexPacking{{0, 2}}));
  CHECK_THROWS_AS(is_vertex_packing(p4, VertexPacking{{4}}), InputError);

  SECTION("matches the definition on random instances") {
    SplitMix64 rng(3);
    for (int it = 0; it < 60; ++it) {
      const Graph g = detail::gen_gnp_with(rng, rng.next_below(7), 0.5);
      for (int mask = 0; mask < (1 << g.vertex_count()); ++mask) {
        std::vector<int> sel;
        for (int v = 0; v < g.vertex_count(); ++v)
          if (mask & (1 << v)) sel.push_back(v);
        CHECK(is_vertex_packing(g, VertexPacking{sel}) ==
              oracle::feasible_vertex_packing(g, sel));
      }
    }
  }
}

TEST_CASE("edge packing predicate") {
  const Graph p5 = path(5);
  CHECK(is_edge_packing(p5, EdgePacking{{2}}));
  CHECK(is_edge_packing(p5, EdgePacking{{0, 3}}));  // edges 0-1 and 3-4
  CHECK_FALSE(is_edge_packing(path(4), EdgePacking{{0, 2}}));

  SECTION("equals vertex packing on the line graph") {
    SplitMix64 rng(5);
    for (int it = 0; it < 40; ++it) {
      const Graph g = detail::gen_gnp_with(rng, rng.next_below(7), 0.5);
      const Graph lg = line_graph(g);
      for (int mask = 0; mask < (1 << g.edge_count()); ++mask) {
        std::vector<int> sel;
        for (int e = 0; e < g.edge_count(); ++e)
          if (mask & (1 << e)) sel.push_back(e);
        CHECK(is_edge_packing(g, EdgePacking{sel}) ==
              is_vertex_packing(lg, VertexPacking{sel}));
      }
    }
  }
}

TEST_CASE("set packing predicate") {
  const SetSystem t(3, {{0}, {1, 2}, {0, 1}});
  CHECK(is_set_packing(t, SetPacking{}));
  CHECK(is_set_packing(t, SetPacking{{0, 1}}));
  CHECK_FALSE(is_set_packing(t, SetPacking{{0, 2}}));
  CHECK_THROWS_AS(is_set_packing(t, SetPacking{{3}}), InputError);
}

TEST_CASE("element packing predicate") {
  CHECK(is_element_packing(SetSystem(2, {{0, 1}}), ElementPacking{}));
  CHECK_FALSE(is_element_packing(SetSystem(2, {{0, 1}}), ElementPacking{{0, 1}}));

  const SetSystem t(3, {{0}, {1}, {0, 2}});
  CHECK(is_element_packing(t, ElementPacking{{1, 2}}));
  // 0 and 1 never share a member, so the pair packs even though 0 occurs twice
  CHECK(is_element_packing(t, ElementPacking{{0, 1}}));
  CHECK_FALSE(is_element_packing(t, ElementPacking{{0, 2}}));

  SECTION("matches the definition on random instances") {
    SplitMix64 rng(13);
    for (int it = 0; it < 60; ++it) {
      const SetSystem s = random_set_system(rng, 6, 5);
      for (int mask = 0; mask < (1 << s.universe_size()); ++mask) {
        std::vector<int> sel;
        for (int a = 0; a < s.universe_size(); ++a)
          if (mask & (1 << a)) sel.push_back(a);
        CHECK(is_element_packing(s, ElementPacking{sel}) ==
              oracle::feasible_element_packing(s, sel));
      }
    }
  }
}

TEST_CASE("packing predicates are monotone downward") {
  SplitMix64 rng(17);
  for (int it = 0; it < 50; ++it) {
    const Graph g = detail::gen_gnp_with(rng, 1 + rng.next_below(7), 0.4);
    const auto fp = detail::vertex_footprints(g);
    const auto sel = detail::random_disjoint_selection(rng, fp);
    REQUIRE(is_vertex_packing(g, VertexPacking{sel}));
    std::vector<int> sub;
    for (int v : sel)
      if (rng.next() & 1) sub.push_back(v);
    CHECK(is_vertex_packing(g, VertexPacking{sub}));
  }
}

TEST_CASE("line graph") {
  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const Graph lt = line_graph(triangle);
  CHECK(lt.vertex_count() == 3);
  CHECK(lt.edge_count() == 3);

  const Graph lp3 = line_graph(path(3));
  CHECK(lp3.vertex_count() == 2);
  CHECK(lp3.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  const Graph lstar = line_graph(star(3));
  CHECK(lstar.vertex_count() == 3);
  CHECK(lstar.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  CHECK(line_graph(Graph(4, {})).vertex_count() == 0);
}

TEST_CASE("closed neighborhood hypergraph") {
  const SetSystem edgeless = closed_nbhd_hypergraph(Graph(3, {}));
  CHECK(edgeless.sets() == std::vector<std::vector<int>>{{0}, {1}, {2}});

  const SetSystem single = closed_nbhd_hypergraph(Graph(2, {{0, 1}}));
  CHECK(single.sets() == std::vector<std::vector<int>>{{0, 1}, {0, 1}});

  const SetSystem p3 = closed_nbhd_hypergraph(path(3));
  CHECK(p3.universe_size() == 3);
  CHECK(p3.sets() == std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}, {1, 2}});
}
