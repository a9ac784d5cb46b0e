#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <thread>

#include "packing/selftest.hpp"

using namespace packing;

TEST_CASE("instance enumeration counts") {
  int systems = 0;
  for_each_set_system(2, 2, [&](const SetSystem& t) {
    CHECK(is_normalized(t));
    ++systems;
  });
  // n=0: 1; n=1: 3; n=2: multisets of {1,2,3 masks} of size <=2 -> 1+3+6
  CHECK(systems == 14);

  int graphs = 0;
  for_each_graph(3, [&](const Graph&) { ++graphs; });
  CHECK(graphs == 1 + 1 + 2 + 8);
}

TEST_CASE("random instances respect their bounds") {
  SplitMix64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const SetSystem t = random_set_system(rng, 7, 6);
    CHECK(t.universe_size() >= 1);
    CHECK(t.universe_size() <= 7);
    CHECK(t.set_count() <= 6);
    CHECK(is_normalized(t));
    const Graph g = random_graph(rng, 8);
    CHECK(g.vertex_count() <= 8);
  }
}

TEST_CASE("instance digests separate instances") {
  const SetSystem a(2, {{0}});
  const SetSystem b(2, {{1}});
  CHECK(instance_digest(a) == instance_digest(a));
  CHECK(instance_digest(a) != instance_digest(b));
}

TEST_CASE("selftest passes and covers every route") {
  SelftestOptions opt;
  opt.max_n = 2;
  opt.max_m = 2;
  opt.samples = 25;
  opt.check.random_feasible = 4;
  const EquivalenceReport rep = run_selftest(opt);
  CHECK(rep.pass());
  CHECK(rep.failures == 0);
  CHECK(rep.instances_checked > 0);
  for (const char* route : {"scbar-sp", "scbar-ep", "scbar-vp", "vp-scbar", "ep-vp"})
    CHECK(rep.route_count(route) > 0);

  SECTION("every record carries both solution-map sizes and the optima") {
    for (const auto& r : rep.records) {
      CHECK(r.source_opt >= 0);
      CHECK(r.target_opt >= 0);
      CHECK(r.forward_size >= 0);
      CHECK(r.backward_size >= 0);
      CHECK(r.instance_digest.size() == 16);
    }
  }
}

TEST_CASE("solvers and predicates are safe to run concurrently on shared instances") {
  SplitMix64 rng(77);
  const Graph g = detail::gen_gnp_with(rng, 7, 0.4);
  const SetSystem t = detail::gen_setsystem_with(rng, 6, 5, 3);
  const auto expect_vp = exact_vertex_packing(g).size;
  const auto expect_ep = exact_edge_packing(g).size;
  const auto expect_el = exact_element_packing(t).size;

  std::vector<std::thread> workers;
  std::atomic<int> disagreements{0};
  for (int w = 0; w < 8; ++w)
    workers.emplace_back([&] {
      for (int it = 0; it < 50; ++it) {
        if (exact_vertex_packing(g).size != expect_vp) ++disagreements;
        if (exact_edge_packing(g).size != expect_ep) ++disagreements;
        if (exact_element_packing(t).size != expect_el) ++disagreements;
        SplitMix64 local(it);
        const auto sel = detail::random_disjoint_selection(local, detail::vertex_footprints(g));
        if (!is_vertex_packing(g, VertexPacking{sel})) ++disagreements;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(disagreements == 0);
}

TEST_CASE("selftest on empty instances only") {
  SelftestOptions opt;
  opt.max_n = 0;
  opt.max_m = 0;
  opt.samples = 2;
  const EquivalenceReport rep = run_selftest(opt);
  CHECK(rep.pass());
  CHECK(rep.route_count("vp-scbar") > 0);
}

TEST_CASE("corruption injection is flagged and fails the run") {
  SelftestOptions opt;
  opt.max_n = 2;
  opt.max_m = 2;
  opt.samples = 0;
  opt.inject_corruption = true;
  const EquivalenceReport rep = run_selftest(opt);
  CHECK_FALSE(rep.pass());
  CHECK(rep.failures == 1);
  CHECK(rep.route_count("negative-control") == 1);
  for (const auto& r : rep.records)
    if (r.route == "negative-control") {
      CHECK_FALSE(r.pass);
      CHECK_FALSE(r.feasibility_ok);
    }
}
