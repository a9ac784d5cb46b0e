#include <catch2/catch_amalgamated.hpp>

#include "packing/generators.hpp"
#include "packing/matching.hpp"
#include "support/oracle.hpp"

using namespace packing;

namespace {

BipartiteGraph random_bipartite(SplitMix64& rng, int max_left, int max_right) {
  const int l = static_cast<int>(rng.next_below(max_left + 1));
  const int r = static_cast<int>(rng.next_below(max_right + 1));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < r; ++j)
      if (rng.next_double() < 0.4) edges.emplace_back(i, j);
  return BipartiteGraph(l, r, std::move(edges));
}

bool valid_matching(const BipartiteGraph& b, const Matching& m) {
  std::vector<char> left_used(b.left_count(), 0), right_used(b.right_count(), 0);
  for (auto [l, r] : m.pairs) {
    bool is_edge = false;
    for (int x : b.right_neighbors(l)) is_edge |= x == r;
    if (!is_edge || left_used[l] || right_used[r]) return false;
    left_used[l] = 1;
    right_used[r] = 1;
  }
  return true;
}

}  // namespace

TEST_CASE("bipartite graph validation") {
  CHECK_THROWS_AS(BipartiteGraph(1, 1, {{0, 1}}), InputError);
  CHECK_THROWS_AS(BipartiteGraph(1, 1, {{0, 0}, {0, 0}}), InputError);
  CHECK_THROWS_AS(BipartiteGraph(-1, 0, {}), InputError);
}

TEST_CASE("maximum matching on small fixed instances") {
  const Matching empty = max_matching(BipartiteGraph(0, 0, {}));
  CHECK(empty.pairs.empty());
  CHECK(empty.saturates_left);

  const Matching ident = max_matching(BipartiteGraph(2, 2, {{0, 0}, {1, 1}}));
  CHECK(ident.pairs.size() == 2);
  CHECK(ident.saturates_left);

  const Matching funnel =
      max_matching(BipartiteGraph(3, 1, {{0, 0}, {1, 0}, {2, 0}}));
  CHECK(funnel.pairs.size() == 1);
  CHECK_FALSE(funnel.saturates_left);
}

TEST_CASE("maximum matching is optimal and valid") {
  SECTION("exhaustively for small shapes") {
    for (int l = 0; l <= 3; ++l)
      for (int r = 0; r <= 3; ++r)
        for (int mask = 0; mask < (1 << (l * r)); ++mask) {
          std::vector<std::pair<int, int>> edges;
          for (int i = 0; i < l; ++i)
            for (int j = 0; j < r; ++j)
              if (mask & (1 << (i * r + j))) edges.emplace_back(i, j);
          const BipartiteGraph b(l, r, std::move(edges));
          const Matching m = max_matching(b);
          CHECK(valid_matching(b, m));
          CHECK(static_cast<int>(m.pairs.size()) == oracle::max_matching_size(b));
        }
  }

  SECTION("on random graphs with up to 10 vertices") {
    SplitMix64 rng(23);
    for (int it = 0; it < 400; ++it) {
      const BipartiteGraph b = random_bipartite(rng, 5, 5);
      const Matching m = max_matching(b);
      CHECK(valid_matching(b, m));
      CHECK(static_cast<int>(m.pairs.size()) == oracle::max_matching_size(b));
    }
  }
}

TEST_CASE("hall violator certificates") {
  CHECK_FALSE(hall_violator(BipartiteGraph(2, 2, {{0, 0}, {1, 1}})).has_value());

  const auto pigeon = hall_violator(BipartiteGraph(2, 1, {{0, 0}, {1, 0}}));
  REQUIRE(pigeon.has_value());
  CHECK(*pigeon == std::vector<int>{0, 1});

  const auto fan = hall_violator(BipartiteGraph(3, 2, {{0, 0}, {1, 0}, {2, 0}}));
  REQUIRE(fan.has_value());
  CHECK(fan->size() >= 2);

  SECTION("duality with left saturation, and the witness inequality") {
    SplitMix64 rng(29);
    for (int it = 0; it < 400; ++it) {
      const BipartiteGraph b = random_bipartite(rng, 5, 5);
      const Matching m = max_matching(b);
      const auto viol = hall_violator(b);
      CHECK(viol.has_value() == !m.saturates_left);
      if (viol) {
        std::vector<char> nb(b.right_count(), 0);
        for (int l : *viol)
          for (int r : b.right_neighbors(l)) nb[r] = 1;
        const int neighborhood = static_cast<int>(std::count(nb.begin(), nb.end(), 1));
        CHECK(static_cast<int>(viol->size()) > neighborhood);
      }
    }
  }
}

TEST_CASE("matching is deterministic") {
  SplitMix64 rng(31);
  for (int it = 0; it < 50; ++it) {
    const BipartiteGraph b = random_bipartite(rng, 5, 5);
    const Matching a = max_matching(b);
    const Matching c = max_matching(b);
    CHECK(a.pairs == c.pairs);
  }
}
