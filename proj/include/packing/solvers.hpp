#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "packing/core.hpp"
#include "packing/graph.hpp"
#include "packing/reductions.hpp"
#include "packing/set_system.hpp"
#include "packing/solutions.hpp"

namespace packing {

enum class Problem { vertex_packing, edge_packing, set_packing, element_packing };
enum class Algo { exact, greedy, approx_chain, decision };

inline std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::vertex_packing: return "vertex-packing";
    case Problem::edge_packing: return "edge-packing";
    case Problem::set_packing: return "set-packing";
    case Problem::element_packing: return "element-packing";
  }
  return "?";
}

inline std::string_view to_string(Algo a) {
  switch (a) {
    case Algo::exact: return "exact";
    case Algo::greedy: return "greedy";
    case Algo::approx_chain: return "approx-chain";
    case Algo::decision: return "decision";
  }
  return "?";
}

using Solution = std::variant<VertexPacking, EdgePacking, SetPacking, ElementPacking>;

/// Outcome of one solver run. `optimal` is set only by the exact solvers.
struct SolveReport {
  Problem problem{};
  Algo algo{};
  Solution solution;
  int size = 0;
  bool optimal = false;
  double elapsed_ms = 0.0;

  std::span<const int> ids() const {
    return std::visit([](const auto& s) { return s.ids(); }, solution);
  }
};

namespace detail {

/// Fixed-width bitset sized at construction.
class Bitset {
public:
  explicit Bitset(int bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Index of the lowest set bit, -1 if none.
  int lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k) * 64 + std::countr_zero(words_[k]);
    return -1;
  }

  Bitset andnot(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t k = 0; k < r.words_.size(); ++k) r.words_[k] &= ~o.words_[k];
    return r;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

private:
  std::vector<std::uint64_t> words_;
};

/// Pairwise-conflict rows derived from item footprints: row i holds every j
/// whose footprint intersects footprint i (including i itself).
inline std::vector<Bitset> conflict_rows(const std::vector<Bitset>& fp) {
  const int k = static_cast<int>(fp.size());
  std::vector<Bitset> rows(k, Bitset(k));
  for (int i = 0; i < k; ++i) {
    rows[i].set(i);
    for (int j = i + 1; j < k; ++j)
      if (fp[i].intersects(fp[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  }
  return rows;
}

/// Maximum selection of pairwise-disjoint footprints, returned as the
/// lexicographically smallest optimum. Include-first depth-first search over
/// items in index order; a branch is cut when the chosen items plus all still
/// compatible candidates cannot strictly beat the incumbent, which preserves
/// the first (= lexicographically least) optimum found.
inline std::vector<int> max_disjoint_footprints(const std::vector<Bitset>& fp) {
  const int k = static_cast<int>(fp.size());
  const auto rows = conflict_rows(fp);
  std::vector<int> best, chosen;

  auto rec = [&](auto&& self, const Bitset& cand) -> void {
    if (static_cast<int>(chosen.size()) + cand.count() <= static_cast<int>(best.size()))
      return;
    const int i = cand.lowest();
    if (i < 0) return;
    chosen.push_back(i);
    if (chosen.size() > best.size()) best = chosen;
    self(self, cand.andnot(rows[i]));
    chosen.pop_back();
    Bitset rest = cand;
    rest.reset(i);
    self(self, rest);
  };

  Bitset all(k);
  for (int i = 0; i < k; ++i) all.set(i);
  rec(rec, all);
  return best;
}

/// Depth-bounded search for a pairwise-disjoint selection of size >= want;
/// returns the first witness found (of size exactly want) or nothing.
inline std::optional<std::vector<int>> find_disjoint_footprints(
    const std::vector<Bitset>& fp, int want) {
  if (want < 0) throw InputError("packing size bound must be non-negative");
  if (want == 0) return std::vector<int>{};
  const int k = static_cast<int>(fp.size());
  const auto rows = conflict_rows(fp);
  std::vector<int> chosen;

  auto rec = [&](auto&& self, const Bitset& cand) -> bool {
    if (static_cast<int>(chosen.size()) == want) return true;
    if (static_cast<int>(chosen.size()) + cand.count() < want) return false;
    const int i = cand.lowest();
    if (i < 0) return false;
    chosen.push_back(i);
    if (self(self, cand.andnot(rows[i]))) return true;
    chosen.pop_back();
    Bitset rest = cand;
    rest.reset(i);
    return self(self, rest);
  };

  Bitset all(k);
  for (int i = 0; i < k; ++i) all.set(i);
  if (rec(rec, all)) return chosen;
  return std::nullopt;
}

/// Enumerates every pairwise-disjoint selection of size exactly `want`.
template <class F>
inline void for_each_disjoint_selection(const std::vector<Bitset>& fp, int want, F&& f) {
  const int k = static_cast<int>(fp.size());
  const auto rows = conflict_rows(fp);
  std::vector<int> chosen;

  auto rec = [&](auto&& self, const Bitset& cand) -> void {
    if (static_cast<int>(chosen.size()) == want) {
      f(chosen);
      return;
    }
    if (static_cast<int>(chosen.size()) + cand.count() < want) return;
    const int i = cand.lowest();
    if (i < 0) return;
    chosen.push_back(i);
    self(self, cand.andnot(rows[i]));
    chosen.pop_back();
    Bitset rest = cand;
    rest.reset(i);
    self(self, rest);
  };

  Bitset all(k);
  for (int i = 0; i < k; ++i) all.set(i);
  rec(rec, all);
}

// Footprints: each item claims a region of a ground set; a solution is
// feasible exactly when the claimed regions are pairwise disjoint.

inline std::vector<Bitset> vertex_footprints(const Graph& g) {
  std::vector<Bitset> fp(g.vertex_count(), Bitset(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    fp[v].set(v);
    for (int u : g.neighbors(v)) fp[v].set(u);
  }
  return fp;
}

inline std::vector<Bitset> edge_footprints(const Graph& g) {
  std::vector<Bitset> fp(g.edge_count(), Bitset(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    for (int f : g.incident_edges(u)) fp[e].set(f);
    for (int f : g.incident_edges(v)) fp[e].set(f);
  }
  return fp;
}

inline std::vector<Bitset> set_footprints(const SetSystem& t) {
  std::vector<Bitset> fp(t.set_count(), Bitset(t.universe_size()));
  for (int j = 0; j < t.set_count(); ++j)
    for (int a : t.set(j)) fp[j].set(a);
  return fp;
}

inline std::vector<Bitset> element_footprints(const SetSystem& t) {
  std::vector<Bitset> fp(t.universe_size(), Bitset(t.set_count()));
  for (int a = 0; a < t.universe_size(); ++a)
    for (int j : t.sets_containing(a)) fp[a].set(j);
  return fp;
}

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact solvers (branch and bound, lexicographically smallest optimum)
//
// The bound is the remaining-candidate count. That is plenty for the
// exhaustive-equivalence scale this library targets (tens of items) and for
// dense conflicts at a few hundred items; sparse instances with large optima
// grow exponentially past that.
// ---------------------------------------------------------------------------

inline SolveReport exact_vertex_packing(const Graph& g) {
  detail::Stopwatch sw;
  VertexPacking sol(detail::max_disjoint_footprints(detail::vertex_footprints(g)));
  detail::ensure(is_vertex_packing(g, sol), "exact vertex packing infeasible");
  return {Problem::vertex_packing, Algo::exact, sol, sol.size(), true, sw.ms()};
}

inline SolveReport exact_edge_packing(const Graph& g) {
  detail::Stopwatch sw;
  EdgePacking sol(detail::max_disjoint_footprints(detail::edge_footprints(g)));
  detail::ensure(is_edge_packing(g, sol), "exact edge packing infeasible");
  return {Problem::edge_packing, Algo::exact, sol, sol.size(), true, sw.ms()};
}

inline SolveReport exact_set_packing(const SetSystem& t) {
  detail::Stopwatch sw;
  SetPacking sol(detail::max_disjoint_footprints(detail::set_footprints(t)));
  detail::ensure(is_set_packing(t, sol), "exact set packing infeasible");
  return {Problem::set_packing, Algo::exact, sol, sol.size(), true, sw.ms()};
}

inline SolveReport exact_element_packing(const SetSystem& t) {
  detail::Stopwatch sw;
  ElementPacking sol(detail::max_disjoint_footprints(detail::element_footprints(t)));
  detail::ensure(is_element_packing(t, sol), "exact element packing infeasible");
  return {Problem::element_packing, Algo::exact, sol, sol.size(), true, sw.ms()};
}

// ---------------------------------------------------------------------------
// Greedy set packing and the composed approximations
// ---------------------------------------------------------------------------

/// Repeatedly selects the remaining set of minimum cardinality (ties: minimum
/// index) and discards everything intersecting it. Empty sets, if present,
/// are selected first and conflict with nothing. The result is within a
/// ceil(sqrt(|U|)) factor of the optimum.
inline SolveReport greedy_set_packing(const SetSystem& t) {
  detail::Stopwatch sw;
  const auto fp = detail::set_footprints(t);
  std::vector<char> alive(t.set_count(), 1);
  std::vector<int> picked;
  for (;;) {
    int best = -1;
    for (int j = 0; j < t.set_count(); ++j)
      if (alive[j] && (best < 0 || t.set(j).size() < t.set(best).size())) best = j;
    if (best < 0) break;
    picked.push_back(best);
    for (int j = 0; j < t.set_count(); ++j)
      if (alive[j] && (j == best || fp[best].intersects(fp[j]))) alive[j] = 0;
  }
  std::sort(picked.begin(), picked.end());
  SetPacking sol(std::move(picked));
  detail::ensure(is_set_packing(t, sol), "greedy produced an infeasible set packing");
  return {Problem::set_packing, Algo::greedy, sol, sol.size(), false, sw.ms()};
}

/// sqrt(|V|)-factor vertex packing: pass through the closed-neighborhood
/// hypergraph and its transpose, run the greedy set packing there, and map
/// the answer back (set ids of the transpose are vertex ids).
inline SolveReport approx_vertex_packing(const Graph& g) {
  detail::Stopwatch sw;
  const SetSystem sc = vertex_packing_to_sc(g);
  const ScToSetPackingWitness w = sc_to_set_packing(sc);
  const SolveReport greedy = greedy_set_packing(w.target);
  const ElementPacking ep = map_sets_to_elements(w, std::get<SetPacking>(greedy.solution));
  const VertexPacking sol = sc_solution_to_vertex_packing(g, ep);
  return {Problem::vertex_packing, Algo::approx_chain, sol, sol.size(), false, sw.ms()};
}

/// sqrt(|E|)-factor edge packing: vertex packing approximation on the line
/// graph; line-graph vertex ids are edge ids.
inline SolveReport approx_edge_packing(const Graph& g) {
  detail::Stopwatch sw;
  const SolveReport inner = approx_vertex_packing(line_graph(g));
  const EdgePacking sol =
      line_graph_solution_to_edge_packing(g, std::get<VertexPacking>(inner.solution));
  return {Problem::edge_packing, Algo::approx_chain, sol, sol.size(), false, sw.ms()};
}

// ---------------------------------------------------------------------------
// Parameterized decision procedures (branch only to depth k)
// ---------------------------------------------------------------------------

inline std::optional<VertexPacking> find_vertex_packing(const Graph& g, int k) {
  auto r = detail::find_disjoint_footprints(detail::vertex_footprints(g), k);
  if (!r) return std::nullopt;
  return VertexPacking(std::move(*r));
}

inline std::optional<EdgePacking> find_edge_packing(const Graph& g, int k) {
  auto r = detail::find_disjoint_footprints(detail::edge_footprints(g), k);
  if (!r) return std::nullopt;
  return EdgePacking(std::move(*r));
}

inline std::optional<SetPacking> find_set_packing(const SetSystem& t, int k) {
  auto r = detail::find_disjoint_footprints(detail::set_footprints(t), k);
  if (!r) return std::nullopt;
  return SetPacking(std::move(*r));
}

inline std::optional<ElementPacking> find_element_packing(const SetSystem& t, int k) {
  auto r = detail::find_disjoint_footprints(detail::element_footprints(t), k);
  if (!r) return std::nullopt;
  return ElementPacking(std::move(*r));
}

inline bool decide_vertex_packing(const Graph& g, int k) {
  return find_vertex_packing(g, k).has_value();
}
inline bool decide_edge_packing(const Graph& g, int k) {
  return find_edge_packing(g, k).has_value();
}
inline bool decide_set_packing(const SetSystem& t, int k) {
  return find_set_packing(t, k).has_value();
}
inline bool decide_element_packing(const SetSystem& t, int k) {
  return find_element_packing(t, k).has_value();
}

/// Smallest s with s*s >= n; the approximation guarantees are stated against
/// this integer bound.
inline int ceil_sqrt(int n) {
  int s = 0;
  while (s * s < n) ++s;
  return s;
}

}  // namespace packing
