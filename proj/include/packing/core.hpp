#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "packing/graph.hpp"
#include "packing/set_system.hpp"
#include "packing/solutions.hpp"

namespace packing {

namespace detail {

inline bool sorted_intersects(std::span<const int> a, std::span<const int> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return true;
  }
  return false;
}

}  // namespace detail

/// Closed neighborhood N[v]: v together with its neighbors, ascending.
inline std::vector<int> closed_nbhd_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  auto nbrs = g.neighbors(v);
  std::vector<int> out(nbrs.begin(), nbrs.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

/// Closed edge neighborhood N[e]: e together with every edge sharing an
/// endpoint with it, as ascending edge ids.
inline std::vector<int> closed_nbhd_edge(const Graph& g, int e) {
  auto [u, v] = g.edge(e);
  auto a = g.incident_edges(u);
  auto b = g.incident_edges(v);
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// True iff the selected vertices have pairwise disjoint closed neighborhoods.
inline bool is_vertex_packing(const Graph& g, const VertexPacking& sol) {
  std::vector<std::vector<int>> nbhds;
  nbhds.reserve(sol.ids().size());
  for (int v : sol.ids()) nbhds.push_back(closed_nbhd_vertex(g, v));
  for (std::size_t i = 0; i < nbhds.size(); ++i)
    for (std::size_t j = i + 1; j < nbhds.size(); ++j)
      if (detail::sorted_intersects(nbhds[i], nbhds[j])) return false;
  return true;
}

/// True iff the selected edges have pairwise disjoint closed edge neighborhoods.
inline bool is_edge_packing(const Graph& g, const EdgePacking& sol) {
  std::vector<std::vector<int>> nbhds;
  nbhds.reserve(sol.ids().size());
  for (int e : sol.ids()) nbhds.push_back(closed_nbhd_edge(g, e));
  for (std::size_t i = 0; i < nbhds.size(); ++i)
    for (std::size_t j = i + 1; j < nbhds.size(); ++j)
      if (detail::sorted_intersects(nbhds[i], nbhds[j])) return false;
  return true;
}

/// True iff the selected sets are pairwise disjoint as element sets.
inline bool is_set_packing(const SetSystem& t, const SetPacking& sol) {
  for (int j : sol.ids()) t.check_set(j);
  auto ids = sol.ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (detail::sorted_intersects(t.set(ids[i]), t.set(ids[j]))) return false;
  return true;
}

/// True iff no member of the collection contains two selected elements.
inline bool is_element_packing(const SetSystem& t, const ElementPacking& sol) {
  for (int a : sol.ids()) t.check_element(a);
  std::vector<char> selected(t.universe_size(), 0);
  for (int a : sol.ids()) selected[a] = 1;
  for (int j = 0; j < t.set_count(); ++j) {
    int hits = 0;
    for (int a : t.set(j)) {
      if (selected[a] && ++hits > 1) return false;
    }
  }
  return true;
}

/// Line graph L(G): one vertex per edge of g, adjacent iff the edges share an
/// endpoint. Vertex i of the output is edge i of the input.
inline Graph line_graph(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        edges.emplace_back(inc[i], inc[j]);
  }
  // two simple-graph edges share at most one endpoint, so no pair repeats
  std::sort(edges.begin(), edges.end());
  return Graph(g.edge_count(), std::move(edges));
}

/// Hypergraph of closed neighborhoods: universe = V, set i = N[i].
inline SetSystem closed_nbhd_hypergraph(const Graph& g) {
  std::vector<std::vector<int>> sets;
  sets.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) sets.push_back(closed_nbhd_vertex(g, v));
  return SetSystem(g.vertex_count(), std::move(sets));
}

}  // namespace packing
