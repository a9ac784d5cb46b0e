#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "packing/core.hpp"
#include "packing/graph.hpp"
#include "packing/matching.hpp"
#include "packing/set_system.hpp"
#include "packing/solutions.hpp"

namespace packing {

namespace detail {

inline void require_normalized(const SetSystem& t, const char* where) {
  if (!is_normalized(t))
    throw InputError(std::string(where) +
                     ": input must be normalized (contains an empty set)");
}

inline void require(bool ok, const char* what) {
  if (!ok) throw ContractError(what);
}

// Guarantees of the constructions themselves; a failure here is a bug, not
// bad caller input.
inline void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Element packing <-> set packing (the transpose construction)
// ---------------------------------------------------------------------------

/// Transpose construction: the target's universe is the source's set list and
/// target set i is the membership list of source element i. Solutions
/// correspond index-for-index in both directions.
struct ScToSetPackingWitness {
  SetSystem source;
  SetSystem target;
};

inline ScToSetPackingWitness sc_to_set_packing(const SetSystem& t) {
  detail::require_normalized(t, "sc_to_set_packing");
  std::vector<std::vector<int>> sets(t.universe_size());
  for (int a = 0; a < t.universe_size(); ++a) {
    auto mem = t.sets_containing(a);
    sets[a].assign(mem.begin(), mem.end());
  }
  return {t, SetSystem(t.set_count(), std::move(sets))};
}

/// Target set i corresponds to source element i; cardinality is preserved.
inline ElementPacking map_sets_to_elements(const ScToSetPackingWitness& w,
                                           const SetPacking& sp) {
  detail::require(is_set_packing(w.target, sp),
                  "map_sets_to_elements: input is not a set packing of the target");
  ElementPacking out(std::vector<int>(sp.ids().begin(), sp.ids().end()));
  detail::ensure(is_element_packing(w.source, out),
                 "transpose backward map produced an infeasible element packing");
  return out;
}

/// Source element a corresponds to target set a; cardinality is preserved.
inline SetPacking map_elements_to_sets(const ScToSetPackingWitness& w,
                                       const ElementPacking& ep) {
  detail::require(is_element_packing(w.source, ep),
                  "map_elements_to_sets: input is not feasible for the source");
  SetPacking out(std::vector<int>(ep.ids().begin(), ep.ids().end()));
  detail::ensure(is_set_packing(w.target, out),
                 "transpose forward map produced an infeasible set packing");
  return out;
}

// ---------------------------------------------------------------------------
// Element packing -> edge packing (incidence/co-occurrence graph)
// ---------------------------------------------------------------------------

/// Incidence construction: target vertices are [elements 0..n-1][sets
/// n..n+m-1]; an element-element edge joins every co-occurring pair and an
/// element-set edge joins each element to each set containing it. There are
/// never set-set edges.
struct ScToEdgePackingWitness {
  /// How a target edge arose. For element-element edges `first < second` are
  /// both element ids; for element-set edges `first` is the element and
  /// `second` the set id.
  struct EdgeOrigin {
    bool element_element = false;
    int first = -1;
    int second = -1;
  };

  SetSystem source;
  Graph target;
  std::vector<EdgeOrigin> origins;  // parallel to target.edges()
};

inline ScToEdgePackingWitness sc_to_edge_packing(const SetSystem& t) {
  detail::require_normalized(t, "sc_to_edge_packing");
  const int n = t.universe_size();
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < t.set_count(); ++j) {
    auto s = t.set(j);
    for (std::size_t i = 0; i < s.size(); ++i) {
      edges.emplace_back(s[i], n + j);
      for (std::size_t k = i + 1; k < s.size(); ++k) edges.emplace_back(s[i], s[k]);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  ScToEdgePackingWitness w;
  w.source = t;
  w.target = Graph(n + t.set_count(), edges);
  w.origins.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (v < n)
      w.origins.push_back({true, u, v});
    else
      w.origins.push_back({false, u, v - n});
  }
  return w;
}

/// The bipartite graph between the given elements (left side, in the given
/// order) and the sets containing at least one of them (right side, ascending
/// set id), with the element-set incidence edges.
struct InducedIncidence {
  std::vector<int> elements;  // left index -> element id
  std::vector<int> set_ids;   // right index -> set id
  BipartiteGraph graph;
};

inline InducedIncidence induced_incidence(const SetSystem& src,
                                          std::span<const int> elements) {
  InducedIncidence out;
  out.elements.assign(elements.begin(), elements.end());
  for (int a : elements) {
    auto mem = src.sets_containing(a);
    out.set_ids.insert(out.set_ids.end(), mem.begin(), mem.end());
  }
  std::sort(out.set_ids.begin(), out.set_ids.end());
  out.set_ids.erase(std::unique(out.set_ids.begin(), out.set_ids.end()),
                    out.set_ids.end());

  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < out.elements.size(); ++k)
    for (int j : src.sets_containing(out.elements[k])) {
      auto it = std::lower_bound(out.set_ids.begin(), out.set_ids.end(), j);
      edges.emplace_back(static_cast<int>(k),
                         static_cast<int>(it - out.set_ids.begin()));
    }
  out.graph = BipartiteGraph(static_cast<int>(out.elements.size()),
                             static_cast<int>(out.set_ids.size()), std::move(edges));
  return out;
}

/// Matches each selected element to a distinct set containing it (the Hall
/// condition holds whenever the input is feasible and every selected element
/// occurs somewhere) and returns the matched element-set edges. Cardinality
/// is preserved.
inline EdgePacking map_elements_to_edges(const ScToEdgePackingWitness& w,
                                         const ElementPacking& ep) {
  const SetSystem& src = w.source;
  detail::require(is_element_packing(src, ep),
                  "map_elements_to_edges: input is not feasible for the source");
  for (int a : ep.ids())
    if (src.sets_containing(a).empty())
      throw ContractError("map_elements_to_edges: element " + std::to_string(a + 1) +
                          " occurs in no set, so no incident edge exists; the "
                          "edge-packing map needs every selected element covered");

  const InducedIncidence bip = induced_incidence(src, ep.ids());
  Matching m = max_matching(bip.graph);
  detail::ensure(m.saturates_left,
                 "matching failed to saturate a feasible element packing");

  std::vector<int> ids;
  ids.reserve(m.pairs.size());
  const int n = src.universe_size();
  for (auto [k, l] : m.pairs) {
    auto id = w.target.edge_id(bip.elements[k], n + bip.set_ids[l]);
    detail::ensure(id.has_value(), "matched pair is not a target edge");
    ids.push_back(*id);
  }
  EdgePacking out(std::move(ids));
  detail::ensure(is_edge_packing(w.target, out),
                 "matched edges do not form an edge packing");
  return out;
}

/// Picks one element endpoint per packed edge: the lower-indexed element of
/// an element-element edge, the element of an element-set edge. Cardinality
/// is preserved.
inline ElementPacking map_edges_to_elements(const ScToEdgePackingWitness& w,
                                            const EdgePacking& f) {
  detail::require(is_edge_packing(w.target, f),
                  "map_edges_to_elements: input is not an edge packing of the target");
  std::vector<int> elements;
  elements.reserve(f.ids().size());
  for (int e : f.ids()) elements.push_back(w.origins[e].first);
  std::sort(elements.begin(), elements.end());
  detail::ensure(std::adjacent_find(elements.begin(), elements.end()) == elements.end(),
                 "two packed edges chose the same element");
  ElementPacking out(std::move(elements));
  detail::ensure(is_element_packing(w.source, out),
                 "chosen elements are not feasible for the source");
  return out;
}

// ---------------------------------------------------------------------------
// Element packing -> vertex packing (incidence graph with set-set edges)
// ---------------------------------------------------------------------------

/// Target vertices are [elements 0..n-1][sets n..n+m-1]; an element-set edge
/// joins each element to each set containing it and a set-set edge joins
/// every intersecting pair of sets. There are never element-element edges.
struct ScToVertexPackingWitness {
  SetSystem source;
  Graph target;
};

inline ScToVertexPackingWitness sc_to_vertex_packing(const SetSystem& t) {
  detail::require_normalized(t, "sc_to_vertex_packing");
  const int n = t.universe_size();
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < t.set_count(); ++j)
    for (int a : t.set(j)) edges.emplace_back(a, n + j);
  for (int i = 0; i < t.set_count(); ++i)
    for (int j = i + 1; j < t.set_count(); ++j)
      if (detail::sorted_intersects(t.set(i), t.set(j)))
        edges.emplace_back(n + i, n + j);
  std::sort(edges.begin(), edges.end());
  return {t, Graph(n + t.set_count(), std::move(edges))};
}

/// Identity embedding: element indices are the first n target vertices.
inline VertexPacking map_elements_to_vertices(const ScToVertexPackingWitness& w,
                                              const ElementPacking& ep) {
  detail::require(is_element_packing(w.source, ep),
                  "map_elements_to_vertices: input is not feasible for the source");
  VertexPacking out(std::vector<int>(ep.ids().begin(), ep.ids().end()));
  detail::ensure(is_vertex_packing(w.target, out),
                 "embedded element packing is not a vertex packing");
  return out;
}

/// Element vertices map to themselves; each packed set vertex contributes its
/// minimum-index element. Cardinality is preserved and the chosen elements
/// are pairwise distinct whenever the input packing is feasible.
inline ElementPacking map_vertices_to_elements(const ScToVertexPackingWitness& w,
                                               const VertexPacking& vp) {
  detail::require(is_vertex_packing(w.target, vp),
                  "map_vertices_to_elements: input is not a vertex packing of the target");
  const int n = w.source.universe_size();
  std::vector<int> elements;
  elements.reserve(vp.ids().size());
  for (int v : vp.ids()) {
    if (v < n) {
      elements.push_back(v);
    } else {
      auto s = w.source.set(v - n);
      detail::ensure(!s.empty(), "set vertex refers to an empty set");
      elements.push_back(s.front());
    }
  }
  std::sort(elements.begin(), elements.end());
  detail::ensure(std::adjacent_find(elements.begin(), elements.end()) == elements.end(),
                 "two packed vertices chose the same element");
  ElementPacking out(std::move(elements));
  detail::ensure(is_element_packing(w.source, out),
                 "chosen elements are not feasible for the source");
  return out;
}

// ---------------------------------------------------------------------------
// Vertex packing <-> element packing of the closed-neighborhood hypergraph,
// edge packing <-> vertex packing of the line graph
// ---------------------------------------------------------------------------

/// Universe = V, set i = N[i]. A subset of V is a vertex packing of g exactly
/// when the same index set is feasible for the target, so no witness type is
/// needed.
inline SetSystem vertex_packing_to_sc(const Graph& g) {
  return closed_nbhd_hypergraph(g);
}

/// Edge ids of g are vertex ids of line_graph(g); solutions carry over
/// unchanged in both directions.
inline Graph edge_packing_to_vertex_packing(const Graph& g) { return line_graph(g); }

inline ElementPacking vertex_packing_solution_to_sc(const Graph& g,
                                                    const VertexPacking& vp) {
  detail::require(is_vertex_packing(g, vp),
                  "vertex_packing_solution_to_sc: input is not a vertex packing");
  ElementPacking out(std::vector<int>(vp.ids().begin(), vp.ids().end()));
  detail::ensure(is_element_packing(vertex_packing_to_sc(g), out),
                 "vertex packing is not feasible for the neighborhood hypergraph");
  return out;
}

inline VertexPacking sc_solution_to_vertex_packing(const Graph& g,
                                                   const ElementPacking& ep) {
  detail::require(is_element_packing(vertex_packing_to_sc(g), ep),
                  "sc_solution_to_vertex_packing: input is not feasible for the target");
  VertexPacking out(std::vector<int>(ep.ids().begin(), ep.ids().end()));
  detail::ensure(is_vertex_packing(g, out),
                 "hypergraph solution is not a vertex packing");
  return out;
}

inline VertexPacking edge_packing_solution_to_line_graph(const Graph& g,
                                                         const EdgePacking& f) {
  detail::require(is_edge_packing(g, f),
                  "edge_packing_solution_to_line_graph: input is not an edge packing");
  VertexPacking out(std::vector<int>(f.ids().begin(), f.ids().end()));
  detail::ensure(is_vertex_packing(line_graph(g), out),
                 "edge packing is not a vertex packing of the line graph");
  return out;
}

inline EdgePacking line_graph_solution_to_edge_packing(const Graph& g,
                                                       const VertexPacking& vp) {
  detail::require(is_vertex_packing(line_graph(g), vp),
                  "line_graph_solution_to_edge_packing: input is not a vertex packing "
                  "of the line graph");
  EdgePacking out(std::vector<int>(vp.ids().begin(), vp.ids().end()));
  detail::ensure(is_edge_packing(g, out),
                 "line-graph solution is not an edge packing");
  return out;
}

}  // namespace packing
