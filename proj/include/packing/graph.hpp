#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "packing/errors.hpp"

namespace packing {

/// Undirected simple graph. Vertices are dense indices 0..n-1; an edge is
/// identified by its position in the edge list. Endpoints are stored with the
/// lower vertex first. Immutable after construction.
class Graph {
public:
  Graph() = default;

  Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw InputError("vertex count must be non-negative");
    adj_.resize(n_);
    inc_.resize(n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto& [u, v] = edges_[e];
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n_)
        throw InputError("edge endpoint out of range: {" + std::to_string(u) +
                         "," + std::to_string(v) + "}");
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      inc_[u].push_back(static_cast<int>(e));
      inc_[v].push_back(static_cast<int>(e));
    }
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw InputError("duplicate edge");
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Endpoints of edge e, lower vertex first.
  std::pair<int, int> edge(int e) const {
    check_edge(e);
    return edges_[e];
  }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Neighbors of v, ascending.
  std::span<const int> neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  /// Ids of the edges incident to v, ascending.
  std::span<const int> incident_edges(int v) const {
    check_vertex(v);
    return inc_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::optional<int> edge_id(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    for (int e : inc_[u]) {
      auto [a, b] = edges_[e];
      if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return std::nullopt;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex index " + std::to_string(v) + " out of range");
  }

  void check_edge(int e) const {
    if (e < 0 || e >= edge_count())
      throw InputError("edge index " + std::to_string(e) + " out of range");
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
};

}  // namespace packing
