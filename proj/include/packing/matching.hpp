#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "packing/errors.hpp"

namespace packing {

/// Bipartite graph on left vertices 0..left_n-1 and right vertices
/// 0..right_n-1. Immutable after construction.
class BipartiteGraph {
public:
  BipartiteGraph() = default;

  BipartiteGraph(int left_n, int right_n, std::vector<std::pair<int, int>> edges)
      : left_n_(left_n), right_n_(right_n), edges_(std::move(edges)) {
    if (left_n_ < 0 || right_n_ < 0)
      throw InputError("side sizes must be non-negative");
    adj_.resize(left_n_);
    for (auto [l, r] : edges_) {
      if (l < 0 || l >= left_n_ || r < 0 || r >= right_n_)
        throw InputError("bipartite edge endpoint out of range");
      adj_[l].push_back(r);
    }
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw InputError("duplicate bipartite edge");
    }
  }

  int left_count() const { return left_n_; }
  int right_count() const { return right_n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Right neighbors of left vertex l, ascending.
  std::span<const int> right_neighbors(int l) const {
    if (l < 0 || l >= left_n_) throw InputError("left index out of range");
    return adj_[l];
  }

private:
  int left_n_ = 0;
  int right_n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// A matching (vertex-disjoint edge set), pairs sorted by left index.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  bool saturates_left = false;
};

/// Maximum-cardinality matching via augmenting paths. Deterministic: left
/// vertices are processed in increasing order and neighbor lists are scanned
/// in increasing right-index order.
inline Matching max_matching(const BipartiteGraph& b) {
  std::vector<int> match_right(b.right_count(), -1);  // right -> left
  std::vector<char> visited(b.right_count(), 0);

  std::function<bool(int)> augment = [&](int l) -> bool {
    for (int r : b.right_neighbors(l)) {
      if (visited[r]) continue;
      visited[r] = 1;
      if (match_right[r] < 0 || augment(match_right[r])) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };

  for (int l = 0; l < b.left_count(); ++l) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(l);
  }

  Matching m;
  for (int r = 0; r < b.right_count(); ++r)
    if (match_right[r] >= 0) m.pairs.emplace_back(match_right[r], r);
  std::sort(m.pairs.begin(), m.pairs.end());
  m.saturates_left = static_cast<int>(m.pairs.size()) == b.left_count();
  return m;
}

/// Empty when a left-saturating matching exists. Otherwise a witness
/// S subseteq X with |S| > |N(S)|: the left vertices reachable by alternating
/// paths from the lowest unmatched left vertex under a maximum matching.
inline std::optional<std::vector<int>> hall_violator(const BipartiteGraph& b) {
  Matching m = max_matching(b);
  if (m.saturates_left) return std::nullopt;

  std::vector<int> match_left(b.left_count(), -1);
  std::vector<int> match_right(b.right_count(), -1);
  for (auto [l, r] : m.pairs) {
    match_left[l] = r;
    match_right[r] = l;
  }
  int start = 0;
  while (match_left[start] >= 0) ++start;

  std::vector<char> in_s(b.left_count(), 0);
  std::vector<char> seen_r(b.right_count(), 0);
  std::vector<int> queue{start};
  in_s[start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int l = queue[head];
    for (int r : b.right_neighbors(l)) {
      if (seen_r[r]) continue;
      seen_r[r] = 1;
      // r is matched, else the matching would not be maximum
      int partner = match_right[r];
      if (partner >= 0 && !in_s[partner]) {
        in_s[partner] = 1;
        queue.push_back(partner);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace packing
