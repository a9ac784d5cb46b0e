#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "packing/errors.hpp"

namespace packing {

/// Sorted set of non-negative indices. The tag keeps the four packing kinds
/// apart at compile time; range checks against a concrete instance happen in
/// the feasibility predicates.
template <class Tag>
class IndexSet {
public:
  IndexSet() = default;

  explicit IndexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (!ids_.empty() && ids_.front() < 0)
      throw InputError("negative index in solution");
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
      throw InputError("duplicate index in solution");
  }

  std::span<const int> ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
  std::vector<int> ids_;
};

using VertexPacking = IndexSet<struct VertexPackingTag>;
using EdgePacking = IndexSet<struct EdgePackingTag>;
using SetPacking = IndexSet<struct SetPackingTag>;
using ElementPacking = IndexSet<struct ElementPackingTag>;

}  // namespace packing
