#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "packing/errors.hpp"

namespace packing {

/// Universe of n elements (0..n-1) plus an ordered collection of subsets.
/// Sets are identified by position, duplicates are allowed, and elements
/// within a set are stored sorted. Immutable after construction.
class SetSystem {
public:
  SetSystem() = default;

  SetSystem(int universe_size, std::vector<std::vector<int>> sets)
      : n_(universe_size), sets_(std::move(sets)) {
    if (n_ < 0) throw InputError("universe size must be non-negative");
    member_of_.resize(n_);
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      auto& s = sets_[j];
      std::sort(s.begin(), s.end());
      if (!s.empty() && (s.front() < 0 || s.back() >= n_))
        throw InputError("set " + std::to_string(j) + " has an element out of range");
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InputError("duplicate element within set " + std::to_string(j));
      for (int a : s) member_of_[a].push_back(static_cast<int>(j));
    }
  }

  int universe_size() const { return n_; }
  int set_count() const { return static_cast<int>(sets_.size()); }

  /// Elements of set j, ascending.
  std::span<const int> set(int j) const {
    check_set(j);
    return sets_[j];
  }

  const std::vector<std::vector<int>>& sets() const { return sets_; }

  /// Membership list of element a: ids of the sets containing it, ascending.
  std::span<const int> sets_containing(int a) const {
    check_element(a);
    return member_of_[a];
  }

  void check_element(int a) const {
    if (a < 0 || a >= n_)
      throw InputError("element index " + std::to_string(a) + " out of range");
  }

  void check_set(int j) const {
    if (j < 0 || j >= set_count())
      throw InputError("set index " + std::to_string(j) + " out of range");
  }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
  int n_ = 0;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> member_of_;
};

inline bool is_normalized(const SetSystem& t) {
  for (const auto& s : t.sets())
    if (s.empty()) return false;
  return true;
}

/// Number of universe elements that occur in no set.
inline int uncovered_element_count(const SetSystem& t) {
  int c = 0;
  for (int a = 0; a < t.universe_size(); ++a)
    if (t.sets_containing(a).empty()) ++c;
  return c;
}

/// Result of removing empty sets: the cleaned system plus the id maps
/// relating new and original set indices.
struct NormalizeResult {
  SetSystem system;
  std::vector<int> kept_ids;     // new set id -> original set id
  std::vector<int> removed_ids;  // original ids of the dropped empty sets
};

inline NormalizeResult normalize(const SetSystem& t) {
  NormalizeResult out;
  std::vector<std::vector<int>> kept;
  for (int j = 0; j < t.set_count(); ++j) {
    if (t.set(j).empty()) {
      out.removed_ids.push_back(j);
    } else {
      out.kept_ids.push_back(j);
      kept.emplace_back(t.set(j).begin(), t.set(j).end());
    }
  }
  out.system = SetSystem(t.universe_size(), std::move(kept));
  return out;
}

}  // namespace packing
