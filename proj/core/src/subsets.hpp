#pragma once

#include <cstdint>
#include <vector>

#include "oddjoin/id_set.hpp"

namespace oddjoin::detail {

// Calls fn on every k-subset of `from`, lexicographically by the positions
// chosen. Stops as soon as fn returns true and reports whether it did.
template <class Tag, class Fn>
bool for_each_subset_of_size(IdSet<Tag> from, int k, Fn&& fn) {
  const std::vector<int> ids = from.to_vector();
  const int n = static_cast<int>(ids.size());
  if (k < 0 || k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    IdSet<Tag> s;
    for (int i : pick) s.insert(ids[static_cast<std::size_t>(i)]);
    if (fn(s)) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Calls fn on every subset of `from` in increasing bitmask order. Stops as
// soon as fn returns true.
template <class Tag, class Fn>
bool for_each_subset(IdSet<Tag> from, Fn&& fn) {
  std::uint64_t sub = 0;
  for (;;) {
    if (fn(IdSet<Tag>(sub))) return true;
    if (sub == from.bits()) return false;
    sub = (sub - from.bits()) & from.bits();
  }
}

}  // namespace oddjoin::detail
