#include "oddjoin/hitting_set.hpp"

#include <algorithm>
#include <unordered_map>

namespace oddjoin {
namespace {

class HittingSetSearch {
 public:
  explicit HittingSetSearch(std::span<const EdgeSet> family) : family_(family.begin(), family.end()) {}

  EdgeSet run() {
    best_ = greedy();
    recurse(EdgeSet{}, EdgeSet{});
    return best_;
  }

 private:
  EdgeSet greedy() const {
    EdgeSet chosen;
    for (;;) {
      std::vector<int> hits(EdgeSet::kCapacity, 0);
      bool any = false;
      for (EdgeSet s : family_) {
        if (s.intersects(chosen)) continue;
        any = true;
        s.for_each([&](int e) { ++hits[static_cast<std::size_t>(e)]; });
      }
      if (!any) return chosen;
      const auto it = std::max_element(hits.begin(), hits.end());
      chosen.insert(static_cast<int>(it - hits.begin()));
    }
  }

  // Disjoint unhit members give a lower bound on what is still needed.
  int packing_bound(EdgeSet chosen, EdgeSet excluded) const {
    EdgeSet used;
    int count = 0;
    for (EdgeSet s : family_) {
      if (s.intersects(chosen)) continue;
      const EdgeSet open = s - excluded;
      if (!open.intersects(used)) {
        used |= open;
        ++count;
      }
    }
    return count;
  }

  void recurse(EdgeSet chosen, EdgeSet excluded) {
    if (chosen.size() >= best_.size()) return;
    const EdgeSet* pick = nullptr;
    int pick_size = EdgeSet::kCapacity + 1;
    for (const EdgeSet& s : family_) {
      if (s.intersects(chosen)) continue;
      const int open = (s - excluded).size();
      if (open == 0) return;
      if (open < pick_size) {
        pick_size = open;
        pick = &s;
      }
    }
    if (pick == nullptr) {
      best_ = chosen;
      return;
    }
    if (chosen.size() + packing_bound(chosen, excluded) >= best_.size()) return;
    EdgeSet skipped = excluded;
    (*pick - excluded).for_each([&](int e) {
      recurse(chosen | EdgeSet::singleton(e), skipped);
      skipped.insert(e);
    });
  }

  std::vector<EdgeSet> family_;
  EdgeSet best_;
};

class DisjointSearch {
 public:
  DisjointSearch(std::span<const EdgeSet> family, int stop_at) : stop_at_(stop_at) {
    containing_.resize(EdgeSet::kCapacity);
    for (EdgeSet s : family) {
      if (s.empty()) continue;
      s.for_each([&](int e) { containing_[static_cast<std::size_t>(e)].push_back(s); });
    }
  }

  int value(EdgeSet avail) {
    avail = trim(avail);
    if (avail.empty()) return 0;
    if (const auto it = memo_.find(avail.bits()); it != memo_.end()) return it->second;
    const int e = avail.front();
    int best = value(avail - EdgeSet::singleton(e));
    for (EdgeSet s : containing_[static_cast<std::size_t>(e)]) {
      if (best >= stop_at_) break;
      if (s.is_subset_of(avail)) best = std::max(best, 1 + value(avail - s));
    }
    memo_.emplace(avail.bits(), best);
    return best;
  }

  std::vector<EdgeSet> witness(EdgeSet avail) {
    std::vector<EdgeSet> out;
    for (;;) {
      avail = trim(avail);
      const int target = value(avail);
      if (target == 0) return out;
      const int e = avail.front();
      if (value(avail - EdgeSet::singleton(e)) == target) {
        avail -= EdgeSet::singleton(e);
        continue;
      }
      for (EdgeSet s : containing_[static_cast<std::size_t>(e)]) {
        if (s.is_subset_of(avail) && 1 + value(avail - s) == target) {
          out.push_back(s);
          avail -= s;
          break;
        }
      }
    }
  }

 private:
  // Elements in no member that fits are useless; dropping them keeps the
  // memo small.
  EdgeSet trim(EdgeSet avail) const {
    EdgeSet useful;
    avail.for_each([&](int e) {
      if (useful.contains(e)) return;
      for (EdgeSet s : containing_[static_cast<std::size_t>(e)]) {
        if (s.is_subset_of(avail)) {
          useful |= s;
          return;
        }
      }
    });
    return useful;
  }

  int stop_at_;
  std::vector<std::vector<EdgeSet>> containing_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace

std::optional<EdgeSet> min_hitting_set(std::span<const EdgeSet> family) {
  if (std::any_of(family.begin(), family.end(), [](EdgeSet s) { return s.empty(); })) return std::nullopt;
  return HittingSetSearch(family).run();
}

std::vector<EdgeSet> max_disjoint_subfamily(std::span<const EdgeSet> family, EdgeSet allowed,
                                            int stop_at) {
  DisjointSearch search(family, stop_at);
  return search.witness(allowed);
}

std::vector<EdgeSet> max_disjoint_subfamily(std::span<const EdgeSet> family) {
  EdgeSet all;
  for (EdgeSet s : family) all |= s;
  return max_disjoint_subfamily(family, all);
}

std::vector<EdgeSet> minimal_members(std::vector<EdgeSet> sets) {
  std::sort(sets.begin(), sets.end(), [](EdgeSet a, EdgeSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<EdgeSet> out;
  for (EdgeSet s : sets) {
    const bool dominated =
        std::any_of(out.begin(), out.end(), [&](EdgeSet kept) { return kept.is_subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](EdgeSet a, EdgeSet b) { return lex_less(a, b); });
  return out;
}

std::vector<EdgeSet> minimal_transversals(std::span<const EdgeSet> family) {
  std::vector<EdgeSet> current{EdgeSet{}};
  for (EdgeSet member : family) {
    std::vector<EdgeSet> next;
    for (EdgeSet t : current) {
      if (t.intersects(member)) {
        next.push_back(t);
        continue;
      }
      member.for_each([&](int e) { next.push_back(t | EdgeSet::singleton(e)); });
    }
    current = minimal_members(std::move(next));
  }
  return current;
}

}  // namespace oddjoin
