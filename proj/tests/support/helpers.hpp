#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "oddjoin/signed_graft.hpp"

namespace testing {

inline oddjoin::Multigraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<oddjoin::Edge> out;
  for (auto [u, v] : edges) out.push_back({u, v});
  return oddjoin::Multigraph(n, out);
}

inline oddjoin::SignedGraft graft(int n, std::initializer_list<std::pair<int, int>> edges,
                                  oddjoin::EdgeSet sigma, oddjoin::VertexSet terminals = {}) {
  return oddjoin::SignedGraft(graph(n, edges), sigma, terminals);
}

inline oddjoin::SignedGraft all_odd(const oddjoin::Multigraph& g, oddjoin::VertexSet terminals = {}) {
  return oddjoin::SignedGraft(g, g.all_edges(), terminals);
}

template <class Set>
std::vector<std::uint64_t> bits(const std::vector<Set>& sets) {
  std::vector<std::uint64_t> out;
  for (Set s : sets) out.push_back(s.bits());
  return out;
}

}  // namespace testing
