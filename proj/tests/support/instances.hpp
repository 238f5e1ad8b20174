#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "oddjoin/plane.hpp"
#include "oddjoin/signed_graft.hpp"

namespace instances {

using oddjoin::Edge;
using oddjoin::EdgeSet;
using oddjoin::Multigraph;
using oddjoin::PlaneEmbedding;
using oddjoin::VertexSet;

struct PlaneInstance {
  PlaneEmbedding emb;
  EdgeSet sigma;
  VertexSet terminals;
};

inline bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  auto inside = [&](int x) { return a.first < x && x < a.second; };
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) return false;
  return inside(b.first) != inside(b.second);
}

// A polygon with non-crossing chords and a few doubled edges.
inline PlaneEmbedding random_outerplanar(std::mt19937_64& rng, int n) {
  std::vector<std::pair<double, double>> pos;
  for (int i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * i / n;
    pos.emplace_back(std::cos(a), std::sin(a));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  std::vector<std::pair<int, int>> chords;
  const int tries = static_cast<int>(rng() % static_cast<unsigned>(n));
  for (int k = 0; k < tries; ++k) {
    int a = static_cast<int>(rng() % static_cast<unsigned>(n));
    int b = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (a > b) std::swap(a, b);
    if (b - a < 2 || (a == 0 && b == n - 1)) continue;
    bool ok = true;
    for (auto c : chords) ok = ok && !chords_cross(c, {a, b}) && c != std::pair{a, b};
    if (!ok) continue;
    chords.emplace_back(a, b);
    edges.push_back({a, b});
  }
  const int doubles = static_cast<int>(rng() % 3);
  for (int k = 0; k < doubles; ++k) edges.push_back(edges[rng() % edges.size()]);
  const Multigraph g(n, edges);
  return oddjoin::embed_straight_line(g, pos);
}

// An r x c grid with some cells split by a diagonal.
inline PlaneEmbedding random_grid(std::mt19937_64& rng, int rows, int cols, bool diagonals) {
  std::vector<std::pair<double, double>> pos;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) pos.emplace_back(c, r);
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
      if (diagonals && r + 1 < rows && c + 1 < cols && rng() % 3 == 0) edges.push_back({id(r, c), id(r + 1, c + 1)});
    }
  }
  if (rng() % 2 == 0) edges.push_back(edges[rng() % edges.size()]);
  return oddjoin::embed_straight_line(Multigraph(rows * cols, edges), pos);
}

// Valid inputs for the plane-dual reduction: exactly two odd faces and either
// Sigma = E or a bipartite graph (where T-joins between like colours are even).
inline std::vector<PlaneInstance> plane_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<PlaneInstance> out;
  while (static_cast<int>(out.size()) < count) {
    const int kind = static_cast<int>(rng() % 3);
    PlaneEmbedding emb;
    if (kind == 0) emb = random_outerplanar(rng, 3 + static_cast<int>(rng() % 6));
    else emb = random_grid(rng, 2 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 2), kind == 1);
    const Multigraph& g = emb.graph;
    if (g.num_edges() > 16) continue;
    const oddjoin::SignedGraft all_odd(g, g.all_edges(), {});
    EdgeSet sigma = g.all_edges();
    const bool bipartite = oddjoin::is_bipartite(all_odd);
    if (bipartite || rng() % 4 == 0) {
      if (!bipartite) continue;
      sigma = EdgeSet(rng() & g.all_edges().bits());
    }
    if (oddjoin::odd_faces(emb, sigma).size() != 2) continue;
    VertexSet terminals;
    if (rng() % 2 == 0) {
      const int a = static_cast<int>(rng() % static_cast<unsigned>(g.num_vertices()));
      const int b = static_cast<int>(rng() % static_cast<unsigned>(g.num_vertices()));
      if (a == b) continue;
      terminals = VertexSet{a, b};
      if (sigma != g.all_edges()) {
        // like colours only
        const auto p = oddjoin::st_paths(g, a, b);
        if (p.empty() || p.front().size() % 2 == 1) continue;
      }
    }
    const oddjoin::SignedGraft sg(g, sigma, terminals);
    if (!oddjoin::has_odd_tjoin(sg)) continue;
    out.push_back({emb, sigma, terminals});
  }
  return out;
}

struct CommodityInstance {
  Multigraph h;
  int s1, t1, s2, t2;
};

struct TJoinInstance {
  Multigraph h;
  VertexSet terminals;
};

inline Multigraph random_multigraph(std::mt19937_64& rng, int n, int m) {
  std::vector<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u != v) edges.push_back({u, v});
  }
  return Multigraph(n, edges);
}

// Other vertices even, the four named ones of one parity.
inline bool parity_ok(const Multigraph& h, VertexSet named) {
  int parity = -1;
  for (int v = 0; v < h.num_vertices(); ++v) {
    const int d = h.degree(v) % 2;
    if (!named.contains(v)) {
      if (d != 0) return false;
    } else if (parity < 0) {
      parity = d;
    } else if (parity != d) {
      return false;
    }
  }
  return true;
}

inline std::vector<CommodityInstance> commodity_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<CommodityInstance> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int m = 4 + static_cast<int>(rng() % 7);
    const Multigraph h = random_multigraph(rng, n, m);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    std::shuffle(v.begin(), v.end(), rng);
    if (!parity_ok(h, VertexSet{v[0], v[1], v[2], v[3]})) continue;
    out.push_back({h, v[0], v[1], v[2], v[3]});
  }
  return out;
}

inline std::vector<TJoinInstance> tjoin_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<TJoinInstance> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int m = 4 + static_cast<int>(rng() % 7);
    const Multigraph h = random_multigraph(rng, n, m);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    std::shuffle(v.begin(), v.end(), rng);
    const VertexSet t{v[0], v[1], v[2], v[3]};
    if (!parity_ok(h, t) || !oddjoin::find_tjoin(h, t)) continue;
    out.push_back({h, t});
  }
  return out;
}

}  // namespace instances
