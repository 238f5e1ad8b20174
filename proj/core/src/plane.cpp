#include "oddjoin/plane.hpp"

#include <algorithm>
#include <cmath>

namespace oddjoin {

namespace {

bool walk_is_closed(const Multigraph& g, const std::vector<EdgeId>& walk) {
  const Edge& first = g.edge(walk.front());
  for (VertexId start : {first.u, first.v}) {
    VertexId at = start;
    bool ok = true;
    for (EdgeId e : walk) {
      const Edge& ed = g.edge(e);
      if (ed.u == at) {
        at = ed.v;
      } else if (ed.v == at) {
        at = ed.u;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && at == start) return true;
  }
  return false;
}

}  // namespace

void validate_embedding(const PlaneEmbedding& emb) {
  const Multigraph& g = emb.graph;
  std::vector<int> uses(static_cast<std::size_t>(g.num_edges()), 0);
  for (std::size_t f = 0; f < emb.faces.size(); ++f) {
    const auto& walk = emb.faces[f];
    if (walk.empty()) throw InputError("face " + std::to_string(f) + " is empty");
    for (EdgeId e : walk) {
      if (e < 0 || e >= g.num_edges()) throw InputError("face " + std::to_string(f) + " names unknown edge " + std::to_string(e));
      ++uses[static_cast<std::size_t>(e)];
    }
    if (!walk_is_closed(g, walk)) throw InputError("face " + std::to_string(f) + " is not a closed walk");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (uses[static_cast<std::size_t>(e)] != 2)
      throw InputError("edge " + std::to_string(e) + " lies on " + std::to_string(uses[static_cast<std::size_t>(e)]) +
                       " face sides, expected 2");
  const int pieces = static_cast<int>(components(g).size());
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int f = static_cast<int>(emb.faces.size());
  if (n - m + f != 1 + pieces)
    throw InputError("Euler's formula fails: n - m + f = " + std::to_string(n - m + f) + ", expected " +
                     std::to_string(1 + pieces));
}

int face_parity(const PlaneEmbedding& emb, EdgeSet sigma, int face) {
  int count = 0;
  for (EdgeId e : emb.faces[static_cast<std::size_t>(face)])
    if (sigma.contains(e)) ++count;
  return count % 2;
}

std::vector<int> odd_faces(const PlaneEmbedding& emb, EdgeSet sigma) {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f)
    if (face_parity(emb, sigma, f) == 1) out.push_back(f);
  return out;
}

Multigraph plane_dual(const PlaneEmbedding& emb) {
  const int m = emb.graph.num_edges();
  std::vector<std::vector<int>> sides(static_cast<std::size_t>(m));
  for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f)
    for (EdgeId e : emb.faces[static_cast<std::size_t>(f)]) sides[static_cast<std::size_t>(e)].push_back(f);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < m; ++e) {
    const auto& s = sides[static_cast<std::size_t>(e)];
    if (s.size() != 2) throw InputError("edge " + std::to_string(e) + " is not on exactly two face sides");
    edges.push_back({s[0], s[1]});
  }
  return Multigraph(static_cast<int>(emb.faces.size()), std::move(edges));
}

PlaneEmbedding embed_straight_line(const Multigraph& g, const std::vector<std::pair<double, double>>& positions) {
  const int n = g.num_vertices();
  if (static_cast<int>(positions.size()) != n) throw InputError("one position per vertex is required");
  if (!g.loops().empty()) throw InputError("straight-line drawings cannot hold loops");
  // Rotation at each vertex: incident edges by angle, parallel edges nested
  // so the bundle reverses at the far end.
  std::vector<std::vector<EdgeId>> rotation(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    std::vector<EdgeId> around = g.star(v).to_vector();
    const auto angle = [&](EdgeId e) {
      const VertexId w = g.edge(e).other(v);
      return std::atan2(positions[static_cast<std::size_t>(w)].second - positions[static_cast<std::size_t>(v)].second,
                        positions[static_cast<std::size_t>(w)].first - positions[static_cast<std::size_t>(v)].first);
    };
    std::sort(around.begin(), around.end(), [&](EdgeId a, EdgeId b) {
      const double ta = angle(a);
      const double tb = angle(b);
      if (ta != tb) return ta < tb;
      // Same direction: a parallel bundle. Ids ascend at the smaller end.
      const bool low = v < g.edge(a).other(v);
      return low ? a < b : a > b;
    });
    rotation[static_cast<std::size_t>(v)] = std::move(around);
  }
  const auto next_after = [&](VertexId v, EdgeId e) {
    const auto& rot = rotation[static_cast<std::size_t>(v)];
    const auto it = std::find(rot.begin(), rot.end(), e);
    const auto idx = static_cast<std::size_t>(it - rot.begin());
    return rot[(idx + 1) % rot.size()];
  };
  // Dart 2e runs u -> v, dart 2e+1 runs v -> u.
  const int m = g.num_edges();
  std::vector<bool> seen(static_cast<std::size_t>(2 * m), false);
  PlaneEmbedding emb{g, {}};
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    std::vector<EdgeId> walk;
    int d = d0;
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = true;
      const EdgeId e = d / 2;
      walk.push_back(e);
      const Edge& ed = g.edge(e);
      const VertexId head = d % 2 == 0 ? ed.v : ed.u;
      const EdgeId f = next_after(head, e);
      d = 2 * f + (g.edge(f).u == head ? 0 : 1);
    }
    emb.faces.push_back(std::move(walk));
  }
  // An isolated vertex adds a component but no darts; it sits in an existing face.
  validate_embedding(emb);
  return emb;
}

}  // namespace oddjoin
