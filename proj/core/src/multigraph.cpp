#include "oddjoin/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace oddjoin {
namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
  std::vector<int> parent;
};

// Tree path between a and b inside `forest`, which must connect them.
EdgeSet forest_path(const Multigraph& g, EdgeSet forest, VertexId a, VertexId b) {
  const int n = g.num_vertices();
  std::vector<int> via(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> stack{a};
  VertexSet seen = VertexSet::singleton(a);
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    if (x == b) break;
    (g.star(x) & forest).for_each([&](EdgeId e) {
      const VertexId y = g.edge(e).other(x);
      if (!seen.contains(y)) {
        seen.insert(y);
        via[static_cast<std::size_t>(y)] = e;
        stack.push_back(y);
      }
    });
  }
  EdgeSet path;
  for (VertexId x = b; x != a;) {
    const EdgeId e = via[static_cast<std::size_t>(x)];
    path.insert(e);
    x = g.edge(e).other(x);
  }
  return path;
}

// Spanning forest of g[s] chosen greedily in edge-id order.
EdgeSet spanning_forest(const Multigraph& g, EdgeSet s) {
  UnionFind uf(g.num_vertices());
  EdgeSet forest;
  s.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    if (!ed.is_loop() && uf.unite(ed.u, ed.v)) forest.insert(e);
  });
  return forest;
}

}  // namespace

Multigraph::Multigraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0 || num_vertices_ > VertexSet::kCapacity)
    throw InputError("vertex count must lie in [0, 64]");
  if (edges_.size() > static_cast<std::size_t>(EdgeSet::kCapacity))
    throw InputError("at most 64 edges are supported");
  stars_.assign(static_cast<std::size_t>(num_vertices_), EdgeSet{});
  incident_.assign(static_cast<std::size_t>(num_vertices_), EdgeSet{});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_)
      throw InputError("edge " + std::to_string(i) + " references an unknown vertex");
    const int id = static_cast<int>(i);
    incident_[static_cast<std::size_t>(e.u)].insert(id);
    incident_[static_cast<std::size_t>(e.v)].insert(id);
    if (e.is_loop()) {
      loops_.insert(id);
    } else {
      stars_[static_cast<std::size_t>(e.u)].insert(id);
      stars_[static_cast<std::size_t>(e.v)].insert(id);
    }
  }
}

int Multigraph::degree(VertexId v) const { return degree_in(all_edges(), v); }

int Multigraph::degree_in(EdgeSet s, VertexId v) const {
  return (star(v) & s).size() + 2 * (incident(v) & loops_ & s).size();
}

VertexSet Multigraph::ends(EdgeSet s) const {
  VertexSet out;
  s.for_each([&](EdgeId e) {
    out.insert(edge(e).u);
    out.insert(edge(e).v);
  });
  return out;
}

void Multigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= num_vertices_) throw InputError("unknown vertex " + std::to_string(v));
}

void Multigraph::check_edges(EdgeSet s) const {
  if (!s.is_subset_of(all_edges())) throw InputError("edge set " + to_string(s) + " has unknown ids");
}

void Multigraph::check_vertices(VertexSet s) const {
  if (!s.is_subset_of(all_vertices()))
    throw InputError("vertex set " + to_string(s) + " has unknown ids");
}

Multigraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

Multigraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, std::move(edges));
}

Multigraph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = pairs[static_cast<std::size_t>(i)];
      const auto [c, d] = pairs[static_cast<std::size_t>(j)];
      if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
    }
  return Multigraph(10, std::move(edges));
}

EdgeSet cut(const Multigraph& g, VertexSet shore) {
  g.check_vertices(shore);
  EdgeSet out;
  shore.for_each([&](VertexId v) { out ^= g.star(v); });
  return out;
}

VertexSet odd_vertices(const Multigraph& g, EdgeSet s) {
  g.check_edges(s);
  VertexSet odd;
  (s - g.loops()).for_each([&](EdgeId e) {
    odd.flip(g.edge(e).u);
    odd.flip(g.edge(e).v);
  });
  return odd;
}

bool is_cycle(const Multigraph& g, EdgeSet s) { return odd_vertices(g, s).empty(); }

bool is_circuit(const Multigraph& g, EdgeSet s) {
  g.check_edges(s);
  if (s.empty()) return false;
  bool all_two = true;
  g.ends(s).for_each([&](VertexId v) { all_two = all_two && g.degree_in(s, v) == 2; });
  return all_two && is_connected_set(g, s);
}

bool is_tjoin(const Multigraph& g, EdgeSet s, VertexSet terminals) {
  g.check_vertices(terminals);
  if (terminals.size() % 2 != 0) throw InputError("terminal set must have even size");
  return odd_vertices(g, s) == terminals;
}

VertexSet reachable(const Multigraph& g, VertexId from, EdgeSet s) {
  VertexSet seen = VertexSet::singleton(from);
  std::vector<VertexId> stack{from};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    (g.star(x) & s).for_each([&](EdgeId e) {
      const VertexId y = g.edge(e).other(x);
      if (!seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    });
  }
  return seen;
}

bool is_connected_set(const Multigraph& g, EdgeSet s) {
  g.check_edges(s);
  if (s.empty()) return true;
  const VertexSet ends = g.ends(s);
  return reachable(g, ends.front(), s) == ends;
}

int cycle_rank(const Multigraph& g, EdgeSet s) {
  return s.size() - spanning_forest(g, s).size();
}

EdgeSet find_circuit(const Multigraph& g, EdgeSet s) {
  g.check_edges(s);
  UnionFind uf(g.num_vertices());
  EdgeSet forest;
  EdgeSet found;
  s.for_each([&](EdgeId e) {
    if (!found.empty()) return;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      found = EdgeSet::singleton(e);
    } else if (uf.unite(ed.u, ed.v)) {
      forest.insert(e);
    } else {
      found = forest_path(g, forest, ed.u, ed.v) | EdgeSet::singleton(e);
    }
  });
  return found;
}

std::vector<VertexSet> components(const Multigraph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (seen.contains(v)) continue;
    const VertexSet comp = reachable(g, v, g.all_edges());
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

void for_each_st_path(const Multigraph& g, VertexId s, VertexId t,
                      const std::function<bool(EdgeSet)>& fn, EdgeSet allowed) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) {
    fn(EdgeSet{});
    return;
  }
  bool stopped = false;
  VertexSet on_path = VertexSet::singleton(s);
  EdgeSet path;
  std::function<void(VertexId)> walk = [&](VertexId x) {
    (g.star(x) & allowed).for_each([&](EdgeId e) {
      if (stopped) return;
      const VertexId y = g.edge(e).other(x);
      if (on_path.contains(y)) return;
      path.insert(e);
      if (y == t) {
        stopped = !fn(path);
      } else {
        on_path.insert(y);
        walk(y);
        on_path.erase(y);
      }
      path.erase(e);
    });
  };
  walk(s);
}

void for_each_st_path(const Multigraph& g, VertexId s, VertexId t,
                      const std::function<bool(EdgeSet)>& fn) {
  for_each_st_path(g, s, t, fn, g.all_edges());
}

std::vector<EdgeSet> st_paths(const Multigraph& g, VertexId s, VertexId t) {
  std::vector<EdgeSet> out;
  for_each_st_path(g, s, t, [&](EdgeSet p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<EdgeSet> circuits(const Multigraph& g) {
  std::vector<EdgeSet> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      out.push_back(EdgeSet::singleton(e));
      continue;
    }
    // Circuits whose smallest edge is e.
    const EdgeSet higher = g.all_edges() - EdgeSet::range(e + 1) - g.loops();
    for_each_st_path(
        g, ed.u, ed.v,
        [&](EdgeSet p) {
          out.push_back(p | EdgeSet::singleton(e));
          return true;
        },
        higher);
  }
  std::sort(out.begin(), out.end(), [](EdgeSet a, EdgeSet b) { return lex_less(a, b); });
  return out;
}

std::vector<EdgeSet> cycle_basis(const Multigraph& g) {
  const EdgeSet forest = spanning_forest(g, g.all_edges());
  std::vector<EdgeSet> basis;
  (g.all_edges() - forest).for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      basis.push_back(EdgeSet::singleton(e));
    } else {
      basis.push_back(forest_path(g, forest, ed.u, ed.v) | EdgeSet::singleton(e));
    }
  });
  return basis;
}

std::optional<EdgeSet> find_tjoin(const Multigraph& g, VertexSet terminals) {
  g.check_vertices(terminals);
  const EdgeSet forest = spanning_forest(g, g.all_edges());
  EdgeSet join;
  VertexSet demand = terminals;
  VertexSet done;
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (done.contains(root)) continue;
    // Order the tree by DFS from root, then settle demands leaf-first.
    std::vector<VertexId> order;
    std::vector<EdgeId> up(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<VertexId> stack{root};
    done.insert(root);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      order.push_back(x);
      (g.star(x) & forest).for_each([&](EdgeId e) {
        const VertexId y = g.edge(e).other(x);
        if (!done.contains(y)) {
          done.insert(y);
          up[static_cast<std::size_t>(y)] = e;
          stack.push_back(y);
        }
      });
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId x = *it;
      if (x == root || !demand.contains(x)) continue;
      const EdgeId e = up[static_cast<std::size_t>(x)];
      join.flip(e);
      demand.flip(x);
      demand.flip(g.edge(e).other(x));
    }
    if (demand.contains(root)) return std::nullopt;
  }
  return join;
}

std::size_t for_each_tjoin(const Multigraph& g, VertexSet terminals,
                           const std::function<void(EdgeSet)>& fn) {
  const auto base = find_tjoin(g, terminals);
  if (!base) return 0;
  const auto basis = cycle_basis(g);
  if (basis.size() > 30) throw InputError("cycle space too large to enumerate");
  EdgeSet current = *base;
  fn(current);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    fn(current);
  }
  return static_cast<std::size_t>(total);
}

std::optional<VertexSet> find_shore(const Multigraph& g, EdgeSet constrained, EdgeSet crossing,
                                    VertexSet terminals, int terminal_parity) {
  g.check_edges(constrained);
  if (!crossing.is_subset_of(constrained)) return std::nullopt;
  if (crossing.intersects(g.loops())) return std::nullopt;
  const EdgeSet links = constrained - g.loops();
  VertexSet shore;
  VertexSet seen;
  // Pieces of g[links] that contain an odd number of terminals; flipping one
  // of them toggles the terminal parity of the shore.
  std::vector<VertexSet> odd_pieces;
  for (VertexId top = g.num_vertices() - 1; top >= 0; --top) {
    if (seen.contains(top)) continue;
    // Two-colour the piece of top with top outside the shore, which is the
    // smallest choice for the highest bit of the piece.
    VertexSet piece = VertexSet::singleton(top);
    VertexSet side;
    std::vector<VertexId> stack{top};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      bool consistent = true;
      (g.star(x) & links).for_each([&](EdgeId e) {
        const VertexId y = g.edge(e).other(x);
        const bool y_side = side.contains(x) != crossing.contains(e);
        if (piece.contains(y)) {
          if (side.contains(y) != y_side) consistent = false;
          return;
        }
        piece.insert(y);
        if (y_side) side.insert(y);
        stack.push_back(y);
      });
      if (!consistent) return std::nullopt;
    }
    seen |= piece;
    shore |= side;
    if ((piece & terminals).size() % 2 == 1) odd_pieces.push_back(piece);
  }
  if ((shore & terminals).size() % 2 != terminal_parity % 2) {
    if (odd_pieces.empty()) return std::nullopt;
    // Pieces were found from the highest vertex down, so the last odd piece
    // has the smallest top vertex and flipping it costs the least.
    shore ^= odd_pieces.back();
  }
  return shore;
}

}  // namespace oddjoin
