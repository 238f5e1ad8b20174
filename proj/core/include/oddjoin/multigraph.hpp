#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "oddjoin/id_set.hpp"

namespace oddjoin {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr bool is_loop() const { return u == v; }
  constexpr VertexId other(VertexId x) const { return x == u ? v : u; }
  constexpr bool operator==(const Edge&) const = default;
};

/// Undirected multigraph on vertices 0..n-1 with edges 0..m-1.
///
/// Loops and parallel edges are allowed. Edges are identified by id, never by
/// their endpoint pair. A loop contributes 2 to the degree of its vertex and
/// lies in no cut. Values are immutable once built.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  EdgeSet all_edges() const { return EdgeSet::range(num_edges()); }
  VertexSet all_vertices() const { return VertexSet::range(num_vertices_); }
  /// Non-loop edges at v.
  EdgeSet star(VertexId v) const { return stars_[static_cast<std::size_t>(v)]; }
  EdgeSet loops() const { return loops_; }
  /// Every edge with an end at v, loops included.
  EdgeSet incident(VertexId v) const { return incident_[static_cast<std::size_t>(v)]; }

  int degree(VertexId v) const;
  /// Degree of v in the subgraph induced by the edge set `s`.
  int degree_in(EdgeSet s, VertexId v) const;
  /// Ends of the edges in `s`.
  VertexSet ends(EdgeSet s) const;

  void check_vertex(VertexId v) const;
  void check_edges(EdgeSet s) const;
  void check_vertices(VertexSet s) const;

  bool operator==(const Multigraph& other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeSet> stars_;
  std::vector<EdgeSet> incident_;
  EdgeSet loops_;
};

/// Builders for a few standard graphs used throughout the tests and fixtures.
Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);
/// Petersen graph in its Kneser(5,2) presentation.
Multigraph petersen_graph();

/// delta(U): edges with exactly one end in U.
EdgeSet cut(const Multigraph& g, VertexSet shore);
/// Vertices of odd degree in the subgraph induced by `s`.
VertexSet odd_vertices(const Multigraph& g, EdgeSet s);
bool is_cycle(const Multigraph& g, EdgeSet s);
bool is_circuit(const Multigraph& g, EdgeSet s);
/// True iff the odd-degree vertices of g[s] are exactly `terminals`.
/// Throws InputError when |terminals| is odd.
bool is_tjoin(const Multigraph& g, EdgeSet s, VertexSet terminals);
/// True iff g[s] is connected (the empty set counts as connected).
bool is_connected_set(const Multigraph& g, EdgeSet s);
/// Dimension of the cycle space of g[s].
int cycle_rank(const Multigraph& g, EdgeSet s);
/// Some circuit inside `s`, or the empty set when g[s] is a forest.
EdgeSet find_circuit(const Multigraph& g, EdgeSet s);
/// Vertices reachable from `from` using only edges of `s`.
VertexSet reachable(const Multigraph& g, VertexId from, EdgeSet s);

/// Connected components of g as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Multigraph& g);

/// Calls `fn` on every simple st-path in lexicographic order of edge-id
/// sequences. Returning false from `fn` stops the walk.
void for_each_st_path(const Multigraph& g, VertexId s, VertexId t,
                      const std::function<bool(EdgeSet)>& fn, EdgeSet allowed);
void for_each_st_path(const Multigraph& g, VertexId s, VertexId t,
                      const std::function<bool(EdgeSet)>& fn);
std::vector<EdgeSet> st_paths(const Multigraph& g, VertexId s, VertexId t);

/// Every circuit of g (loops and parallel pairs included), sorted by lex_less.
std::vector<EdgeSet> circuits(const Multigraph& g);

/// Least shore U (as a bitmask) with cut(U) & constrained == crossing and
/// |U & terminals| of the given parity, or nullopt when none exists.
///
/// Only the edges in `constrained` impose equations; each connected piece of
/// g[constrained] may be flipped freely, which is what makes the least
/// solution easy to pick.
std::optional<VertexSet> find_shore(const Multigraph& g, EdgeSet constrained, EdgeSet crossing,
                                    VertexSet terminals, int terminal_parity);

/// A basis of the cycle space: one fundamental circuit per non-forest edge.
std::vector<EdgeSet> cycle_basis(const Multigraph& g);
/// Some T-join of g (a forest), or nullopt when T meets a component oddly.
std::optional<EdgeSet> find_tjoin(const Multigraph& g, VertexSet terminals);
/// Calls `fn` on every T-join of g (the coset of the cycle space), in Gray
/// code order. Returns the number visited.
std::size_t for_each_tjoin(const Multigraph& g, VertexSet terminals,
                           const std::function<void(EdgeSet)>& fn);

}  // namespace oddjoin
