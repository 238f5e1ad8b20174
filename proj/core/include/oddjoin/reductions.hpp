#pragma once

#include <optional>
#include <vector>

#include "oddjoin/obstructions.hpp"
#include "oddjoin/packing.hpp"
#include "oddjoin/plane.hpp"

namespace oddjoin {

/// Odd circuits of an even-degree graph: solves (G, E(G), {}). Packing
/// members are odd circuits and the cover meets all of them. When G has at
/// most `scan_edges` edges an obstruction scan runs first and a K5~ minor is
/// rejected with PreconditionError. Odd degrees also raise it.
PackingResult reduce_odd_minor_circuits(const Multigraph& g, int scan_edges = 12,
                                        std::uint64_t budget = kDefaultMinorBudget);

/// Disjoint T-joins against T-cuts for |T| in {2, 4}.
struct TJoinPacking {
  /// The graft actually solved, on the identified vertex set.
  SignedGraft graft;
  /// Host vertex -> graft vertex.
  std::vector<VertexId> vertex_map;
  std::vector<EdgeSet> joins;
  EdgeSet tcut;
  /// Host shore U with delta(U) = tcut and |U & T| odd.
  VertexSet shore;

  int max_joins() const { return static_cast<int>(joins.size()); }
  int min_cut() const { return tcut.size(); }
};

/// With T = {s, t, s', t'} (increasing ids) sets Sigma = delta(s') and
/// identifies s' with t'. For |T| = 2 the graft is (h, delta(t), T) with no
/// identification. Throws PreconditionError on a degree parity violation and
/// InputError for other sizes of T.
TJoinPacking reduce_tjoin4(const Multigraph& h, VertexSet terminals);

struct TwoCommodity {
  SignedGraft graft;
  std::vector<VertexId> vertex_map;
  /// Each an s1t1-path or an s2t2-path of the host.
  std::vector<EdgeSet> paths;
  /// Meets every s1t1-path and every s2t2-path.
  EdgeSet disconnecting;

  int max_paths() const { return static_cast<int>(paths.size()); }
  int min_disconnecting() const { return disconnecting.size(); }
};

/// Sigma = delta(s1) ^ delta(t2), then s1, s2 and t1, t2 are identified.
/// Throws InputError unless the four ends are distinct and
/// PreconditionError on a degree parity violation.
TwoCommodity reduce_two_commodity(const Multigraph& h, VertexId s1, VertexId t1, VertexId s2, VertexId t2);

struct PlaneDual {
  /// (G*, Gamma, {s, t}) with s, t the two odd faces.
  SignedGraft dual;
  EdgeSet gamma;
  int s_face = 0;
  int t_face = 0;
  /// Pairwise disjoint signatures of (G, Sigma, T).
  std::vector<EdgeSet> signatures;
  /// An odd cycle or an odd T-join of (G, Sigma, T) of size |signatures|.
  EdgeSet certificate;
  bool certificate_is_cycle = false;
  std::optional<int> shortest_odd_circuit;
  std::optional<int> shortest_odd_tjoin;
  /// Dual cuts, dual signatures and minimal dual odd st-joins rechecked in
  /// primal terms.
  int claims_checked = 0;
  /// |T| >= 4 and no exclusion graft was searched for (or the search ran
  /// out of budget): the min-max equality is reported, not enforced.
  bool exclusion_unchecked = false;

  int min_length() const;
};

/// Throws InputError on a bad embedding, PreconditionError unless there are
/// exactly two odd faces and Sigma = E or every T-join has even length.
/// With |T| >= 4 and an `exclusion` graft, a minor of it is also rejected.
PlaneDual reduce_plane_dual(const PlaneEmbedding& emb, EdgeSet sigma, VertexSet terminals,
                            const SignedGraft* exclusion = nullptr, std::uint64_t budget = kDefaultMinorBudget);

struct CutCover {
  /// G with s and t identified.
  Multigraph identified;
  std::vector<VertexId> vertex_map;
  int k = 0;
  /// Shores in G, each avoiding s and t, and their cuts.
  std::vector<VertexSet> shores;
  std::vector<EdgeSet> cuts;
  /// Colour in 0..3 per identified vertex; present when `identified` is loopless.
  std::optional<std::vector<int>> colouring;
};

/// Throws PreconditionError unless G has exactly two odd-length faces and
/// the identified graph has an odd circuit.
CutCover reduce_cut_cover(const PlaneEmbedding& emb, VertexId s, VertexId t);

struct TopoClasses {
  bool blocking_vertex = false;
  /// Only for |T| = 2.
  std::optional<bool> blocking_pair;
  std::optional<bool> connected_joins;
  /// Only with an embedding.
  std::optional<bool> plane_two_odd_faces;
};

TopoClasses topo_class_predicates(const SignedGraft& sg, const PlaneEmbedding* emb = nullptr);

/// Length of the shortest circuit meeting sigma oddly.
std::optional<int> shortest_odd_circuit(const Multigraph& g, EdgeSet sigma);
/// Identifies vertices along `groups`; each group collapses onto its least
/// member and the rest are renumbered in order. Edge ids are kept.
Multigraph identify_vertices(const Multigraph& g, const std::vector<std::vector<VertexId>>& groups,
                             std::vector<VertexId>* vertex_map = nullptr);

}  // namespace oddjoin
