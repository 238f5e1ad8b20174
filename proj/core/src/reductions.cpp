#include "oddjoin/reductions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace oddjoin {

namespace {

void require_even_except(const Multigraph& g, VertexSet special, const char* what) {
  std::optional<int> parity;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree(v) % 2;
    if (!special.contains(v)) {
      if (d != 0) throw PreconditionError("vertex " + std::to_string(v) + " has odd degree");
      continue;
    }
    if (parity && *parity != d) throw PreconditionError(std::string(what) + " degrees differ in parity");
    parity = d;
  }
}

VertexSet preimage(const std::vector<VertexId>& vertex_map, VertexSet image) {
  VertexSet out;
  for (VertexId v = 0; v < static_cast<VertexId>(vertex_map.size()); ++v)
    if (image.contains(vertex_map[static_cast<std::size_t>(v)])) out.insert(v);
  return out;
}

VertexSet image(const std::vector<VertexId>& vertex_map, VertexSet shore) {
  VertexSet out;
  shore.for_each([&](VertexId v) { out.insert(vertex_map[static_cast<std::size_t>(v)]); });
  return out;
}

bool is_path_between(const Multigraph& g, EdgeSet p, VertexId a, VertexId b) {
  return !p.empty() && is_tjoin(g, p, VertexSet{a, b}) && is_connected_set(g, p) && cycle_rank(g, p) == 0;
}

std::optional<int> shortest_odd_tjoin(const SignedGraft& sg) {
  std::optional<int> best;
  for_each_tjoin(sg.graph(), sg.terminals(), [&](EdgeSet j) {
    if (sg.is_odd(j) && (!best || j.size() < *best)) best = j.size();
  });
  return best;
}

bool all_tjoins_even(const Multigraph& g, VertexSet terminals) {
  const auto j = find_tjoin(g, terminals);
  if (!j || j->size() % 2 != 0) return false;
  const auto basis = cycle_basis(g);
  return std::all_of(basis.begin(), basis.end(), [](EdgeSet c) { return c.size() % 2 == 0; });
}

}  // namespace

Multigraph identify_vertices(const Multigraph& g, const std::vector<std::vector<VertexId>>& groups,
                             std::vector<VertexId>* vertex_map) {
  const int n = g.num_vertices();
  std::vector<VertexId> rep(static_cast<std::size_t>(n));
  std::iota(rep.begin(), rep.end(), 0);
  for (const auto& group : groups) {
    if (group.empty()) continue;
    for (VertexId v : group) g.check_vertex(v);
    const VertexId low = *std::min_element(group.begin(), group.end());
    for (VertexId v : group) rep[static_cast<std::size_t>(v)] = low;
  }
  std::vector<VertexId> map(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v)
    if (rep[static_cast<std::size_t>(v)] == v) map[static_cast<std::size_t>(v)] = next++;
  for (VertexId v = 0; v < n; ++v)
    map[static_cast<std::size_t>(v)] = map[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])];
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back({map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]});
  if (vertex_map) *vertex_map = map;
  return Multigraph(next, std::move(edges));
}

std::optional<int> shortest_odd_circuit(const Multigraph& g, EdgeSet sigma) {
  std::optional<int> best;
  for (EdgeSet c : circuits(g))
    if ((c & sigma).size() % 2 == 1 && (!best || c.size() < *best)) best = c.size();
  return best;
}

PackingResult reduce_odd_minor_circuits(const Multigraph& g, int scan_edges, std::uint64_t budget) {
  require_even_except(g, {}, "");
  const SignedGraft sg(g, g.all_edges(), {});
  if (g.num_edges() <= scan_edges) {
    const ObstructionScan scan = obstruction_scan(sg, budget, 0);
    if (scan.k5tilde == MinorStatus::kFound) throw PreconditionError("graph contains K5 as an odd minor");
  }
  PackingResult r = packs(sg);
  if (r.status == PackStatus::kNoJoin) {
    r.tau = 0;
    return r;
  }
  for (EdgeSet c : r.packing)
    if (!is_circuit(g, c) || c.size() % 2 == 0)
      throw CertificateError("packed set " + to_string(c) + " is not an odd circuit");
  if (!is_bipartite_set(sg, g.all_edges() - r.cover.edges))
    throw CertificateError("transversal " + to_string(r.cover.edges) + " misses an odd circuit");
  return r;
}

TJoinPacking reduce_tjoin4(const Multigraph& h, VertexSet terminals) {
  h.check_vertices(terminals);
  const std::vector<VertexId> ts = terminals.to_vector();
  if (ts.size() != 2 && ts.size() != 4) throw InputError("T must hold 2 or 4 vertices");
  require_even_except(h, terminals, "terminal");

  TJoinPacking out;
  VertexId flip = 0;
  if (ts.size() == 4) {
    flip = ts[2];
    const Multigraph g = identify_vertices(h, {{ts[2], ts[3]}}, &out.vertex_map);
    out.graft = SignedGraft(g, h.star(ts[2]),
                            VertexSet{out.vertex_map[static_cast<std::size_t>(ts[0])],
                                      out.vertex_map[static_cast<std::size_t>(ts[1])]});
  } else {
    flip = ts[1];
    out.vertex_map.resize(static_cast<std::size_t>(h.num_vertices()));
    std::iota(out.vertex_map.begin(), out.vertex_map.end(), 0);
    out.graft = SignedGraft(h, h.star(ts[1]), terminals);
  }

  const PackingResult r = packs(out.graft);
  if (r.status == PackStatus::kNoJoin) throw PreconditionError("T meets some component of h oddly");
  out.joins = r.packing;
  out.tcut = r.cover.edges;
  if (const auto u = tcut_shore(out.graft, out.tcut)) {
    out.shore = preimage(out.vertex_map, *u);
  } else if (const auto w = signature_shore(out.graft, out.tcut)) {
    out.shore = preimage(out.vertex_map, *w) ^ VertexSet::singleton(flip);
  } else {
    throw CertificateError("cover " + to_string(out.tcut) + " is neither a signature nor a T-cut");
  }

  for (EdgeSet j : out.joins)
    if (!is_tjoin(h, j, terminals)) throw CertificateError(to_string(j) + " is not a T-join of the host");
  if (cut(h, out.shore) != out.tcut || (out.shore & terminals).size() % 2 == 0)
    throw CertificateError(to_string(out.tcut) + " is not a T-cut of the host");
  return out;
}

TwoCommodity reduce_two_commodity(const Multigraph& h, VertexId s1, VertexId t1, VertexId s2, VertexId t2) {
  for (VertexId v : {s1, t1, s2, t2}) h.check_vertex(v);
  const VertexSet ends{s1, t1, s2, t2};
  if (ends.size() != 4) throw InputError("the four commodity ends must be distinct");
  require_even_except(h, ends, "commodity end");

  TwoCommodity out;
  const Multigraph g = identify_vertices(h, {{s1, s2}, {t1, t2}}, &out.vertex_map);
  const VertexId s = out.vertex_map[static_cast<std::size_t>(s1)];
  const VertexId t = out.vertex_map[static_cast<std::size_t>(t1)];
  out.graft = SignedGraft(g, h.star(s1) ^ h.star(t2), VertexSet{s, t});

  const PackingResult r = packs(out.graft);
  if (r.status == PackStatus::kNoJoin) return out;
  out.paths = r.packing;
  out.disconnecting = r.cover.edges;

  const EdgeSet rest = h.all_edges() - out.disconnecting;
  for (EdgeSet p : out.paths)
    if (!is_path_between(h, p, s1, t1) && !is_path_between(h, p, s2, t2))
      throw CertificateError(to_string(p) + " is neither an s1t1-path nor an s2t2-path");
  if (reachable(h, s1, rest).contains(t1) || reachable(h, s2, rest).contains(t2))
    throw CertificateError(to_string(out.disconnecting) + " leaves a commodity connected");
  return out;
}

int PlaneDual::min_length() const {
  int best = std::numeric_limits<int>::max();
  if (shortest_odd_circuit) best = std::min(best, *shortest_odd_circuit);
  if (shortest_odd_tjoin) best = std::min(best, *shortest_odd_tjoin);
  return best;
}

PlaneDual reduce_plane_dual(const PlaneEmbedding& emb, EdgeSet sigma, VertexSet terminals,
                            const SignedGraft* exclusion, std::uint64_t budget) {
  validate_embedding(emb);
  const Multigraph& g = emb.graph;
  const SignedGraft primal(g, sigma, terminals);
  const std::vector<int> odd = odd_faces(emb, sigma);
  if (odd.size() != 2)
    throw PreconditionError("expected exactly two odd faces, found " + std::to_string(odd.size()));
  if (sigma != g.all_edges() && !all_tjoins_even(g, terminals))
    throw PreconditionError("Sigma is not E(G) and some T-join has odd length");

  PlaneDual out;
  out.s_face = odd[0];
  out.t_face = odd[1];
  out.exclusion_unchecked = terminals.size() >= 4;
  if (out.exclusion_unchecked && exclusion) {
    const GraftMinorResult found = find_graft_minor(primal, *exclusion, budget);
    if (found.status == MinorStatus::kFound) throw PreconditionError("(G, Sigma, T) contains the excluded graft");
    out.exclusion_unchecked = found.status == MinorStatus::kInconclusive;
  }
  const std::vector<EdgeSet> joins = odd_tjoins(primal);
  if (joins.empty()) throw PreconditionError("(G, Sigma, T) has no odd T-join");
  out.gamma = *std::min_element(joins.begin(), joins.end(), [](EdgeSet a, EdgeSet b) { return lex_less(a, b); });
  const Multigraph gd = plane_dual(emb);
  out.dual = SignedGraft(gd, out.gamma, VertexSet{out.s_face, out.t_face});

  const auto odd_cycle = [&](EdgeSet b) { return is_cycle(g, b) && primal.is_odd(b); };
  // Claims (i) and (ii) on every dual cut, claim (iii) on every minimal odd
  // st-join of the dual.
  if (gd.num_vertices() <= 20) {
    const std::uint64_t count = std::uint64_t{1} << (gd.num_vertices() - 1);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const VertexSet u(bits);
      const EdgeSet c = cut(gd, u);
      if ((u & out.dual.terminals()).size() % 2 == 1) {
        if (!odd_cycle(c)) throw CertificateError("dual st-cut " + to_string(c) + " is not an odd cycle");
      } else if (!is_odd_tjoin(primal, c ^ out.gamma)) {
        throw CertificateError("dual signature " + to_string(c ^ out.gamma) + " is not an odd T-join");
      }
      ++out.claims_checked;
    }
    for (EdgeSet l : minimal_odd_tjoins(out.dual)) {
      if (!is_signature(primal, l)) throw CertificateError("dual odd st-join " + to_string(l) + " is not a signature");
      ++out.claims_checked;
    }
  }

  const PackingResult r = packs(out.dual);
  if (r.status == PackStatus::kNoJoin) throw CertificateError("dual graft has no odd st-join");
  out.signatures = r.packing;
  out.certificate = r.cover.edges;
  out.certificate_is_cycle = r.cover.kind == CoverClass::kTCut || r.cover.kind == CoverClass::kBoth;
  out.shortest_odd_circuit = shortest_odd_circuit(g, sigma);
  out.shortest_odd_tjoin = shortest_odd_tjoin(primal);

  for (EdgeSet l : out.signatures)
    if (!is_signature(primal, l)) throw CertificateError(to_string(l) + " is not a signature of (G, Sigma, T)");
  if (out.certificate_is_cycle ? !odd_cycle(out.certificate) : !is_odd_tjoin(primal, out.certificate))
    throw CertificateError(to_string(out.certificate) + " is neither an odd cycle nor an odd T-join");
  if (!out.exclusion_unchecked && (!r.packs || out.min_length() != *r.tau))
    throw CertificateError("disjoint signatures " + std::to_string(r.nu) + " differ from shortest length " +
                           std::to_string(out.min_length()));
  return out;
}

CutCover reduce_cut_cover(const PlaneEmbedding& emb, VertexId s, VertexId t) {
  const Multigraph& g = emb.graph;
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw InputError("s and t must be distinct");
  const PlaneDual pd = reduce_plane_dual(emb, g.all_edges(), VertexSet{s, t});

  CutCover out;
  out.identified = identify_vertices(g, {{s, t}}, &out.vertex_map);
  const auto k = shortest_odd_circuit(out.identified, out.identified.all_edges());
  if (!k) throw PreconditionError("the identified graph has no odd circuit");
  out.k = *k;
  const SignedGraft primal(g, g.all_edges(), VertexSet{s, t});
  if (static_cast<int>(pd.signatures.size()) < out.k)
    throw CertificateError("only " + std::to_string(pd.signatures.size()) + " disjoint signatures for k = " +
                           std::to_string(out.k));
  const VertexSet st{s, t};
  for (int i = 0; i < out.k; ++i) {
    const EdgeSet sig = pd.signatures[static_cast<std::size_t>(i)];
    VertexSet u = *signature_shore(primal, sig);
    if (u.contains(s)) u = g.all_vertices() - u;
    if (u.intersects(st)) throw CertificateError("signature shore holds exactly one of s, t");
    out.shores.push_back(u);
    out.cuts.push_back(cut(g, u));
  }

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto in = std::count_if(out.cuts.begin(), out.cuts.end(), [&](EdgeSet c) { return c.contains(e); });
    if (in < out.k - 1) throw CertificateError("edge " + std::to_string(e) + " lies in too few cuts");
  }
  for (std::size_t i = 0; i < out.cuts.size(); ++i)
    if (cut(out.identified, image(out.vertex_map, out.shores[i])) != out.cuts[i])
      throw CertificateError("cut changes under identification");

  if (out.identified.loops().empty() && out.k >= 2) {
    std::vector<int> colour(static_cast<std::size_t>(out.identified.num_vertices()), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      colour[static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(v)])] =
          2 * static_cast<int>(out.shores[0].contains(v)) + static_cast<int>(out.shores[1].contains(v));
    for (const Edge& e : out.identified.edges())
      if (colour[static_cast<std::size_t>(e.u)] == colour[static_cast<std::size_t>(e.v)])
        throw CertificateError("colouring is not proper");
    out.colouring = std::move(colour);
  }
  return out;
}

TopoClasses topo_class_predicates(const SignedGraft& sg, const PlaneEmbedding* emb) {
  TopoClasses out;
  const Multigraph& g = sg.graph();
  const EdgeSet all = g.all_edges();
  for (VertexId v = 0; v < g.num_vertices() && !out.blocking_vertex; ++v)
    out.blocking_vertex = is_bipartite_set(sg, all - g.incident(v));
  if (g.num_vertices() == 0) out.blocking_vertex = is_bipartite(sg);
  if (sg.terminals().size() == 2) {
    const VertexId s = sg.terminals().front();
    const VertexId t = sg.terminals().back();
    out.blocking_pair = is_bipartite_set(sg, all - g.incident(s) - g.incident(t));
    const auto joins = minimal_odd_tjoins(sg);
    out.connected_joins =
        std::all_of(joins.begin(), joins.end(), [&](EdgeSet j) { return is_connected_set(g, j); });
  }
  if (emb) {
    if (!(emb->graph == g)) throw InputError("embedding is for a different graph");
    validate_embedding(*emb);
    out.plane_two_odd_faces = odd_faces(*emb, sg.sigma()).size() <= 2;
  }
  return out;
}

}  // namespace oddjoin
