#include "oddjoin/signed_graft.hpp"

#include <algorithm>
#include <string>

namespace oddjoin {

SignedGraft::SignedGraft(Multigraph g, EdgeSet sigma, VertexSet terminals)
    : g_(std::move(g)), sigma_(sigma), terminals_(terminals) {
  g_.check_edges(sigma_);
  g_.check_vertices(terminals_);
  if (terminals_.size() % 2 != 0) throw InputError("terminal set must have even size");
}

std::string to_string(CoverClass c) {
  switch (c) {
    case CoverClass::kSignature: return "signature";
    case CoverClass::kTCut: return "t-cut";
    case CoverClass::kBoth: return "both";
    case CoverClass::kNeither: break;
  }
  return "neither";
}

bool is_odd_tjoin(const SignedGraft& sg, EdgeSet s) {
  return sg.is_odd(s) && is_tjoin(sg.graph(), s, sg.terminals());
}

bool has_odd_tjoin(const SignedGraft& sg) {
  const auto base = find_tjoin(sg.graph(), sg.terminals());
  if (!base) return false;
  if (sg.is_odd(*base)) return true;
  const auto basis = cycle_basis(sg.graph());
  return std::any_of(basis.begin(), basis.end(), [&](EdgeSet c) { return sg.is_odd(c); });
}

std::vector<EdgeSet> odd_tjoins(const SignedGraft& sg) {
  std::vector<EdgeSet> out;
  for_each_tjoin(sg.graph(), sg.terminals(), [&](EdgeSet j) {
    if (sg.is_odd(j)) out.push_back(j);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Minimality test for a set already known to be an odd T-join.
bool odd_join_is_minimal(const SignedGraft& sg, EdgeSet join) {
  const int rank = cycle_rank(sg.graph(), join);
  if (rank == 0) return true;
  if (rank > 1) return false;
  return sg.is_odd(find_circuit(sg.graph(), join));
}

}  // namespace

bool is_minimal_odd_tjoin(const SignedGraft& sg, EdgeSet s) {
  return is_odd_tjoin(sg, s) && odd_join_is_minimal(sg, s);
}

std::vector<EdgeSet> minimal_odd_tjoins(const SignedGraft& sg) {
  std::vector<EdgeSet> out;
  for_each_tjoin(sg.graph(), sg.terminals(), [&](EdgeSet j) {
    if (sg.is_odd(j) && odd_join_is_minimal(sg, j)) out.push_back(j);
  });
  std::sort(out.begin(), out.end(), [](EdgeSet a, EdgeSet b) { return lex_less(a, b); });
  return out;
}

JoinDecomposition decompose(const SignedGraft& sg, EdgeSet join) {
  if (sg.terminals().size() > 2) throw InputError("decompose needs at most two terminals");
  if (!is_minimal_odd_tjoin(sg, join)) throw InputError(to_string(join) + " is not a minimal odd T-join");
  const Multigraph& g = sg.graph();
  JoinDecomposition d;
  d.circuit = find_circuit(g, join);
  d.path = join - d.circuit;
  if (sg.terminals().empty()) {
    if (!d.path.empty()) throw CertificateError("T-join with empty T left a path part");
    return d;
  }
  const bool shape_ok = is_connected_set(g, d.path) && cycle_rank(g, d.path) == 0 &&
                        is_tjoin(g, d.path, sg.terminals()) &&
                        (d.circuit.empty() || (!sg.is_odd(d.path) && sg.is_odd(d.circuit) &&
                                               (g.ends(d.path) & g.ends(d.circuit)).size() <= 1));
  if (!shape_ok) throw CertificateError("minimal odd T-join " + to_string(join) + " has unexpected shape");
  return d;
}

SignedGraft resign(const SignedGraft& sg, VertexSet shore) {
  sg.graph().check_vertices(shore);
  if ((shore & sg.terminals()).size() % 2 != 0)
    throw InvalidResignError("resigning shore " + to_string(shore) + " holds an odd number of terminals");
  return SignedGraft(sg.graph(), sg.sigma() ^ cut(sg.graph(), shore), sg.terminals());
}

EdgeSet canonical_signature(const SignedGraft& sg) {
  const Multigraph& g = sg.graph();
  std::vector<EdgeSet> generators;
  const VertexSet t = sg.terminals();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!t.contains(v)) generators.push_back(g.star(v));
  }
  if (!t.empty()) {
    const VertexId first = t.front();
    (t - VertexSet::singleton(first)).for_each([&](VertexId v) {
      generators.push_back(g.star(first) ^ g.star(v));
    });
  }
  // Echelon form keyed on the highest bit; reducing Sigma against it from the
  // top down yields the least element of the coset.
  std::vector<EdgeSet> basis;
  for (EdgeSet v : generators) {
    for (EdgeSet b : basis) {
      if (!v.empty() && v.contains(b.back())) v ^= b;
    }
    if (v.empty()) continue;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), [](EdgeSet a, EdgeSet b) { return a.back() > b.back(); });
  }
  EdgeSet reduced = sg.sigma();
  for (EdgeSet b : basis) {
    if (reduced.contains(b.back())) reduced ^= b;
  }
  return reduced;
}

namespace {

// Removes edge e and returns the remaining edges, renumbered in order.
std::vector<Edge> edges_without(const Multigraph& g, EdgeId e) {
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + e);
  return edges;
}

EdgeSet drop_id(EdgeSet s, EdgeId e) {
  const std::uint64_t low = s.bits() & ((std::uint64_t{1} << e) - 1);
  const std::uint64_t high = e >= 63 ? 0 : (s.bits() >> (e + 1)) << e;
  return EdgeSet(low | high);
}

VertexSet drop_vertex(VertexSet s, VertexId x) {
  const std::uint64_t low = s.bits() & ((std::uint64_t{1} << x) - 1);
  const std::uint64_t high = x >= 63 ? 0 : (s.bits() >> (x + 1)) << x;
  return VertexSet(low | high);
}

}  // namespace

SignedGraft delete_edge(const SignedGraft& sg, EdgeId e) {
  if (e < 0 || e >= sg.num_edges()) throw InputError("unknown edge " + std::to_string(e));
  return SignedGraft(Multigraph(sg.num_vertices(), edges_without(sg.graph(), e)),
                     drop_id(sg.sigma(), e), sg.terminals());
}

SignedGraft contract_edge(const SignedGraft& sg, EdgeId e, OddContraction mode) {
  if (e < 0 || e >= sg.num_edges()) throw InputError("unknown edge " + std::to_string(e));
  const Edge ed = sg.graph().edge(e);
  if (ed.is_loop()) throw InputError("loops cannot be contracted");
  SignedGraft base = sg;
  if (sg.sigma().contains(e)) {
    if (mode == OddContraction::kReject)
      throw MustResignFirstError("edge " + std::to_string(e) + " is odd; resign before contracting");
    const auto shore = find_shore(sg.graph(), EdgeSet::singleton(e), EdgeSet::singleton(e),
                                  sg.terminals(), 0);
    if (!shore) throw MustResignFirstError("no legal resigning makes edge " + std::to_string(e) + " even");
    base = resign(sg, *shore);
  }
  const VertexId keep = std::min(ed.u, ed.v);
  const VertexId gone = std::max(ed.u, ed.v);
  auto relabel = [&](VertexId x) {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> edges = edges_without(base.graph(), e);
  for (Edge& x : edges) x = {relabel(x.u), relabel(x.v)};
  VertexSet t = base.terminals();
  const bool one = t.contains(ed.u) != t.contains(ed.v);
  t.erase(ed.u);
  t.erase(ed.v);
  if (one) t.insert(keep);
  return SignedGraft(Multigraph(sg.num_vertices() - 1, std::move(edges)), drop_id(base.sigma(), e),
                     drop_vertex(t, gone));
}

Minor take_minor(const SignedGraft& sg, EdgeSet delete_set, EdgeSet contract_set) {
  const Multigraph& g = sg.graph();
  g.check_edges(delete_set);
  g.check_edges(contract_set);
  if (delete_set.intersects(contract_set)) throw InputError("delete and contract sets overlap");
  if (contract_set.intersects(g.loops())) throw InputError("loops cannot be contracted");

  // Deleted edges take no part in the resigning equations.
  const auto shore = find_shore(g, contract_set, sg.sigma() & contract_set, sg.terminals(), 0);
  if (!shore) throw NotAValidMinorError("contract set " + to_string(contract_set) +
                                        " holds an odd circuit or an odd T-join");
  const EdgeSet sigma = sg.sigma() ^ cut(g, *shore);

  // Pieces of (V, contract_set) become the minor's vertices, ordered by their
  // smallest member.
  const int n = g.num_vertices();
  Minor out;
  out.resign_shore = *shore;
  out.vertex_map.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  VertexSet terminals;
  for (VertexId v = 0; v < n; ++v) {
    if (out.vertex_map[static_cast<std::size_t>(v)] != -1) continue;
    const VertexSet piece = reachable(g, v, contract_set);
    piece.for_each([&](VertexId x) { out.vertex_map[static_cast<std::size_t>(x)] = next; });
    if ((piece & sg.terminals()).size() % 2 == 1) terminals.insert(next);
    ++next;
  }
  std::vector<Edge> edges;
  EdgeSet new_sigma;
  const EdgeSet kept = g.all_edges() - delete_set - contract_set;
  kept.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    if (sigma.contains(e)) new_sigma.insert(static_cast<int>(edges.size()));
    edges.push_back({out.vertex_map[static_cast<std::size_t>(ed.u)],
                     out.vertex_map[static_cast<std::size_t>(ed.v)]});
    out.kept_edges.push_back(e);
  });
  out.graft = SignedGraft(Multigraph(next, std::move(edges)), new_sigma, terminals);
  return out;
}

std::optional<EulerianBranch> eulerian_branch(const SignedGraft& sg) {
  const Multigraph& g = sg.graph();
  const VertexSet t = sg.terminals();
  bool nonterminals_even = true;
  bool terminals_odd = true;
  bool terminals_even = true;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const bool odd = g.degree(v) % 2 == 1;
    if (!t.contains(v)) {
      nonterminals_even = nonterminals_even && !odd;
    } else {
      terminals_odd = terminals_odd && odd;
      terminals_even = terminals_even && !odd;
    }
  }
  if (!nonterminals_even) return std::nullopt;
  const bool sigma_odd = sg.sigma().size() % 2 == 1;
  if (terminals_odd && sigma_odd) return EulerianBranch::kOddTerminals;
  if (terminals_even && !sigma_odd) return EulerianBranch::kEvenTerminals;
  return std::nullopt;
}

bool is_eulerian(const SignedGraft& sg) { return eulerian_branch(sg).has_value(); }

std::optional<VertexSet> signature_shore(const SignedGraft& sg, EdgeSet b) {
  sg.graph().check_edges(b);
  return find_shore(sg.graph(), sg.graph().all_edges(), b ^ sg.sigma(), sg.terminals(), 0);
}

std::optional<VertexSet> tcut_shore(const SignedGraft& sg, EdgeSet b) {
  sg.graph().check_edges(b);
  return find_shore(sg.graph(), sg.graph().all_edges(), b, sg.terminals(), 1);
}

bool is_signature(const SignedGraft& sg, EdgeSet b) { return signature_shore(sg, b).has_value(); }
bool is_tcut(const SignedGraft& sg, EdgeSet b) { return tcut_shore(sg, b).has_value(); }

CoverClass classify_cover(const SignedGraft& sg, EdgeSet b) {
  const bool sig = is_signature(sg, b);
  const bool tc = is_tcut(sg, b);
  if (sig && tc) return CoverClass::kBoth;
  if (sig) return CoverClass::kSignature;
  if (tc) return CoverClass::kTCut;
  return CoverClass::kNeither;
}

bool is_cover(const SignedGraft& sg, EdgeSet b) {
  if (!has_odd_tjoin(sg)) return true;
  return classify_cover(sg, b) != CoverClass::kNeither;
}

bool is_bipartite_set(const SignedGraft& sg, EdgeSet f) {
  return find_shore(sg.graph(), f, f & sg.sigma(), VertexSet{}, 0).has_value();
}

bool is_bipartite(const SignedGraft& sg) { return is_bipartite_set(sg, sg.graph().all_edges()); }

}  // namespace oddjoin
