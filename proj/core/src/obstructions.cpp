#include "oddjoin/obstructions.hpp"

#include <algorithm>

#include "subsets.hpp"

namespace oddjoin {

SignedGraft build_k5tilde() {
  Multigraph k5 = complete_graph(5);
  const EdgeSet all = k5.all_edges();
  return SignedGraft(std::move(k5), all, VertexSet{});
}

SignedGraft build_f7() {
  Multigraph g(4, {{0, 1}, {0, 2}, {0, 2}, {1, 3}, {1, 3}, {2, 3}, {2, 3}});
  return SignedGraft(std::move(g), EdgeSet{1, 3, 5}, VertexSet{0, 1});
}

std::vector<int> f7_fano_witness() { return {0, 1, 2, 3, 4, 5, 6}; }

EdgeId f7_terminal_edge() { return 0; }

namespace {

struct PairTable {
  int n = 0;
  // Edge ids joining u and v (u <= v), in increasing order.
  std::vector<std::vector<EdgeId>> slots;

  explicit PairTable(const Multigraph& g) : n(g.num_vertices()), slots(static_cast<std::size_t>(n * n)) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      at(ed.u, ed.v).push_back(e);
    }
  }
  std::vector<EdgeId>& at(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return slots[static_cast<std::size_t>(u * n + v)];
  }
  const std::vector<EdgeId>& at(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return slots[static_cast<std::size_t>(u * n + v)];
  }
};

class GraftMatcher {
 public:
  GraftMatcher(const SignedGraft& a, const SignedGraft& b)
      : a_(a), b_(b), pa_(a.graph()), pb_(b.graph()), n_(a.num_vertices()) {
    for (VertexId v = 0; v < n_; ++v) {
      sig_a_.push_back(signature(a, pa_, v));
      sig_b_.push_back(signature(b, pb_, v));
    }
    for (VertexId v = 0; v < n_; ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId x, VertexId y) {
      return a.graph().degree(x) > a.graph().degree(y);
    });
  }

  std::optional<GraftIsomorphism> run() {
    auto sa = sig_a_;
    auto sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    image_.assign(static_cast<std::size_t>(n_), -1);
    if (extend(0)) return result_;
    return std::nullopt;
  }

 private:
  // Terminal flag, loop count, then the sorted multiplicities to neighbours.
  static std::vector<int> signature(const SignedGraft& sg, const PairTable& table, VertexId v) {
    std::vector<int> mult;
    for (VertexId w = 0; w < sg.num_vertices(); ++w)
      if (w != v && !table.at(v, w).empty()) mult.push_back(static_cast<int>(table.at(v, w).size()));
    std::sort(mult.begin(), mult.end());
    std::vector<int> out{sg.terminals().contains(v) ? 1 : 0, static_cast<int>(table.at(v, v).size())};
    out.insert(out.end(), mult.begin(), mult.end());
    return out;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return resolve_signs();
    const VertexId x = order_[depth];
    for (VertexId y = 0; y < n_; ++y) {
      if (used_.contains(y) || sig_a_[static_cast<std::size_t>(x)] != sig_b_[static_cast<std::size_t>(y)]) continue;
      bool ok = true;
      for (std::size_t d = 0; ok && d < depth; ++d) {
        const VertexId xp = order_[d];
        ok = pa_.at(x, xp).size() == pb_.at(y, image_[static_cast<std::size_t>(xp)]).size();
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(x)] = y;
      used_.insert(y);
      if (extend(depth + 1)) return true;
      used_.erase(y);
      image_[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  }

  // With the vertices matched, each parallel class fixes whether it crosses
  // the resigning shore, unless both choices give the right odd count.
  bool resolve_signs() {
    EdgeSet constrained, crossing;
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = u; v < n_; ++v) {
        const auto& ea = pa_.at(u, v);
        if (ea.empty()) continue;
        const auto& eb = pb_.at(image_[static_cast<std::size_t>(u)], image_[static_cast<std::size_t>(v)]);
        const int c = static_cast<int>(ea.size());
        const int odd_a = count_in(ea, a_.sigma());
        const int odd_b = count_in(eb, b_.sigma());
        const bool stay = odd_a == odd_b;
        const bool flip = u != v && c - odd_a == odd_b;
        if (!stay && !flip) return false;
        if (stay && flip) continue;
        for (EdgeId e : ea) {
          constrained.insert(e);
          if (flip) crossing.insert(e);
        }
      }
    }
    const auto shore = find_shore(a_.graph(), constrained, crossing, a_.terminals(), 0);
    if (!shore) return false;
    const EdgeSet sigma = a_.sigma() ^ cut(a_.graph(), *shore);
    GraftIsomorphism iso;
    iso.vertex_map = image_;
    iso.edge_map.assign(static_cast<std::size_t>(a_.num_edges()), -1);
    iso.resign_shore = *shore;
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = u; v < n_; ++v) {
        const auto ea = odd_first(pa_.at(u, v), sigma);
        const auto eb = odd_first(pb_.at(image_[static_cast<std::size_t>(u)], image_[static_cast<std::size_t>(v)]),
                                  b_.sigma());
        for (std::size_t i = 0; i < ea.size(); ++i) iso.edge_map[static_cast<std::size_t>(ea[i])] = eb[i];
      }
    }
    result_ = std::move(iso);
    return true;
  }

  static int count_in(const std::vector<EdgeId>& ids, EdgeSet s) {
    return static_cast<int>(std::count_if(ids.begin(), ids.end(), [&](EdgeId e) { return s.contains(e); }));
  }

  static std::vector<EdgeId> odd_first(std::vector<EdgeId> ids, EdgeSet sigma) {
    std::stable_partition(ids.begin(), ids.end(), [&](EdgeId e) { return sigma.contains(e); });
    return ids;
  }

  const SignedGraft& a_;
  const SignedGraft& b_;
  PairTable pa_, pb_;
  int n_;
  std::vector<std::vector<int>> sig_a_, sig_b_;
  std::vector<VertexId> order_;
  std::vector<VertexId> image_;
  VertexSet used_;
  GraftIsomorphism result_;
};

}  // namespace

std::optional<GraftIsomorphism> graft_isomorphism(const SignedGraft& a, const SignedGraft& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.terminals().size() != b.terminals().size())
    return std::nullopt;
  return GraftMatcher(a, b).run();
}

bool check_graft_isomorphism(const SignedGraft& a, const SignedGraft& b, const GraftIsomorphism& iso) {
  const int n = a.num_vertices();
  const int m = a.num_edges();
  if (b.num_vertices() != n || b.num_edges() != m) return false;
  if (static_cast<int>(iso.vertex_map.size()) != n || static_cast<int>(iso.edge_map.size()) != m) return false;
  VertexSet vimage;
  for (VertexId y : iso.vertex_map) {
    if (y < 0 || y >= n || vimage.contains(y)) return false;
    vimage.insert(y);
  }
  EdgeSet eimage;
  for (EdgeId f : iso.edge_map) {
    if (f < 0 || f >= m || eimage.contains(f)) return false;
    eimage.insert(f);
  }
  if (!iso.resign_shore.is_subset_of(a.graph().all_vertices()) || (iso.resign_shore & a.terminals()).size() % 2 != 0)
    return false;
  const auto vmap = [&](VertexId v) { return iso.vertex_map[static_cast<std::size_t>(v)]; };
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ea = a.graph().edge(e);
    const Edge& eb = b.graph().edge(iso.edge_map[static_cast<std::size_t>(e)]);
    const bool same = (vmap(ea.u) == eb.u && vmap(ea.v) == eb.v) || (vmap(ea.u) == eb.v && vmap(ea.v) == eb.u);
    if (!same) return false;
  }
  VertexSet t;
  a.terminals().for_each([&](VertexId v) { t.insert(vmap(v)); });
  if (t != b.terminals()) return false;
  EdgeSet sigma;
  (a.sigma() ^ cut(a.graph(), iso.resign_shore)).for_each([&](EdgeId e) {
    sigma.insert(iso.edge_map[static_cast<std::size_t>(e)]);
  });
  return sigma == b.sigma();
}

SignedGraft strip_isolated(const SignedGraft& sg, std::vector<VertexId>* kept) {
  const Multigraph& g = sg.graph();
  std::vector<VertexId> remap(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<VertexId> survivors;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.incident(v).empty() && !sg.terminals().contains(v)) continue;
    remap[static_cast<std::size_t>(v)] = static_cast<VertexId>(survivors.size());
    survivors.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back({remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)]});
  VertexSet t;
  sg.terminals().for_each([&](VertexId v) { t.insert(remap[static_cast<std::size_t>(v)]); });
  if (kept != nullptr) *kept = survivors;
  return SignedGraft(Multigraph(static_cast<int>(survivors.size()), std::move(edges)), sg.sigma(), t);
}

std::string to_string(MinorStatus s) {
  switch (s) {
    case MinorStatus::kFound: return "found";
    case MinorStatus::kNotFound: return "not-found";
    case MinorStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(ScanOutcome o) {
  switch (o) {
    case ScanOutcome::kNone: return "none";
    case ScanOutcome::kK5Tilde: return "K5tilde";
    case ScanOutcome::kF7: return "F7";
    case ScanOutcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

GraftMinorResult find_graft_minor(const SignedGraft& sg, const SignedGraft& target, std::uint64_t budget) {
  GraftMinorResult result;
  const SignedGraft goal = strip_isolated(target);
  const int keep_size = goal.num_edges();
  if (keep_size > sg.num_edges() || goal.terminals().size() > sg.terminals().size()) return result;
  const Multigraph& g = sg.graph();
  const EdgeSet all = g.all_edges();
  bool over_budget = false;
  detail::for_each_subset_of_size(all, keep_size, [&](EdgeSet keep) {
    const EdgeSet rest = all - keep;
    return detail::for_each_subset(rest, [&](EdgeSet contract) {
      if (++result.splits_examined > budget) {
        over_budget = true;
        return true;
      }
      if (cycle_rank(g, contract) != 0) return false;
      // Contracting a forest leaves n - |I| vertices; isolated non-terminal
      // ones are stripped, so the count can only drop from there.
      if (sg.num_vertices() - contract.size() < goal.num_vertices()) return false;
      if (!find_shore(g, contract, contract & sg.sigma(), sg.terminals(), 0)) return false;
      const EdgeSet del = rest - contract;
      const Minor minor = take_minor(sg, del, contract);
      const SignedGraft stripped = strip_isolated(minor.graft);
      auto iso = graft_isomorphism(stripped, goal);
      if (!iso) return false;
      result.status = MinorStatus::kFound;
      result.witness = GraftMinorWitness{del, contract, minor.resign_shore, std::move(*iso)};
      return true;
    });
  });
  if (over_budget) {
    result.status = MinorStatus::kInconclusive;
    result.splits_examined = budget;
  }
  return result;
}

bool check_graft_minor(const SignedGraft& sg, const SignedGraft& target, const GraftMinorWitness& w) {
  try {
    const Minor minor = take_minor(sg, w.deleted, w.contracted);
    if (minor.resign_shore != w.resign_shore) return false;
    return check_graft_isomorphism(strip_isolated(minor.graft), strip_isolated(target), w.iso);
  } catch (const Error&) {
    return false;
  }
}

ObstructionScan obstruction_scan(const SignedGraft& sg, std::uint64_t budget, int clutter_check_edges) {
  static const SignedGraft k5 = build_k5tilde();
  static const SignedGraft f7 = build_f7();
  ObstructionScan scan;
  const bool cross = sg.num_edges() <= clutter_check_edges;
  const GraftMinorResult r5 = find_graft_minor(sg, k5, budget);
  scan.k5tilde = r5.status;
  GraftMinorResult r7;
  if (cross || r5.status != MinorStatus::kFound) {
    r7 = find_graft_minor(sg, f7, budget);
    scan.f7 = r7.status;
  }
  if (r5.status == MinorStatus::kFound) {
    scan.outcome = ScanOutcome::kK5Tilde;
    scan.witness = r5.witness;
  } else if (r7.status == MinorStatus::kFound) {
    scan.outcome = ScanOutcome::kF7;
    scan.witness = r7.witness;
  } else if (r5.status == MinorStatus::kInconclusive || r7.status == MinorStatus::kInconclusive) {
    scan.outcome = ScanOutcome::kInconclusive;
  }
  if (cross && r5.status != MinorStatus::kInconclusive && r7.status != MinorStatus::kInconclusive) {
    const Clutter c = from_signed_graft(sg);
    const bool o5 = find_clutter_minor(c, catalog(Obstruction::kO5)).has_value();
    const bool l7 = find_clutter_minor(c, catalog(Obstruction::kL7)).has_value();
    scan.clutter_checked = true;
    scan.clutter_agrees = o5 == (r5.status == MinorStatus::kFound) && l7 == (r7.status == MinorStatus::kFound);
  }
  return scan;
}

}  // namespace oddjoin
