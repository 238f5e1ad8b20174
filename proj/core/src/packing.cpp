#include "oddjoin/packing.hpp"

#include <algorithm>

#include "oddjoin/hitting_set.hpp"
#include "subsets.hpp"

namespace oddjoin {

namespace {

void require_exhaustive_size(const SignedGraft& sg) {
  if (sg.num_edges() > kExhaustiveEdgeLimit)
    throw PreconditionError("exhaustive oracle limited to " + std::to_string(kExhaustiveEdgeLimit) + " edges");
}

void require_shore_size(const SignedGraft& sg) {
  if (sg.num_vertices() > 24) throw PreconditionError("shore enumeration limited to 24 vertices");
}

// Calls fn(U, is_tcut) once per cut pair {U, V - U}: every U avoiding the
// highest vertex.
template <class Fn>
void for_each_shore(const SignedGraft& sg, Fn&& fn) {
  const int n = sg.num_vertices();
  if (n == 0) {
    fn(VertexSet{}, false);
    return;
  }
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t u = 0; u < count; ++u) {
    const VertexSet shore(u);
    fn(shore, (shore & sg.terminals()).size() % 2 == 1);
  }
}

}  // namespace

TauResult tau(const SignedGraft& sg, Oracle oracle) {
  TauResult out;
  if (oracle == Oracle::kExhaustive) {
    require_exhaustive_size(sg);
    const std::vector<EdgeSet> joins = odd_tjoins(sg);
    if (joins.empty()) return out;
    const EdgeSet all = sg.graph().all_edges();
    for (int k = 0; k <= sg.num_edges() && !out.value; ++k) {
      detail::for_each_subset_of_size(all, k, [&](EdgeSet b) {
        const bool cover = std::all_of(joins.begin(), joins.end(), [&](EdgeSet j) { return (j & b).size() % 2 == 1; });
        if (!cover) return false;
        out.value = k;
        out.cover = {b, classify_cover(sg, b)};
        return true;
      });
    }
    return out;
  }
  const std::vector<EdgeSet> joins = minimal_odd_tjoins(sg);
  if (joins.empty()) return out;
  const auto h = min_hitting_set(joins);
  const CoverClass kind = classify_cover(sg, *h);
  if (kind == CoverClass::kNeither)
    throw CertificateError("minimum transversal " + to_string(*h) + " is neither a signature nor a T-cut");
  out.value = h->size();
  out.cover = {*h, kind};
  return out;
}

TauResult tau_by_shores(const SignedGraft& sg) {
  require_shore_size(sg);
  TauResult out;
  if (!has_odd_tjoin(sg)) return out;
  const Multigraph& g = sg.graph();
  const auto consider = [&](EdgeSet b) {
    if (!out.value || b.size() < *out.value || (b.size() == *out.value && b < out.cover.edges)) {
      out.value = b.size();
      out.cover.edges = b;
    }
  };
  for_each_shore(sg, [&](VertexSet u, bool odd) {
    const EdgeSet c = cut(g, u);
    consider(odd ? c : c ^ sg.sigma());
  });
  out.cover.kind = classify_cover(sg, out.cover.edges);
  return out;
}

NuResult nu(const SignedGraft& sg, Oracle oracle) {
  std::vector<EdgeSet> family;
  if (oracle == Oracle::kExhaustive) {
    require_exhaustive_size(sg);
    family = odd_tjoins(sg);
  } else {
    family = minimal_odd_tjoins(sg);
  }
  NuResult out;
  out.packing = max_disjoint_subfamily(family);
  std::sort(out.packing.begin(), out.packing.end(), [](EdgeSet a, EdgeSet b) { return lex_less(a, b); });
  out.value = static_cast<int>(out.packing.size());
  return out;
}

SignedGraft doubled(const SignedGraft& sg) {
  if (2 * sg.num_edges() > EdgeSet::kCapacity) throw PreconditionError("doubled graft exceeds the edge limit");
  std::vector<Edge> edges;
  EdgeSet sigma;
  for (EdgeId e = 0; e < sg.num_edges(); ++e) {
    edges.push_back(sg.graph().edge(e));
    edges.push_back(sg.graph().edge(e));
    if (sg.sigma().contains(e)) {
      sigma.insert(2 * e);
      sigma.insert(2 * e + 1);
    }
  }
  return SignedGraft(Multigraph(sg.num_vertices(), std::move(edges)), sigma, sg.terminals());
}

NustarResult nustar(const SignedGraft& sg) {
  NustarResult out;
  out.joins = minimal_odd_tjoins(sg);
  out.lp = solve_fractional_packing(out.joins, sg.num_edges());
  if (!check_fractional_packing(out.joins, sg.num_edges(), out.lp))
    throw CertificateError("fractional packing failed its primal/dual check");
  out.value = out.lp.value;

  // The doubled instance has cycle rank 2m - n + c; its T-joins are walked
  // one by one, so keep it modest.
  const int rank = 2 * sg.num_edges() - sg.num_vertices() + static_cast<int>(components(sg.graph()).size());
  if (sg.terminals().size() <= 2 && 2 * sg.num_edges() <= EdgeSet::kCapacity && rank <= 22) {
    const SignedGraft d = doubled(sg);
    const NuResult packed = nu(d);
    out.doubling_value = Rational(packed.value, 2);
    std::vector<std::pair<EdgeSet, Rational>> weights;
    for (EdgeSet j : packed.packing) {
      EdgeSet image;
      j.for_each([&](EdgeId e) { image.insert(e / 2); });
      auto it = std::find_if(weights.begin(), weights.end(), [&](const auto& w) { return w.first == image; });
      if (it == weights.end()) {
        weights.emplace_back(image, Rational(1, 2));
      } else {
        it->second += Rational(1, 2);
      }
    }
    std::sort(weights.begin(), weights.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    out.half_integral = std::move(weights);
  }
  return out;
}

PackingResult packs(const SignedGraft& sg, Oracle oracle) {
  PackingResult r;
  const TauResult t = tau(sg, oracle);
  if (!t.value) {
    r.status = PackStatus::kNoJoin;
    return r;
  }
  const NuResult n = nu(sg, oracle);
  r.tau = t.value;
  r.cover = t.cover;
  r.nu = n.value;
  r.packing = n.packing;
  r.packs = *r.tau == r.nu;
  if (!check_packing(sg, r)) throw CertificateError("packing certificate failed its independent check");
  return r;
}

bool check_packing(const SignedGraft& sg, const PackingResult& r) {
  const std::vector<EdgeSet> joins = odd_tjoins(sg);
  if (r.status == PackStatus::kNoJoin) return joins.empty() && !r.tau && r.nu == 0 && !r.packs;
  if (joins.empty() || !r.tau) return false;
  for (EdgeSet j : joins)
    if ((j & r.cover.edges).size() % 2 == 0) return false;
  if (r.cover.edges.size() != *r.tau || classify_cover(sg, r.cover.edges) == CoverClass::kNeither) return false;
  EdgeSet used;
  for (EdgeSet p : r.packing) {
    if (!is_odd_tjoin(sg, p) || p.intersects(used)) return false;
    used |= p;
  }
  return static_cast<int>(r.packing.size()) == r.nu && r.nu <= *r.tau && r.packs == (*r.tau == r.nu);
}

EdgeSet min_signature(const SignedGraft& sg) {
  require_shore_size(sg);
  std::optional<EdgeSet> best;
  for_each_shore(sg, [&](VertexSet u, bool odd) {
    if (odd) return;
    const EdgeSet s = sg.sigma() ^ cut(sg.graph(), u);
    if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best)) best = s;
  });
  return *best;
}

std::optional<EdgeSet> min_tcut(const SignedGraft& sg) {
  require_shore_size(sg);
  std::optional<EdgeSet> best;
  for_each_shore(sg, [&](VertexSet u, bool odd) {
    if (!odd) return;
    const EdgeSet c = cut(sg.graph(), u);
    if (!best || c.size() < best->size() || (c.size() == best->size() && c < *best)) best = c;
  });
  return best;
}

MixedPacking mixed_packing(const SignedGraft& sg, std::uint64_t budget) {
  if (sg.terminals().size() != 2) throw PreconditionError("mixed packing needs exactly two terminals");
  if (!is_eulerian(sg)) throw PreconditionError("mixed packing needs an Eulerian signed graft");
  MixedPacking out;
  out.k = min_tcut(sg)->size();
  out.ell = min_signature(sg).size();
  if (out.k < out.ell)
    throw PreconditionError("min st-cut " + std::to_string(out.k) + " is below min signature " +
                            std::to_string(out.ell));
  const ObstructionScan scan = obstruction_scan(sg, budget, 0);
  if (scan.outcome == ScanOutcome::kInconclusive)
    throw PreconditionError("obstruction scan exceeded its budget");
  if (scan.outcome != ScanOutcome::kNone) {
    out.refusal = scan;
    return out;
  }

  const VertexId s = sg.terminals().front();
  std::vector<Edge> edges = sg.graph().edges();
  EdgeSet sigma = sg.sigma();
  for (int i = 0; i < out.k - out.ell; ++i) {
    sigma.insert(static_cast<int>(edges.size()));
    edges.push_back({s, s});
  }
  const SignedGraft augmented(Multigraph(sg.num_vertices(), std::move(edges)), sigma, sg.terminals());
  const NuResult packed = nu(augmented);
  if (packed.value < out.k)
    throw CertificateError("augmented graft packs only " + std::to_string(packed.value) + " of " +
                           std::to_string(out.k) + " joins");
  const EdgeSet original = sg.graph().all_edges();
  for (int i = 0; i < out.k; ++i) {
    const EdgeSet j = packed.packing[static_cast<std::size_t>(i)];
    const EdgeSet loops = j - original;
    if (loops.empty()) {
      out.odd_joins.push_back(j);
    } else {
      const EdgeSet path = j & original;
      if (loops.size() != 1 || is_odd_tjoin(sg, path) || !is_tjoin(sg.graph(), path, sg.terminals()) ||
          !is_connected_set(sg.graph(), path) || cycle_rank(sg.graph(), path) != 0)
        throw CertificateError("stripped join " + to_string(j) + " is not an even st-path");
      out.even_paths.push_back(path);
    }
  }
  return out;
}

}  // namespace oddjoin
