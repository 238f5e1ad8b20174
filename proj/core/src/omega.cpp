#include "oddjoin/omega.hpp"

#include <algorithm>

#include "oddjoin/hitting_set.hpp"
#include "oddjoin/packing.hpp"

namespace oddjoin {

bool is_omega_packing(const SignedGraft& sg, const OmegaPacking& p) {
  if (p.k() < 3 || p.omega < 0 || p.omega >= sg.num_edges()) return false;
  const EdgeSet omega = EdgeSet::singleton(p.omega);
  for (int i = 0; i < p.k(); ++i) {
    const EdgeSet l = p.joins[static_cast<std::size_t>(i)];
    if (!is_odd_tjoin(sg, l) || l.contains(p.omega) != (i < 3)) return false;
    for (int j = 0; j < i; ++j)
      if (!(l & p.joins[static_cast<std::size_t>(j)]).is_subset_of(omega)) return false;
  }
  return true;
}

std::optional<OmegaPacking> find_omega_packing(const SignedGraft& sg, EdgeId omega, int k) {
  if (k < 3) throw PreconditionError("an (Omega, k)-packing needs k >= 3");
  std::vector<EdgeSet> through;
  for (EdgeSet j : odd_tjoins(sg))
    if (j.contains(omega)) through.push_back(j);
  through = minimal_members(std::move(through));
  std::vector<EdgeSet> avoiding;
  for (EdgeSet j : minimal_odd_tjoins(sg))
    if (!j.contains(omega)) avoiding.push_back(j);

  const EdgeSet all = sg.graph().all_edges();
  const EdgeSet w = EdgeSet::singleton(omega);
  const auto n = through.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!(through[a] & through[b]).is_subset_of(w)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!(through[a] & through[c]).is_subset_of(w) || !(through[b] & through[c]).is_subset_of(w)) continue;
        const EdgeSet used = through[a] | through[b] | through[c];
        std::vector<EdgeSet> rest = max_disjoint_subfamily(avoiding, all - used, k - 3);
        if (static_cast<int>(rest.size()) < k - 3) continue;
        rest.resize(static_cast<std::size_t>(k - 3));
        std::sort(rest.begin(), rest.end(), [](EdgeSet x, EdgeSet y) { return lex_less(x, y); });
        OmegaPacking p{omega, {through[a], through[b], through[c]}};
        p.joins.insert(p.joins.end(), rest.begin(), rest.end());
        return p;
      }
    }
  }
  return std::nullopt;
}

std::vector<Cover> signatures_and_tcuts(const SignedGraft& sg) {
  if (sg.num_vertices() > 24) throw PreconditionError("shore enumeration limited to 24 vertices");
  std::vector<EdgeSet> found;
  const int n = sg.num_vertices();
  const std::uint64_t count = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
  for (std::uint64_t u = 0; u < count; ++u) {
    const VertexSet shore(u);
    const EdgeSet c = cut(sg.graph(), shore);
    found.push_back((shore & sg.terminals()).size() % 2 == 1 ? c : c ^ sg.sigma());
  }
  std::sort(found.begin(), found.end(), [](EdgeSet a, EdgeSet b) { return lex_less(a, b); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Cover> out;
  for (EdgeSet b : found) out.push_back({b, classify_cover(sg, b)});
  return out;
}

bool is_kmate(const SignedGraft& sg, EdgeSet b, EdgeSet l, int k) {
  return (b - l).size() <= k - 3 && classify_cover(sg, b) != CoverClass::kNeither;
}

std::vector<EdgeSet> kmates(const SignedGraft& sg, EdgeSet l, int k) {
  std::vector<EdgeSet> out;
  for (const Cover& c : signatures_and_tcuts(sg))
    if ((c.edges - l).size() <= k - 3) out.push_back(c.edges);
  return out;
}

bool is_extremal_kmate(const SignedGraft& sg, EdgeSet b, EdgeSet l, int k) {
  if (!is_kmate(sg, b, l, k)) return false;
  const EdgeSet mine = b & l;
  for (EdgeSet other : kmates(sg, l, k)) {
    const EdgeSet theirs = other & l;
    if (theirs != mine && theirs.is_subset_of(mine)) return false;
  }
  return true;
}

bool is_cap(const SignedGraft& sg, const OmegaPacking& p, EdgeSet b, int index) {
  if (classify_cover(sg, b) == CoverClass::kNeither) return false;
  if (!b.contains(p.omega)) return false;
  EdgeSet covered;
  for (EdgeSet l : p.joins) covered |= l;
  if (!b.is_subset_of(covered)) return false;
  for (int i = 0; i < p.k(); ++i) {
    const int meet = (b & p.joins[static_cast<std::size_t>(i)]).size();
    if (i == index ? meet < 3 : meet != 1) return false;
  }
  return true;
}

BgMinimalityReport bg_minimality_suite(const SignedGraft& sg, std::uint64_t budget) {
  BgMinimalityReport r;
  r.eulerian = is_eulerian(sg);
  r.at_most_two_terminals = sg.terminals().size() <= 2;
  const PackingResult p = packs(sg);
  r.packs = p.packs;
  r.tau = p.tau;
  r.nu = p.nu;
  r.scan = obstruction_scan(sg, budget, 0).outcome;
  r.precondition = r.eulerian && r.at_most_two_terminals && !r.packs && r.tau && r.scan == ScanOutcome::kNone;
  r.connected = components(strip_isolated(sg).graph()).size() <= 1;
  if (!r.tau) return r;
  const int tau = *r.tau;

  EdgeSet in_min_cover;
  for (const Cover& c : signatures_and_tcuts(sg))
    if (c.edges.size() == tau) in_min_cover |= c.edges;
  EdgeSet candidates = sg.graph().all_edges() - in_min_cover;
  if (!sg.terminals().empty()) {
    EdgeSet near;
    sg.terminals().for_each([&](VertexId v) { near |= sg.graph().star(v); });
    if (candidates.intersects(near)) candidates &= near;
  }
  if (!candidates.empty()) r.omega = candidates.front();

  r.no_near_packing = r.nu < tau - 1;
  if (r.omega && tau >= 3) r.omega_packing = find_omega_packing(sg, *r.omega, tau);

  r.every_join_has_mate = true;
  const std::vector<Cover> covers = signatures_and_tcuts(sg);
  for (EdgeSet l : odd_tjoins(sg)) {
    const bool mate = std::any_of(covers.begin(), covers.end(), [&](const Cover& c) {
      return c.kind != CoverClass::kNeither && (c.edges - l).size() <= tau - 3;
    });
    if (!mate) {
      r.every_join_has_mate = false;
      break;
    }
  }
  return r;
}

}  // namespace oddjoin
