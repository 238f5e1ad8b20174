#include "oddjoin/clutter.hpp"

#include <algorithm>
#include <array>

#include "oddjoin/hitting_set.hpp"
#include "subsets.hpp"

namespace oddjoin {

Clutter::Clutter(int ground, std::vector<ElementSet> sets) : ground_(ground), sets_(std::move(sets)) {
  if (ground < 0 || ground > ElementSet::kCapacity) throw InputError("clutter ground size out of range");
  const ElementSet all = ElementSet::range(ground);
  std::sort(sets_.begin(), sets_.end(), [](ElementSet a, ElementSet b) { return lex_less(a, b); });
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!sets_[i].is_subset_of(all)) throw InputError("clutter member " + to_string(sets_[i]) + " leaves the ground set");
    for (std::size_t j = 0; j < i; ++j) {
      if (sets_[i] == sets_[j]) throw InputError("clutter member " + to_string(sets_[i]) + " repeated");
      if (sets_[i].is_subset_of(sets_[j]) || sets_[j].is_subset_of(sets_[i]))
        throw InputError("clutter members " + to_string(sets_[j]) + " and " + to_string(sets_[i]) + " are nested");
    }
  }
}

Clutter Clutter::from_minimal(int ground, std::vector<ElementSet> sets) {
  return Clutter(ground, minimal_members(std::move(sets)));
}

bool is_binary(const Clutter& c) {
  const auto& s = c.sets();
  const auto holds_member = [&](ElementSet x) {
    return std::any_of(s.begin(), s.end(), [&](ElementSet m) { return m.is_subset_of(x); });
  };
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (!holds_member(s[i] ^ s[j] ^ s[k])) return false;
  return true;
}

Clutter blocker(const Clutter& c) {
  return Clutter(c.ground(), minimal_transversals(c.sets()));
}

bool is_eulerian_clutter(const Clutter& c) {
  const Clutter b = blocker(c);
  if (b.empty()) return true;
  const int parity = b.sets().front().size() % 2;
  return std::all_of(b.sets().begin(), b.sets().end(), [&](ElementSet s) { return s.size() % 2 == parity; });
}

namespace {

// Squeezes the bits of `s` that lie in `keep` into a dense prefix.
ElementSet compress(ElementSet s, ElementSet keep) {
  ElementSet out;
  int next = 0;
  keep.for_each([&](int e) {
    if (s.contains(e)) out.insert(next);
    ++next;
  });
  return out;
}

}  // namespace

Clutter clutter_minor(const Clutter& c, ElementSet delete_set, ElementSet contract_set) {
  if (delete_set.intersects(contract_set)) throw InputError("delete and contract sets overlap");
  const ElementSet all = ElementSet::range(c.ground());
  if (!(delete_set | contract_set).is_subset_of(all)) throw InputError("minor sets leave the ground set");
  const ElementSet keep = all - delete_set - contract_set;
  std::vector<ElementSet> survivors;
  for (ElementSet s : c.sets())
    if (!s.intersects(delete_set)) survivors.push_back(compress(s - contract_set, keep));
  return Clutter::from_minimal(keep.size(), std::move(survivors));
}

namespace {

class ClutterMatcher {
 public:
  ClutterMatcher(const Clutter& a, const Clutter& b) : a_(a), b_(b), n_(a.ground()) {
    profile_a_ = profiles(a);
    profile_b_ = profiles(b);
    co_a_ = cooccurrence(a);
    co_b_ = cooccurrence(b);
    for (int x = 0; x < n_; ++x) order_.push_back(x);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return profile_a_[static_cast<std::size_t>(x)].size() > profile_a_[static_cast<std::size_t>(y)].size();
    });
    target_ = b.sets();
    std::sort(target_.begin(), target_.end());
  }

  std::optional<std::vector<int>> run() {
    auto pa = profile_a_;
    auto pb = profile_b_;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return std::nullopt;
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_ = ElementSet{};
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  static std::vector<std::vector<int>> profiles(const Clutter& c) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(c.ground()));
    for (ElementSet s : c.sets()) s.for_each([&](int e) { out[static_cast<std::size_t>(e)].push_back(s.size()); });
    for (auto& p : out) std::sort(p.begin(), p.end());
    return out;
  }

  static std::vector<std::vector<int>> cooccurrence(const Clutter& c) {
    const auto n = static_cast<std::size_t>(c.ground());
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
    for (ElementSet s : c.sets())
      s.for_each([&](int x) { s.for_each([&](int y) { ++out[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }); });
    return out;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return matches();
    const int x = order_[depth];
    const auto ux = static_cast<std::size_t>(x);
    for (int y = 0; y < n_; ++y) {
      const auto uy = static_cast<std::size_t>(y);
      if (used_.contains(y) || profile_a_[ux] != profile_b_[uy]) continue;
      bool ok = co_a_[ux][ux] == co_b_[uy][uy];
      for (std::size_t d = 0; ok && d < depth; ++d) {
        const auto xp = static_cast<std::size_t>(order_[d]);
        ok = co_a_[ux][xp] == co_b_[uy][static_cast<std::size_t>(image_[xp])];
      }
      if (!ok) continue;
      image_[ux] = y;
      used_.insert(y);
      if (extend(depth + 1)) return true;
      used_.erase(y);
      image_[ux] = -1;
    }
    return false;
  }

  bool matches() const {
    std::vector<ElementSet> mapped;
    mapped.reserve(a_.size());
    for (ElementSet s : a_.sets()) {
      ElementSet t;
      s.for_each([&](int e) { t.insert(image_[static_cast<std::size_t>(e)]); });
      mapped.push_back(t);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == target_;
  }

  const Clutter& a_;
  const Clutter& b_;
  int n_;
  std::vector<std::vector<int>> profile_a_, profile_b_;
  std::vector<std::vector<int>> co_a_, co_b_;
  std::vector<int> order_;
  std::vector<ElementSet> target_;
  std::vector<int> image_;
  ElementSet used_;
};

std::vector<int> size_profile(const Clutter& c) {
  std::vector<int> out;
  for (ElementSet s : c.sets()) out.push_back(s.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::vector<int>> clutter_isomorphism(const Clutter& a, const Clutter& b) {
  if (a.ground() != b.ground() || a.size() != b.size()) return std::nullopt;
  if (size_profile(a) != size_profile(b)) return std::nullopt;
  return ClutterMatcher(a, b).run();
}

std::optional<ClutterMinorWitness> find_clutter_minor(const Clutter& c, const Clutter& target) {
  if (target.ground() > c.ground()) return std::nullopt;
  const ElementSet all = ElementSet::range(c.ground());
  const std::vector<int> want = size_profile(target);
  std::optional<ClutterMinorWitness> found;
  detail::for_each_subset_of_size(all, target.ground(), [&](ElementSet keep) {
    const ElementSet rest = all - keep;
    return detail::for_each_subset(rest, [&](ElementSet del) {
      const ElementSet con = rest - del;
      const Clutter minor = clutter_minor(c, del, con);
      if (minor.size() != target.size() || size_profile(minor) != want) return false;
      const auto iso = clutter_isomorphism(minor, target);
      if (!iso) return false;
      const std::vector<int> kept = keep.to_vector();
      ClutterMinorWitness w{del, con, std::vector<int>(kept.size())};
      for (std::size_t j = 0; j < kept.size(); ++j) w.mapping[static_cast<std::size_t>((*iso)[j])] = kept[j];
      found = std::move(w);
      return true;
    });
  });
  return found;
}

bool check_clutter_minor(const Clutter& c, const Clutter& target, const ClutterMinorWitness& w) {
  if (w.deleted.intersects(w.contracted)) return false;
  const ElementSet all = ElementSet::range(c.ground());
  const ElementSet keep = all - w.deleted - w.contracted;
  if (!(w.deleted | w.contracted).is_subset_of(all)) return false;
  if (static_cast<int>(w.mapping.size()) != target.ground() || keep.size() != target.ground()) return false;
  // Pull each target member back through the mapping and compare with the minor.
  ElementSet image;
  for (int e : w.mapping) {
    if (e < 0 || e >= c.ground() || !keep.contains(e) || image.contains(e)) return false;
    image.insert(e);
  }
  const Clutter minor = clutter_minor(c, w.deleted, w.contracted);
  const std::vector<int> kept = keep.to_vector();
  std::vector<ElementSet> pulled;
  for (ElementSet s : target.sets()) {
    ElementSet t;
    s.for_each([&](int i) {
      const int host = w.mapping[static_cast<std::size_t>(i)];
      t.insert(static_cast<int>(std::lower_bound(kept.begin(), kept.end(), host) - kept.begin()));
    });
    pulled.push_back(t);
  }
  return Clutter::from_minimal(target.ground(), pulled) == minor && pulled.size() == minor.size();
}

Clutter from_signed_graft(const SignedGraft& sg) {
  return Clutter(sg.num_edges(), minimal_odd_tjoins(sg));
}

std::string to_string(Obstruction id) {
  switch (id) {
    case Obstruction::kL7: return "L7";
    case Obstruction::kO5: return "O5";
    case Obstruction::kBO5: return "bO5";
    case Obstruction::kP10: return "P10";
  }
  return "?";
}

std::optional<Obstruction> parse_obstruction(const std::string& name) {
  for (Obstruction id : {Obstruction::kL7, Obstruction::kO5, Obstruction::kBO5, Obstruction::kP10})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

namespace {

Clutter fano_lines() {
  // Points of PG(2,2) are the nonzero vectors 1..7; {a, b, a^b} is a line.
  std::vector<ElementSet> lines;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      if ((a ^ b) > b) lines.push_back(ElementSet{a - 1, b - 1, (a ^ b) - 1});
  return Clutter(7, lines);
}

Clutter odd_circuits_k5() {
  std::vector<ElementSet> odd;
  for (EdgeSet c : circuits(complete_graph(5)))
    if (c.size() % 2 == 1) odd.push_back(c);
  return Clutter(10, odd);
}

Clutter cut_complements_k5() {
  const Multigraph k5 = complete_graph(5);
  std::vector<ElementSet> sets;
  for (std::uint64_t u = 1; u + 1 < (1U << 5); ++u) sets.push_back(k5.all_edges() - cut(k5, VertexSet(u)));
  return Clutter::from_minimal(10, sets);
}

Clutter petersen_joins() {
  const Multigraph p = petersen_graph();
  std::vector<ElementSet> joins;
  for_each_tjoin(p, p.all_vertices(), [&](EdgeSet j) { joins.push_back(j); });
  return Clutter::from_minimal(p.num_edges(), joins);
}

struct Catalog {
  std::array<Clutter, 4> entries;

  Catalog() {
    entries[0] = fano_lines();
    entries[1] = odd_circuits_k5();
    entries[2] = cut_complements_k5();
    entries[3] = petersen_joins();
    if (entries[0].size() != 7 || blocker(entries[0]) != entries[0])
      throw CertificateError("generated Fano lines fail self-validation");
    if (entries[1].size() != 22 || entries[2].size() != 15 || blocker(entries[1]) != entries[2])
      throw CertificateError("generated O5 / bO5 fail self-validation");
    for (ElementSet s : entries[3].sets())
      if (!is_tjoin(petersen_graph(), s, petersen_graph().all_vertices()))
        throw CertificateError("generated P10 member is not a T-join");
  }
};

}  // namespace

const Clutter& catalog(Obstruction id) {
  static const Catalog instance;
  return instance.entries[static_cast<std::size_t>(id)];
}

int clutter_tau(const Clutter& c) {
  const auto h = min_hitting_set(c.sets());
  if (!h) throw PreconditionError("a clutter holding the empty set has no cover");
  return h->size();
}

int clutter_nu(const Clutter& c) { return static_cast<int>(max_disjoint_subfamily(c.sets()).size()); }

FractionalPacking clutter_nustar(const Clutter& c) { return solve_fractional_packing(c.sets(), c.ground()); }

namespace {

ConjectureReport evaluate(const Clutter& c, int max_ground, bool cycling) {
  if (c.ground() > max_ground)
    throw PreconditionError("clutter ground " + std::to_string(c.ground()) + " exceeds the bound " +
                            std::to_string(max_ground));
  ConjectureReport r;
  r.binary = is_binary(c);
  r.eulerian = is_eulerian_clutter(c);
  std::vector<Obstruction> targets{Obstruction::kL7, Obstruction::kO5, Obstruction::kBO5};
  if (cycling) targets.push_back(Obstruction::kP10);
  for (Obstruction id : targets)
    if (find_clutter_minor(c, catalog(id))) r.excluded_minors.push_back(id);
  r.hypothesis = r.binary && r.excluded_minors.empty() && (!cycling || r.eulerian);
  r.tau = clutter_tau(c);
  r.nu = clutter_nu(c);
  r.nustar = clutter_nustar(c).value;
  r.conclusion = cycling ? r.tau == r.nu : Rational(r.tau) == r.nustar;
  r.consistent = !r.hypothesis || r.conclusion;
  return r;
}

}  // namespace

ConjectureReport cycling_check(const Clutter& c, int max_ground) { return evaluate(c, max_ground, true); }

ConjectureReport idealness_check(const Clutter& c, int max_ground) { return evaluate(c, max_ground, false); }

}  // namespace oddjoin
