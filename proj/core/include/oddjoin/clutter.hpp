#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddjoin/rational_lp.hpp"
#include "oddjoin/signed_graft.hpp"

namespace oddjoin {

/// Subsets of a clutter's ground set {0, ..., ground-1}.
using ElementSet = EdgeSet;

/// An antichain of distinct subsets of a finite ground set. Members are kept
/// sorted by lex_less.
class Clutter {
 public:
  Clutter() = default;
  /// Throws InputError on repeated members, nested members or elements
  /// outside the ground set.
  Clutter(int ground, std::vector<ElementSet> sets);
  /// Keeps only the inclusion-wise minimal members of `sets`.
  static Clutter from_minimal(int ground, std::vector<ElementSet> sets);

  int ground() const { return ground_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  bool operator==(const Clutter&) const = default;

 private:
  int ground_ = 0;
  std::vector<ElementSet> sets_;
};

/// S1 ^ S2 ^ S3 contains some member for every triple of members.
bool is_binary(const Clutter& c);
/// The clutter of minimal transversals.
Clutter blocker(const Clutter& c);
/// Every minimal cover has the same parity.
bool is_eulerian_clutter(const Clutter& c);

/// C \ delete_set / contract_set. The surviving elements are renumbered
/// 0, 1, ... in increasing order. Throws InputError on overlapping sets.
Clutter clutter_minor(const Clutter& c, ElementSet delete_set, ElementSet contract_set);

/// Element bijection f with f(a) = b, as f[element of a] = element of b.
std::optional<std::vector<int>> clutter_isomorphism(const Clutter& a, const Clutter& b);

struct ClutterMinorWitness {
  ElementSet deleted;
  ElementSet contracted;
  /// target element -> element of the host clutter
  std::vector<int> mapping;
};

/// Some minor of `c` isomorphic to `target`, found by trying every kept set
/// of the right size and every delete/contract split of the remainder.
std::optional<ClutterMinorWitness> find_clutter_minor(const Clutter& c, const Clutter& target);
/// Rebuilds the minor named by `w` and checks it against `target`.
bool check_clutter_minor(const Clutter& c, const Clutter& target, const ClutterMinorWitness& w);

/// Minimal odd T-joins over the edge ground set of sg.
Clutter from_signed_graft(const SignedGraft& sg);

enum class Obstruction { kL7, kO5, kBO5, kP10 };
std::string to_string(Obstruction id);
std::optional<Obstruction> parse_obstruction(const std::string& name);
/// Catalog entries are generated from their definitions on first use and
/// checked against each other (blocker(O5) = bO5, L7 self-blocking).
const Clutter& catalog(Obstruction id);

int clutter_tau(const Clutter& c);
int clutter_nu(const Clutter& c);
FractionalPacking clutter_nustar(const Clutter& c);

struct ConjectureReport {
  bool binary = false;
  bool eulerian = false;
  std::vector<Obstruction> excluded_minors;
  bool hypothesis = false;
  int tau = 0;
  int nu = 0;
  Rational nustar;
  /// Packs for the cycling check, fractionally packs for the idealness check.
  bool conclusion = false;
  bool consistent = true;
};

/// Binary, Eulerian and free of L7, O5, bO5, P10 minors implies packing.
/// Throws PreconditionError when the ground set exceeds `max_ground`.
ConjectureReport cycling_check(const Clutter& c, int max_ground = 12);
/// Binary and free of L7, O5, bO5 minors implies tau = nu*.
ConjectureReport idealness_check(const Clutter& c, int max_ground = 12);

}  // namespace oddjoin
