#pragma once

#include <optional>
#include <vector>

#include "oddjoin/obstructions.hpp"
#include "oddjoin/signed_graft.hpp"

namespace oddjoin {

/// A sequence (L1, ..., Lk) of odd T-joins with omega in L1, L2, L3, omega in
/// none of L4..Lk, and any two members meeting in omega at most.
struct OmegaPacking {
  EdgeId omega = 0;
  std::vector<EdgeSet> joins;

  int k() const { return static_cast<int>(joins.size()); }
};

bool is_omega_packing(const SignedGraft& sg, const OmegaPacking& p);

/// First (Omega, k)-packing in lexicographic order of (L1, L2, L3), or
/// nullopt. L1..L3 range over odd T-joins minimal among those holding
/// omega, L4..Lk over minimal odd T-joins; any packing shrinks to one of
/// this shape. Throws PreconditionError for k < 3.
std::optional<OmegaPacking> find_omega_packing(const SignedGraft& sg, EdgeId omega, int k);

/// Every signature and every T-cut, each listed once, sorted by lex_less.
std::vector<Cover> signatures_and_tcuts(const SignedGraft& sg);

/// B is a signature or T-cut with |B - L| <= k - 3.
bool is_kmate(const SignedGraft& sg, EdgeSet b, EdgeSet l, int k);
/// No other k-mate B' of L has B' & L a proper subset of B & L.
bool is_extremal_kmate(const SignedGraft& sg, EdgeSet b, EdgeSet l, int k);
std::vector<EdgeSet> kmates(const SignedGraft& sg, EdgeSet l, int k);

/// Conditions (T1)-(T4) for B against member `index` (0-based) of p.
bool is_cap(const SignedGraft& sg, const OmegaPacking& p, EdgeSet b, int index);

/// Outcome of each property an extremal counterexample would have.
struct BgMinimalityReport {
  bool eulerian = false;
  bool at_most_two_terminals = false;
  bool packs = false;
  ScanOutcome scan = ScanOutcome::kNone;
  /// All of the above point at an extremal counterexample.
  bool precondition = false;
  std::optional<int> tau;
  int nu = 0;

  bool connected = false;
  /// An edge in no minimum cover, next to a terminal when T is nonempty.
  std::optional<EdgeId> omega;
  /// No tau - 1 pairwise disjoint odd T-joins.
  bool no_near_packing = false;
  /// An (omega, tau)-packing, searched only when tau >= 3.
  std::optional<OmegaPacking> omega_packing;
  /// Every odd T-join has a tau-mate.
  bool every_join_has_mate = false;
};

BgMinimalityReport bg_minimality_suite(const SignedGraft& sg, std::uint64_t budget = kDefaultMinorBudget);

}  // namespace oddjoin
