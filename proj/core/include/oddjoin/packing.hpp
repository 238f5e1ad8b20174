#pragma once

#include <optional>
#include <vector>

#include "oddjoin/obstructions.hpp"
#include "oddjoin/rational_lp.hpp"
#include "oddjoin/signed_graft.hpp"

namespace oddjoin {

/// kExhaustive swaps every search for plain subset enumeration over all odd
/// T-joins; it exists to cross-check the default route.
enum class Oracle { kDefault, kExhaustive };

/// Exhaustive subset search refuses graphs with more edges than this.
inline constexpr int kExhaustiveEdgeLimit = 24;

struct TauResult {
  /// nullopt when there is no odd T-join (tau is +infinity).
  std::optional<int> value;
  Cover cover;
};

/// Minimum cover. The default route is branch and bound for a minimum
/// transversal of the minimal odd T-joins; the result is certified as a
/// signature or T-cut before it is returned.
TauResult tau(const SignedGraft& sg, Oracle oracle = Oracle::kDefault);
/// Minimum over all signatures and T-cuts, by enumerating shores.
TauResult tau_by_shores(const SignedGraft& sg);

struct NuResult {
  int value = 0;
  std::vector<EdgeSet> packing;
};

/// Maximum number of pairwise disjoint odd T-joins. Any disjoint family can
/// be shrunk member by member to minimal joins, so the default route packs
/// minimal joins only.
NuResult nu(const SignedGraft& sg, Oracle oracle = Oracle::kDefault);

struct NustarResult {
  Rational value;
  /// The LP was solved over these joins; weights and the dual follow.
  std::vector<EdgeSet> joins;
  FractionalPacking lp;
  /// nu(doubled)/2 with the matching packing, weights in {0, 1/2, 1}.
  /// Computed for |T| <= 2 when the doubled instance is small enough.
  std::optional<Rational> doubling_value;
  std::vector<std::pair<EdgeSet, Rational>> half_integral;
};

NustarResult nustar(const SignedGraft& sg);

/// Every edge e replaced by parallel copies 2e and 2e+1 of the same sign.
SignedGraft doubled(const SignedGraft& sg);

enum class PackStatus { kOk, kNoJoin };

struct PackingResult {
  PackStatus status = PackStatus::kOk;
  std::optional<int> tau;
  int nu = 0;
  Cover cover;
  std::vector<EdgeSet> packing;
  bool packs = false;
};

/// tau and nu together; the certificate is rechecked before returning and a
/// failure throws CertificateError.
PackingResult packs(const SignedGraft& sg, Oracle oracle = Oracle::kDefault);
/// Independent check: the cover meets every odd T-join oddly and is a
/// signature or T-cut, the packing is a family of disjoint odd T-joins, and
/// the reported numbers match the witnesses.
bool check_packing(const SignedGraft& sg, const PackingResult& r);

/// A smallest signature (least bitmask among ties).
EdgeSet min_signature(const SignedGraft& sg);
/// A smallest T-cut, or nullopt when T is empty.
std::optional<EdgeSet> min_tcut(const SignedGraft& sg);

struct MixedPacking {
  /// Min st-cut and min signature sizes.
  int k = 0;
  int ell = 0;
  std::vector<EdgeSet> odd_joins;
  std::vector<EdgeSet> even_paths;
  /// Set instead of the packing when an obstruction minor was found.
  std::optional<ObstructionScan> refusal;
};

/// k pairwise disjoint sets, ell odd st-joins and k - ell even st-paths, by
/// adding k - ell odd loops at s, packing, and stripping the loops. Throws
/// PreconditionError unless |T| = 2, the graft is Eulerian, k >= ell and the
/// obstruction scan is conclusive.
MixedPacking mixed_packing(const SignedGraft& sg, std::uint64_t budget = kDefaultMinorBudget);

}  // namespace oddjoin
