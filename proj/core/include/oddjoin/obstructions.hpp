#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddjoin/clutter.hpp"
#include "oddjoin/signed_graft.hpp"

namespace oddjoin {

/// (K5, E(K5), {}).
SignedGraft build_k5tilde();

/// The frozen F7 fixture: terminals 0 and 1 joined by edge 0, and the pairs
/// 0-2, 1-3, 2-3 each doubled with one odd edge per pair.
SignedGraft build_f7();
/// Edge of build_f7() -> point of the Fano plane (element of catalog(kL7)).
std::vector<int> f7_fano_witness();
/// The unique edge joining the two terminals of build_f7().
EdgeId f7_terminal_edge();

/// Vertex and edge bijections from `a` onto `b` after resigning `a` on
/// `resign_shore`: sigma(b) = edge_map(sigma(a) ^ cut_a(resign_shore)).
struct GraftIsomorphism {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
  VertexSet resign_shore;
};

/// Isomorphism up to resigning that sends terminals to terminals.
std::optional<GraftIsomorphism> graft_isomorphism(const SignedGraft& a, const SignedGraft& b);
bool check_graft_isomorphism(const SignedGraft& a, const SignedGraft& b, const GraftIsomorphism& iso);

/// Removes isolated non-terminal vertices. `kept`, when given, receives the
/// surviving old vertex ids in order.
SignedGraft strip_isolated(const SignedGraft& sg, std::vector<VertexId>* kept = nullptr);

enum class MinorStatus { kFound, kNotFound, kInconclusive };
std::string to_string(MinorStatus s);

/// Delete, resign on the least legal shore, contract, strip isolated
/// non-terminals, then map onto the target by `iso`.
struct GraftMinorWitness {
  EdgeSet deleted;
  EdgeSet contracted;
  VertexSet resign_shore;
  GraftIsomorphism iso;
};

struct GraftMinorResult {
  MinorStatus status = MinorStatus::kNotFound;
  std::optional<GraftMinorWitness> witness;
  std::uint64_t splits_examined = 0;
};

/// Covers every host with at most 14 edges against either obstruction.
inline constexpr std::uint64_t kDefaultMinorBudget = 2'000'000;

/// Exhaustive search over (kept, deleted, contracted) splits of the edges.
/// Splits whose contraction set holds a circuit are skipped: such a minor is
/// also reached by deleting the circuit-closing edges instead. Reports
/// kInconclusive rather than kNotFound once `budget` splits are exceeded.
GraftMinorResult find_graft_minor(const SignedGraft& sg, const SignedGraft& target,
                                  std::uint64_t budget = kDefaultMinorBudget);
/// Replays `w` from scratch.
bool check_graft_minor(const SignedGraft& sg, const SignedGraft& target, const GraftMinorWitness& w);

enum class ScanOutcome { kNone, kK5Tilde, kF7, kInconclusive };
std::string to_string(ScanOutcome o);

struct ObstructionScan {
  ScanOutcome outcome = ScanOutcome::kNone;
  MinorStatus k5tilde = MinorStatus::kNotFound;
  MinorStatus f7 = MinorStatus::kNotFound;
  std::optional<GraftMinorWitness> witness;
  /// Clutter-level O5/L7 detection ran and agreed with the graft-level result.
  bool clutter_checked = false;
  bool clutter_agrees = true;
};

/// Searches for K5~ then F7. For hosts with at most `clutter_check_edges`
/// edges both searches always run and are compared with O5/L7 detection on
/// the clutter of minimal odd T-joins.
ObstructionScan obstruction_scan(const SignedGraft& sg, std::uint64_t budget = kDefaultMinorBudget,
                                 int clutter_check_edges = 12);

}  // namespace oddjoin
