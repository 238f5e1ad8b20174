#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddjoin/clutter.hpp"
#include "oddjoin/enumerate.hpp"
#include "oddjoin/obstructions.hpp"

namespace oddjoin {

enum class Verdict {
  kNonEulerian,
  kTooManyTerminals,
  kNoJoin,
  kPacks,
  kObstructed,
  kSkipped,
  kCounterexample,
};
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct InstanceRow {
  SignedGraft graft;
  Verdict verdict = Verdict::kNoJoin;
  bool eulerian = false;
  std::optional<int> tau;
  int nu = 0;
  ScanOutcome scan = ScanOutcome::kNone;
  /// Cover and packing behind tau and nu.
  EdgeSet cover;
  std::vector<EdgeSet> packing;
  std::optional<GraftMinorWitness> witness;

  bool operator==(const InstanceRow&) const;
};

/// Classifies one graft against the main theorem: non-Eulerian grafts, more
/// than two terminals and grafts without odd T-joins are exempt; otherwise
/// the graft must pack or hold an obstruction minor.
InstanceRow evaluate_instance(const SignedGraft& sg, std::uint64_t budget = kDefaultMinorBudget);

struct VerifyOptions {
  GenerateBounds bounds;
  int jobs = 1;
  std::uint64_t budget = kDefaultMinorBudget;
  /// Keep a row for every instance.
  bool log = false;
};

struct VerificationReport {
  GenerateBounds bounds;
  std::size_t generated = 0;
  std::size_t eulerian = 0;
  std::size_t no_join = 0;
  std::size_t obstruction_free = 0;
  std::size_t packed = 0;
  std::size_t obstructed = 0;
  std::size_t skipped = 0;
  std::vector<InstanceRow> counterexamples;
  std::vector<InstanceRow> skipped_rows;
  /// (K4, E, {}) and F7 minus its terminal edge, evaluated on their own.
  std::vector<InstanceRow> controls;
  std::vector<InstanceRow> rows;
  double seconds = 0;

  /// 0 consistent, 2 counterexample, 3 budget skips.
  int exit_code() const;
};

VerificationReport verify_main_theorem(const VerifyOptions& opts);
/// Same bookkeeping over a fixed list, e.g. from generate_random.
VerificationReport verify_instances(const std::vector<SignedGraft>& grafts, const VerifyOptions& opts);

struct ConjectureRow {
  SignedGraft graft;
  ConjectureReport idealness;
  std::optional<ConjectureReport> cycling;
  /// Doubling weights lie in {1/2, 1}, cover every edge at most once and sum
  /// to tau. Only checked when the graft scan finds no obstruction.
  std::optional<bool> half_integral;
  bool consistent = true;
};

struct ConjectureSummary {
  std::size_t checked = 0;
  std::size_t idealness_hypothesis = 0;
  std::size_t cycling_hypothesis = 0;
  /// Instances holding an excluded clutter minor.
  std::size_t excluded = 0;
  std::size_t half_integral_checked = 0;
  std::vector<ConjectureRow> inconsistent;
  double seconds = 0;
};

ConjectureRow check_conjectures(const SignedGraft& sg, std::uint64_t budget = kDefaultMinorBudget);
ConjectureSummary verify_conjectures(const VerifyOptions& opts);

}  // namespace oddjoin
