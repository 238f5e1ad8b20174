#include "oddjoin/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "oddjoin/packing.hpp"

namespace oddjoin {

namespace {

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, int jobs, Fn fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SignedGraft f7_minus_terminal_edge() { return delete_edge(build_f7(), f7_terminal_edge()); }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kNonEulerian: return "non-eulerian";
    case Verdict::kTooManyTerminals: return "too-many-terminals";
    case Verdict::kNoJoin: return "no-join";
    case Verdict::kPacks: return "packs";
    case Verdict::kObstructed: return "obstructed";
    case Verdict::kSkipped: return "skipped";
    case Verdict::kCounterexample: return "counterexample";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::kNonEulerian, Verdict::kTooManyTerminals, Verdict::kNoJoin, Verdict::kPacks,
                    Verdict::kObstructed, Verdict::kSkipped, Verdict::kCounterexample})
    if (to_string(v) == s) return v;
  throw InputError("unknown verdict '" + s + "'");
}

bool InstanceRow::operator==(const InstanceRow& o) const {
  return graft == o.graft && verdict == o.verdict && eulerian == o.eulerian && tau == o.tau && nu == o.nu &&
         scan == o.scan && cover == o.cover && packing == o.packing && witness.has_value() == o.witness.has_value();
}

InstanceRow evaluate_instance(const SignedGraft& sg, std::uint64_t budget) {
  InstanceRow row;
  row.graft = sg;
  row.eulerian = is_eulerian(sg);
  if (sg.terminals().size() > 2) {
    row.verdict = Verdict::kTooManyTerminals;
    return row;
  }
  const PackingResult p = packs(sg);
  row.tau = p.tau;
  row.nu = p.nu;
  row.cover = p.cover.edges;
  row.packing = p.packing;
  const ObstructionScan scan = obstruction_scan(sg, budget, 0);
  row.scan = scan.outcome;
  row.witness = scan.witness;
  if (!row.eulerian) {
    row.verdict = Verdict::kNonEulerian;
  } else if (p.status == PackStatus::kNoJoin) {
    row.verdict = Verdict::kNoJoin;
  } else if (p.packs) {
    row.verdict = Verdict::kPacks;
  } else if (scan.outcome == ScanOutcome::kInconclusive) {
    row.verdict = Verdict::kSkipped;
  } else if (scan.outcome != ScanOutcome::kNone) {
    row.verdict = Verdict::kObstructed;
  } else {
    row.verdict = Verdict::kCounterexample;
  }
  return row;
}

int VerificationReport::exit_code() const {
  if (!counterexamples.empty()) return 2;
  if (skipped > 0) return 3;
  return 0;
}

VerificationReport verify_instances(const std::vector<SignedGraft>& grafts, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.bounds = opts.bounds;
  r.generated = grafts.size();
  const std::vector<InstanceRow> rows = parallel_map<InstanceRow>(
      grafts.size(), opts.jobs, [&](std::size_t i) { return evaluate_instance(grafts[i], opts.budget); });
  for (const InstanceRow& row : rows) {
    if (row.eulerian && row.verdict != Verdict::kTooManyTerminals) ++r.eulerian;
    switch (row.verdict) {
      case Verdict::kNoJoin: ++r.no_join; break;
      case Verdict::kPacks: ++r.packed; break;
      case Verdict::kObstructed: ++r.obstructed; break;
      case Verdict::kSkipped:
        ++r.skipped;
        r.skipped_rows.push_back(row);
        break;
      case Verdict::kCounterexample: r.counterexamples.push_back(row); break;
      default: break;
    }
    if (row.eulerian && row.tau && row.scan == ScanOutcome::kNone) ++r.obstruction_free;
  }
  if (opts.log) r.rows = rows;
  r.controls.push_back(evaluate_instance(SignedGraft(complete_graph(4), complete_graph(4).all_edges(), {}), opts.budget));
  r.controls.push_back(evaluate_instance(f7_minus_terminal_edge(), opts.budget));
  r.seconds = since(start);
  return r;
}

VerificationReport verify_main_theorem(const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = verify_instances(generate(opts.bounds), opts);
  r.seconds = since(start);
  return r;
}

ConjectureRow check_conjectures(const SignedGraft& sg, std::uint64_t budget) {
  ConjectureRow row;
  row.graft = sg;
  const Clutter c = from_signed_graft(sg);
  row.idealness = idealness_check(c, sg.num_edges());
  row.cycling = cycling_check(c, sg.num_edges());
  row.consistent = row.idealness.consistent && row.cycling->consistent;
  if (sg.terminals().size() <= 2 && !c.empty() && obstruction_scan(sg, budget, 0).outcome == ScanOutcome::kNone) {
    const NustarResult ns = nustar(sg);
    const auto t = tau(sg).value;
    bool ok = ns.doubling_value.has_value() && ns.value == Rational(*t) && *ns.doubling_value == ns.value;
    std::vector<Rational> load(static_cast<std::size_t>(sg.num_edges()));
    Rational total;
    for (const auto& [join, weight] : ns.half_integral) {
      ok = ok && (weight == Rational(1, 2) || weight == Rational(1)) && is_odd_tjoin(sg, join);
      join.for_each([&](EdgeId e) { load[static_cast<std::size_t>(e)] += weight; });
      total += weight;
    }
    for (const Rational& l : load) ok = ok && l <= 1;
    row.half_integral = ok && total == ns.value;
    row.consistent = row.consistent && *row.half_integral;
  }
  return row;
}

ConjectureSummary verify_conjectures(const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SignedGraft> grafts = generate(opts.bounds);
  const std::vector<ConjectureRow> rows = parallel_map<ConjectureRow>(
      grafts.size(), opts.jobs, [&](std::size_t i) { return check_conjectures(grafts[i], opts.budget); });
  ConjectureSummary s;
  for (const ConjectureRow& row : rows) {
    ++s.checked;
    if (row.idealness.hypothesis) ++s.idealness_hypothesis;
    if (row.cycling && row.cycling->hypothesis) ++s.cycling_hypothesis;
    if (!row.idealness.excluded_minors.empty()) ++s.excluded;
    if (row.half_integral) ++s.half_integral_checked;
    if (!row.consistent) s.inconsistent.push_back(row);
  }
  s.seconds = since(start);
  return s;
}

}  // namespace oddjoin
