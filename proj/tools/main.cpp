#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "io.hpp"

using namespace oddjoin;
using io::json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitSkipped = 3;
constexpr int kExitCertificate = 4;

void emit(const json& j, const std::string& out = "") {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << j.dump(2) << '\n';
}

SignedGraft load_graft(const std::string& name) { return io::graft_from_json(io::read_json_file(io::resolve_fixture(name))); }

Oracle parse_oracle(const std::string& s) {
  if (s == "exhaustive") return Oracle::kExhaustive;
  if (s == "default") return Oracle::kDefault;
  throw InputError("unknown oracle '" + s + "'");
}

SignedGraft minor_target(const std::string& name) {
  if (name == "k5t") return build_k5tilde();
  if (name == "f7") return build_f7();
  return load_graft(name);
}

Clutter load_clutter(const std::string& name) {
  const json j = io::read_json_file(io::resolve_fixture(name));
  if (j.contains("ground")) return io::clutter_from_json(j);
  return from_signed_graft(io::graft_from_json(j));
}

Clutter clutter_target(const std::string& name) {
  if (const auto id = parse_obstruction(name)) return catalog(*id);
  return load_clutter(name);
}

json run_reduce(const std::string& kind, const json& in, const std::string& exclusion) {
  if (kind == "odd-minor") {
    const PackingResult r = reduce_odd_minor_circuits(io::graph_from_json(in));
    json out = io::packing_to_json(r);
    out["value"] = r.nu;
    return out;
  }
  if (kind == "tjoin4")
    return io::tjoin_packing_to_json(
        reduce_tjoin4(io::graph_from_json(in), io::set_from_json<VertexSet>(in.at("terminals"))));
  if (kind == "two-commodity") {
    const auto pairs = in.at("pairs").get<std::vector<std::vector<int>>>();
    if (pairs.size() != 2 || pairs[0].size() != 2 || pairs[1].size() != 2)
      throw InputError("\"pairs\" must be [[s1, t1], [s2, t2]]");
    return io::two_commodity_to_json(
        reduce_two_commodity(io::graph_from_json(in), pairs[0][0], pairs[0][1], pairs[1][0], pairs[1][1]));
  }
  if (kind == "plane-dual") {
    const SignedGraft sg = io::graft_from_json(in);
    std::optional<SignedGraft> excluded;
    if (!exclusion.empty()) excluded = load_graft(exclusion);
    return io::plane_dual_to_json(
        reduce_plane_dual(io::embedding_from_json(in), sg.sigma(), sg.terminals(), excluded ? &*excluded : nullptr));
  }
  if (kind == "cut-cover")
    return io::cut_cover_to_json(
        reduce_cut_cover(io::embedding_from_json(in), in.at("s").get<int>(), in.at("t").get<int>()));
  throw InputError("unknown reduction kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packing and covering odd T-joins in signed grafts"};
  app.require_subcommand(1);
  int code = 0;

  std::string graft_path;
  std::string oracle = "default";
  std::uint64_t budget = kDefaultMinorBudget;

  for (const char* name : {"tau", "nu", "packs"}) {
    auto* cmd = app.add_subcommand(name, std::string("Compute ") + name + " with a certificate");
    cmd->add_option("graft", graft_path, "Graft JSON file or fixture name")->required();
    cmd->add_option("--oracle", oracle, "default or exhaustive")->check(CLI::IsMember({"default", "exhaustive"}));
  }
  auto* nustar_cmd = app.add_subcommand("nustar", "Exact fractional packing number");
  nustar_cmd->add_option("graft", graft_path, "Graft JSON file or fixture name")->required();
  auto* mixed_cmd = app.add_subcommand("mixed-packing", "Odd st-joins and even st-paths");
  mixed_cmd->add_option("graft", graft_path, "Graft JSON file or fixture name")->required();
  mixed_cmd->add_option("--budget", budget, "Minor search budget in splits");

  std::string target;
  std::string replay_path;
  auto* minor_cmd = app.add_subcommand("minor", "Search for a graft minor");
  minor_cmd->add_option("graft", graft_path, "Host graft")->required();
  minor_cmd->add_option("--target", target, "k5t, f7 or a graft file")->required();
  minor_cmd->add_option("--budget", budget, "Minor search budget in splits");
  minor_cmd->add_option("--replay", replay_path, "Check a witness instead of searching");
  auto* scan_cmd = app.add_subcommand("scan", "Look for K5~ and F7 minors");
  scan_cmd->add_option("graft", graft_path, "Host graft")->required();
  scan_cmd->add_option("--budget", budget, "Minor search budget in splits");

  auto* clutter_cmd = app.add_subcommand("clutter", "Clutter operations");
  clutter_cmd->require_subcommand(1);
  std::string clutter_path;
  std::map<std::string, CLI::App*> clutter_ops;
  for (const char* op : {"blocker", "binary", "eulerian", "minor", "cycling", "idealness"}) {
    auto* sub = clutter_cmd->add_subcommand(op);
    sub->add_option("clutter", clutter_path, "Clutter JSON, or a graft giving its minimal odd T-joins")->required();
    clutter_ops[op] = sub;
  }
  clutter_ops["minor"]->add_option("--target", target, "L7, O5, bO5, P10 or a clutter file")->required();

  std::string kind;
  std::string in_path;
  auto* reduce_cmd = app.add_subcommand("reduce", "Solve a problem through its signed graft");
  reduce_cmd->add_option("--kind", kind, "Reduction")
      ->required()
      ->check(CLI::IsMember({"odd-minor", "tjoin4", "two-commodity", "plane-dual", "cut-cover"}));
  reduce_cmd->add_option("--in", in_path, "Payload JSON")->required();
  std::string exclusion;
  reduce_cmd->add_option("--exclude", exclusion, "Graft whose minors plane-dual rejects when |T| >= 4");

  auto* topo_cmd = app.add_subcommand("topo", "Evaluate the topological class predicates");
  topo_cmd->add_option("graft", graft_path, "Graft JSON, with \"faces\" for the plane class")->required();

  VerifyOptions vopts;
  vopts.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::string t_mode = "both";
  std::string out_path;
  int random_count = 0;
  std::uint64_t seed = 1;
  bool conjectures = false;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check of the packing theorem");
  verify_cmd->add_option("--min-n", vopts.bounds.n_min, "Least vertex count");
  verify_cmd->add_option("--max-n", vopts.bounds.n_max, "Greatest vertex count");
  verify_cmd->add_option("--min-m", vopts.bounds.m_min, "Least edge count");
  verify_cmd->add_option("--max-m", vopts.bounds.m_max, "Greatest edge count");
  verify_cmd->add_option("--t-mode", t_mode, "empty, pair or both")->check(CLI::IsMember({"empty", "pair", "both"}));
  verify_cmd->add_option("--jobs", vopts.jobs, "Worker threads");
  verify_cmd->add_option("--budget", vopts.budget, "Minor search budget in splits");
  verify_cmd->add_option("--out", out_path, "Write the report here");
  verify_cmd->add_option("--replay", replay_path, "Recompute one report row and compare");
  verify_cmd->add_flag("--log", vopts.log, "Keep a row per instance");
  verify_cmd->add_option("--random", random_count, "Draw this many grafts with exactly max-n vertices and max-m edges");
  verify_cmd->add_option("--seed", seed, "Seed for --random");
  verify_cmd->add_flag("--conjectures", conjectures, "Check the cycling and idealness conjectures instead");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("tau")) {
      emit(io::tau_to_json(tau(load_graft(graft_path), parse_oracle(oracle))));
    } else if (app.got_subcommand("nu")) {
      emit(io::nu_to_json(nu(load_graft(graft_path), parse_oracle(oracle))));
    } else if (app.got_subcommand("packs")) {
      emit(io::packing_to_json(packs(load_graft(graft_path), parse_oracle(oracle))));
    } else if (app.got_subcommand("nustar")) {
      emit(io::nustar_to_json(nustar(load_graft(graft_path))));
    } else if (app.got_subcommand("mixed-packing")) {
      const MixedPacking r = mixed_packing(load_graft(graft_path), budget);
      emit(io::mixed_to_json(r));
    } else if (minor_cmd->parsed()) {
      const SignedGraft host = load_graft(graft_path);
      const SignedGraft tgt = minor_target(target);
      if (!replay_path.empty()) {
        json w = io::read_json_file(replay_path);
        if (w.contains("witness")) w = w.at("witness");
        const bool valid = check_graft_minor(host, tgt, io::witness_from_json(w));
        emit({{"valid", valid}});
        code = valid ? 0 : kExitCounterexample;
      } else {
        const GraftMinorResult r = find_graft_minor(host, tgt, budget);
        emit(io::minor_result_to_json(r));
        if (r.status == MinorStatus::kInconclusive) code = kExitSkipped;
      }
    } else if (scan_cmd->parsed()) {
      const ObstructionScan s = obstruction_scan(load_graft(graft_path), budget);
      emit(io::scan_to_json(s));
      if (s.outcome == ScanOutcome::kInconclusive) code = kExitSkipped;
    } else if (clutter_cmd->parsed()) {
      const Clutter c = load_clutter(clutter_path);
      if (clutter_ops["blocker"]->parsed()) {
        emit({{"value", io::clutter_to_json(blocker(c))}});
      } else if (clutter_ops["binary"]->parsed()) {
        emit({{"value", is_binary(c)}});
      } else if (clutter_ops["eulerian"]->parsed()) {
        emit({{"value", is_eulerian_clutter(c)}});
      } else if (clutter_ops["minor"]->parsed()) {
        const auto w = find_clutter_minor(c, clutter_target(target));
        emit({{"found", w.has_value()}, {"witness", w ? io::clutter_witness_to_json(*w) : json(nullptr)}});
      } else {
        const bool cycling = clutter_ops["cycling"]->parsed();
        const ConjectureReport r = cycling ? cycling_check(c) : idealness_check(c);
        emit(io::conjecture_to_json(r));
        if (!r.consistent) code = kExitCounterexample;
      }
    } else if (reduce_cmd->parsed()) {
      emit(run_reduce(kind, io::read_json_file(in_path), exclusion));
    } else if (topo_cmd->parsed()) {
      const json j = io::read_json_file(io::resolve_fixture(graft_path));
      const SignedGraft sg = io::graft_from_json(j);
      if (j.contains("faces")) {
        const PlaneEmbedding emb = io::embedding_from_json(j);
        emit(io::topo_to_json(topo_class_predicates(sg, &emb)));
      } else {
        emit(io::topo_to_json(topo_class_predicates(sg)));
      }
    } else if (verify_cmd->parsed()) {
      vopts.bounds.t_mode = parse_t_mode(t_mode);
      if (!replay_path.empty()) {
        const InstanceRow recorded = io::row_from_json(io::read_json_file(replay_path));
        const InstanceRow fresh = evaluate_instance(recorded.graft, vopts.budget);
        const bool match = fresh == recorded;
        emit({{"match", match}, {"row", io::row_to_json(fresh)}});
        code = match ? 0 : kExitCounterexample;
      } else if (conjectures) {
        const ConjectureSummary s = verify_conjectures(vopts);
        emit(io::conjecture_summary_to_json(s), out_path);
        code = s.inconsistent.empty() ? 0 : kExitCounterexample;
      } else {
        const VerificationReport r =
            random_count > 0
                ? verify_instances(generate_random(vopts.bounds.n_max, vopts.bounds.m_max, vopts.bounds.t_mode,
                                                   seed, random_count),
                                   vopts)
                : verify_main_theorem(vopts);
        emit(io::report_to_json(r), out_path);
        if (!out_path.empty())
          std::cerr << r.generated << " grafts, " << r.counterexamples.size() << " counterexamples, " << r.skipped
                    << " skipped\n";
        code = r.exit_code();
      }
    }
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitInput;
  }
  return code;
}
