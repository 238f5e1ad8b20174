#include "io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace oddjoin::io {

namespace {

json family_with_weights(const std::vector<std::pair<EdgeSet, Rational>>& weighted) {
  json out = json::array();
  for (const auto& [s, w] : weighted) out.push_back({{"join", to_json(s)}, {"weight", to_string(w)}});
  return out;
}

json rationals(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const Rational& x : xs) out.push_back(to_string(x));
  return out;
}

json cover_to_json(const Cover& c) { return {{"edges", to_json(c.edges)}, {"kind", oddjoin::to_string(c.kind)}}; }

ScanOutcome parse_scan(const std::string& s) {
  for (ScanOutcome o : {ScanOutcome::kNone, ScanOutcome::kK5Tilde, ScanOutcome::kF7, ScanOutcome::kInconclusive})
    if (oddjoin::to_string(o) == s) return o;
  throw InputError("unknown scan outcome '" + s + "'");
}

json bounds_to_json(const GenerateBounds& b) {
  return {{"n_min", b.n_min}, {"n_max", b.n_max}, {"m_min", b.m_min}, {"m_max", b.m_max},
          {"t_mode", oddjoin::to_string(b.t_mode)}};
}

json rows_to_json(const std::vector<InstanceRow>& rows) {
  json out = json::array();
  for (const InstanceRow& r : rows) out.push_back(row_to_json(r));
  return out;
}

}  // namespace

std::string to_string(const Rational& q) { return q.str(); }

Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw InputError("graph needs \"n\" and \"edges\"");
  const int n = j.at("n").get<int>();
  if (n < 0) throw InputError("\"n\" must be non-negative");
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge is a pair [u, v]");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Multigraph(n, std::move(edges));
}

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

SignedGraft graft_from_json(const json& j) {
  Multigraph g = graph_from_json(j);
  const EdgeSet sigma = j.contains("sigma") ? set_from_json<EdgeSet>(j.at("sigma")) : EdgeSet{};
  const VertexSet ts = j.contains("terminals") ? set_from_json<VertexSet>(j.at("terminals")) : VertexSet{};
  return SignedGraft(std::move(g), sigma, ts);
}

json graft_to_json(const SignedGraft& sg) {
  json out = graph_to_json(sg.graph());
  out["sigma"] = to_json(sg.sigma());
  out["terminals"] = to_json(sg.terminals());
  return out;
}

PlaneEmbedding embedding_from_json(const json& j) {
  PlaneEmbedding emb{graph_from_json(j), {}};
  if (!j.contains("faces")) throw InputError("plane payload needs \"faces\"");
  for (const json& f : j.at("faces")) emb.faces.push_back(f.get<std::vector<EdgeId>>());
  validate_embedding(emb);
  return emb;
}

json embedding_to_json(const PlaneEmbedding& emb) {
  json out = graph_to_json(emb.graph);
  out["faces"] = emb.faces;
  return out;
}

Clutter clutter_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("sets"))
    throw InputError("clutter needs \"ground\" and \"sets\"");
  std::vector<ElementSet> sets;
  for (const json& s : j.at("sets")) sets.push_back(set_from_json<ElementSet>(s));
  return Clutter(j.at("ground").get<int>(), std::move(sets));
}

json clutter_to_json(const Clutter& c) { return {{"ground", c.ground()}, {"sets", to_json(c.sets())}}; }

json tau_to_json(const TauResult& r) {
  if (!r.value) return {{"value", nullptr}, {"certificate", {{"reason", "no odd T-join"}}}};
  return {{"value", *r.value}, {"certificate", {{"cover", cover_to_json(r.cover)}}}};
}

json nu_to_json(const NuResult& r) { return {{"value", r.value}, {"certificate", {{"packing", to_json(r.packing)}}}}; }

json nustar_to_json(const NustarResult& r) {
  std::vector<std::pair<EdgeSet, Rational>> weighted;
  for (std::size_t i = 0; i < r.joins.size(); ++i)
    if (r.lp.weights[i] != 0) weighted.emplace_back(r.joins[i], r.lp.weights[i]);
  json cert = {{"weights", family_with_weights(weighted)}, {"dual", rationals(r.lp.cover)}};
  if (r.doubling_value)
    cert["doubling"] = {{"value", to_string(*r.doubling_value)}, {"weights", family_with_weights(r.half_integral)}};
  return {{"value", to_string(r.value)}, {"certificate", cert}};
}

json packing_to_json(const PackingResult& r) {
  if (r.status == PackStatus::kNoJoin)
    return {{"value", nullptr}, {"certificate", {{"reason", "no odd T-join"}, {"tau", nullptr}, {"nu", 0}}}};
  return {{"value", r.packs},
          {"certificate",
           {{"tau", *r.tau}, {"nu", r.nu}, {"cover", cover_to_json(r.cover)}, {"packing", to_json(r.packing)}}}};
}

json mixed_to_json(const MixedPacking& r) {
  json cert = {{"k", r.k}, {"ell", r.ell}};
  if (r.refusal) {
    cert["refusal"] = scan_to_json(*r.refusal);
    return {{"value", nullptr}, {"certificate", cert}};
  }
  cert["odd_joins"] = to_json(r.odd_joins);
  cert["even_paths"] = to_json(r.even_paths);
  return {{"value", r.k}, {"certificate", cert}};
}

json isomorphism_to_json(const GraftIsomorphism& iso) {
  return {{"vertex_map", iso.vertex_map}, {"edge_map", iso.edge_map}, {"resign_shore", to_json(iso.resign_shore)}};
}

GraftIsomorphism isomorphism_from_json(const json& j) {
  return {j.at("vertex_map").get<std::vector<VertexId>>(), j.at("edge_map").get<std::vector<EdgeId>>(),
          set_from_json<VertexSet>(j.at("resign_shore"))};
}

json witness_to_json(const GraftMinorWitness& w) {
  return {{"delete", to_json(w.deleted)},
          {"resign_shore", to_json(w.resign_shore)},
          {"contract", to_json(w.contracted)},
          {"isomorphism", isomorphism_to_json(w.iso)}};
}

GraftMinorWitness witness_from_json(const json& j) {
  return {set_from_json<EdgeSet>(j.at("delete")), set_from_json<EdgeSet>(j.at("contract")),
          set_from_json<VertexSet>(j.at("resign_shore")), isomorphism_from_json(j.at("isomorphism"))};
}

json minor_result_to_json(const GraftMinorResult& r) {
  json out = {{"found", r.status == MinorStatus::kFound},
              {"status", oddjoin::to_string(r.status)},
              {"splits_examined", r.splits_examined}};
  out["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  return out;
}

json scan_to_json(const ObstructionScan& s) {
  json out = {{"outcome", oddjoin::to_string(s.outcome)},
              {"k5tilde", oddjoin::to_string(s.k5tilde)},
              {"f7", oddjoin::to_string(s.f7)}};
  out["witness"] = s.witness ? witness_to_json(*s.witness) : json(nullptr);
  if (s.clutter_checked) out["clutter_agrees"] = s.clutter_agrees;
  return out;
}

json clutter_witness_to_json(const ClutterMinorWitness& w) {
  return {{"delete", to_json(w.deleted)}, {"contract", to_json(w.contracted)}, {"mapping", w.mapping}};
}

json conjecture_to_json(const ConjectureReport& r) {
  json minors = json::array();
  for (Obstruction o : r.excluded_minors) minors.push_back(oddjoin::to_string(o));
  return {{"binary", r.binary},         {"eulerian", r.eulerian},   {"excluded_minors", minors},
          {"hypothesis", r.hypothesis}, {"tau", r.tau},             {"nu", r.nu},
          {"nustar", to_string(r.nustar)}, {"conclusion", r.conclusion}, {"consistent", r.consistent}};
}

json tjoin_packing_to_json(const TJoinPacking& r) {
  return {{"value", r.max_joins()},
          {"certificate",
           {{"joins", to_json(r.joins)},
            {"tcut", to_json(r.tcut)},
            {"shore", to_json(r.shore)},
            {"min_cut", r.min_cut()},
            {"graft", graft_to_json(r.graft)}}}};
}

json two_commodity_to_json(const TwoCommodity& r) {
  return {{"value", r.max_paths()},
          {"certificate",
           {{"paths", to_json(r.paths)},
            {"disconnecting", to_json(r.disconnecting)},
            {"min_disconnecting", r.min_disconnecting()},
            {"graft", graft_to_json(r.graft)}}}};
}

json plane_dual_to_json(const PlaneDual& r) {
  json cert = {{"signatures", to_json(r.signatures)},
               {"cover", to_json(r.certificate)},
               {"cover_kind", r.certificate_is_cycle ? "odd cycle" : "odd T-join"},
               {"gamma", to_json(r.gamma)},
               {"faces", {r.s_face, r.t_face}},
               {"claims_checked", r.claims_checked},
               {"exclusion_unchecked", r.exclusion_unchecked},
               {"dual", graft_to_json(r.dual)}};
  cert["shortest_odd_circuit"] = r.shortest_odd_circuit ? json(*r.shortest_odd_circuit) : json(nullptr);
  cert["shortest_odd_tjoin"] = r.shortest_odd_tjoin ? json(*r.shortest_odd_tjoin) : json(nullptr);
  return {{"value", static_cast<int>(r.signatures.size())}, {"certificate", cert}};
}

json cut_cover_to_json(const CutCover& r) {
  json cert = {{"cuts", to_json(r.cuts)}, {"shores", to_json(r.shores)}, {"identified", graph_to_json(r.identified)}};
  cert["colouring"] = r.colouring ? json(*r.colouring) : json(nullptr);
  return {{"value", r.k}, {"certificate", cert}};
}

json topo_to_json(const TopoClasses& r) {
  const auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  return {{"blocking_vertex", r.blocking_vertex},
          {"blocking_pair", opt(r.blocking_pair)},
          {"connected_joins", opt(r.connected_joins)},
          {"plane_two_odd_faces", opt(r.plane_two_odd_faces)}};
}

json row_to_json(const InstanceRow& row) {
  json out = {{"graft", graft_to_json(row.graft)},
              {"verdict", oddjoin::to_string(row.verdict)},
              {"eulerian", row.eulerian},
              {"nu", row.nu},
              {"scan", oddjoin::to_string(row.scan)},
              {"cover", to_json(row.cover)},
              {"packing", to_json(row.packing)}};
  out["tau"] = row.tau ? json(*row.tau) : json(nullptr);
  out["witness"] = row.witness ? witness_to_json(*row.witness) : json(nullptr);
  return out;
}

InstanceRow row_from_json(const json& j) {
  InstanceRow row;
  row.graft = graft_from_json(j.at("graft"));
  row.verdict = parse_verdict(j.at("verdict").get<std::string>());
  row.eulerian = j.value("eulerian", false);
  if (j.contains("tau") && !j.at("tau").is_null()) row.tau = j.at("tau").get<int>();
  row.nu = j.value("nu", 0);
  row.scan = parse_scan(j.value("scan", std::string("none")));
  if (j.contains("cover")) row.cover = set_from_json<EdgeSet>(j.at("cover"));
  if (j.contains("packing"))
    for (const json& p : j.at("packing")) row.packing.push_back(set_from_json<EdgeSet>(p));
  if (j.contains("witness") && !j.at("witness").is_null()) row.witness = witness_from_json(j.at("witness"));
  return row;
}

json report_to_json(const VerificationReport& r) {
  json out = {{"bounds", bounds_to_json(r.bounds)},
              {"generated", r.generated},
              {"eulerian", r.eulerian},
              {"no_join", r.no_join},
              {"obstruction_free", r.obstruction_free},
              {"packed", r.packed},
              {"obstructed", r.obstructed},
              {"skipped", r.skipped},
              {"counterexamples", rows_to_json(r.counterexamples)},
              {"skipped_rows", rows_to_json(r.skipped_rows)},
              {"controls", rows_to_json(r.controls)},
              {"exit_code", r.exit_code()},
              {"seconds", r.seconds}};
  if (!r.rows.empty()) out["rows"] = rows_to_json(r.rows);
  return out;
}

json conjecture_summary_to_json(const ConjectureSummary& s) {
  json bad = json::array();
  for (const ConjectureRow& row : s.inconsistent) {
    json entry = {{"graft", graft_to_json(row.graft)}, {"idealness", conjecture_to_json(row.idealness)}};
    if (row.cycling) entry["cycling"] = conjecture_to_json(*row.cycling);
    entry["half_integral"] = row.half_integral ? json(*row.half_integral) : json(nullptr);
    bad.push_back(entry);
  }
  return {{"checked", s.checked},
          {"idealness_hypothesis", s.idealness_hypothesis},
          {"cycling_hypothesis", s.cycling_hypothesis},
          {"excluded", s.excluded},
          {"half_integral_checked", s.half_integral_checked},
          {"inconsistent", bad},
          {"seconds", s.seconds}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string resolve_fixture(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::exists(name)) return name;
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("ODDJOIN_FIXTURES")) dirs.emplace_back(env);
#ifdef ODDJOIN_FIXTURE_DIR
  dirs.emplace_back(ODDJOIN_FIXTURE_DIR);
#endif
  for (const fs::path& d : dirs) {
    const fs::path p = d / (name + ".json");
    if (fs::exists(p)) return p.string();
  }
  throw InputError("no file or fixture named '" + name + "'");
}

}  // namespace oddjoin::io
