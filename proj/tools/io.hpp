#pragma once

#include <string>

#include <json.hpp>

#include "oddjoin/clutter.hpp"
#include "oddjoin/obstructions.hpp"
#include "oddjoin/omega.hpp"
#include "oddjoin/packing.hpp"
#include "oddjoin/plane.hpp"
#include "oddjoin/reductions.hpp"
#include "oddjoin/verify.hpp"

namespace oddjoin::io {

using nlohmann::json;

template <class Tag>
json to_json(IdSet<Tag> s) {
  return s.to_vector();
}

/// Throws InputError on ids outside 0..63 or repeats.
template <class Set>
Set set_from_json(const json& j) {
  Set out;
  for (const json& x : j) {
    const int id = x.get<int>();
    if (id < 0 || id >= Set::kCapacity) throw InputError("id " + std::to_string(id) + " out of range");
    if (out.contains(id)) throw InputError("id " + std::to_string(id) + " listed twice");
    out.insert(id);
  }
  return out;
}

template <class Tag>
json to_json(const std::vector<IdSet<Tag>>& family) {
  json out = json::array();
  for (IdSet<Tag> s : family) out.push_back(to_json(s));
  return out;
}

std::string to_string(const Rational& q);

/// {"n", "edges": [[u, v], ...]}
Multigraph graph_from_json(const json& j);
json graph_to_json(const Multigraph& g);
/// Graph fields plus "sigma" and "terminals", both optional on input.
SignedGraft graft_from_json(const json& j);
json graft_to_json(const SignedGraft& sg);
/// Graph fields plus "faces": [[edge ids], ...].
PlaneEmbedding embedding_from_json(const json& j);
json embedding_to_json(const PlaneEmbedding& emb);
/// {"ground", "sets": [[elements], ...]}
Clutter clutter_from_json(const json& j);
json clutter_to_json(const Clutter& c);

json tau_to_json(const TauResult& r);
json nu_to_json(const NuResult& r);
json nustar_to_json(const NustarResult& r);
json packing_to_json(const PackingResult& r);
json mixed_to_json(const MixedPacking& r);

json isomorphism_to_json(const GraftIsomorphism& iso);
GraftIsomorphism isomorphism_from_json(const json& j);
json witness_to_json(const GraftMinorWitness& w);
GraftMinorWitness witness_from_json(const json& j);
json minor_result_to_json(const GraftMinorResult& r);
json scan_to_json(const ObstructionScan& s);
json clutter_witness_to_json(const ClutterMinorWitness& w);
json conjecture_to_json(const ConjectureReport& r);

json tjoin_packing_to_json(const TJoinPacking& r);
json two_commodity_to_json(const TwoCommodity& r);
json plane_dual_to_json(const PlaneDual& r);
json cut_cover_to_json(const CutCover& r);
json topo_to_json(const TopoClasses& r);

json row_to_json(const InstanceRow& row);
/// Reads back the graft and recorded outcome of a row.
InstanceRow row_from_json(const json& j);
/// Deterministic apart from "seconds".
json report_to_json(const VerificationReport& r);
json conjecture_summary_to_json(const ConjectureSummary& s);

json read_json_file(const std::string& path);
/// `name` as a path when it exists, else `name`.json under the fixture
/// directory ($ODDJOIN_FIXTURES, then the build-time default).
std::string resolve_fixture(const std::string& name);

}  // namespace oddjoin::io
