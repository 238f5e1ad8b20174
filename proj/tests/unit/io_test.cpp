#include <doctest.h>

#include <cstdlib>

#include "io.hpp"
#include "oddjoin/obstructions.hpp"
#include "oddjoin/packing.hpp"

using namespace oddjoin;
using io::json;

TEST_SUITE("io") {

TEST_CASE("fixtures load from the fixture directory") {
  REQUIRE(std::getenv("ODDJOIN_FIXTURES") != nullptr);
  const json k5 = io::read_json_file(io::resolve_fixture("k5tilde"));
  const SignedGraft sg = io::graft_from_json(k5);
  CHECK(graft_isomorphism(sg, build_k5tilde()).has_value());
  CHECK(k5.at("tau").get<int>() == tau(sg).value);
  CHECK(k5.at("nu").get<int>() == nu(sg).value);

  const json f7 = io::read_json_file(io::resolve_fixture("f7"));
  CHECK(io::graft_from_json(f7) == build_f7());
  CHECK(f7.at("fano_witness").get<std::vector<int>>() == f7_fano_witness());
}

TEST_CASE("graft JSON round-trips") {
  const SignedGraft f7 = build_f7();
  CHECK(io::graft_from_json(io::graft_to_json(f7)) == f7);
  const json bare = json::parse(R"({"n": 2, "edges": [[0, 1]]})");
  const SignedGraft g = io::graft_from_json(bare);
  CHECK(g.sigma().empty());
  CHECK(g.terminals().empty());
}

TEST_CASE("malformed payloads are input errors") {
  CHECK_THROWS_AS(io::graft_from_json(json::parse(R"({"n": 2, "edges": [[0, 3]]})")), InputError);
  CHECK_THROWS_AS(io::graft_from_json(json::parse(R"({"n": 2, "edges": [[0, 1]], "sigma": [0, 0]})")), InputError);
  CHECK_THROWS_AS(io::graft_from_json(json::parse(R"({"n": 2, "edges": [[0, 1]], "terminals": [0]})")), InputError);
  CHECK_THROWS_AS(io::graft_from_json(json::parse(R"({"edges": []})")), InputError);
  CHECK_THROWS_AS(io::clutter_from_json(json::parse(R"({"ground": 2, "sets": [[0], [0, 1]]})")), InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("minor witnesses replay after a JSON round-trip") {
  const SignedGraft k5 = build_k5tilde();
  const GraftMinorResult r = find_graft_minor(k5, k5);
  REQUIRE(r.witness.has_value());
  const GraftMinorWitness back = io::witness_from_json(io::witness_to_json(*r.witness));
  CHECK(check_graft_minor(k5, k5, back));
}

TEST_CASE("rationals print exactly") {
  CHECK(io::to_string(Rational(10, 3)) == "10/3");
  CHECK(io::nustar_to_json(nustar(build_k5tilde())).at("value") == "10/3");
}

}
