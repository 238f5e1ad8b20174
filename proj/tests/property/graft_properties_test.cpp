#include <doctest.h>

#include <algorithm>
#include <random>

#include "oddjoin/enumerate.hpp"
#include "oddjoin/omega.hpp"
#include "oddjoin/packing.hpp"
#include "oracles.hpp"
#include "helpers.hpp"

using namespace oddjoin;

namespace {

std::vector<SignedGraft> random_grafts(int count, std::uint64_t seed, int max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<SignedGraft> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_edges));
    const TMode mode = rng() % 2 == 0 ? TMode::kEmpty : TMode::kPair;
    for (SignedGraft& sg : generate_random(n, m, mode, rng(), 1)) out.push_back(std::move(sg));
  }
  return out;
}

std::vector<SignedGraft> eulerian_grafts(int n_max, int m_max) {
  std::vector<SignedGraft> out;
  for (SignedGraft& sg : generate({.n_min = 1, .n_max = n_max, .m_min = 0, .m_max = m_max, .t_mode = TMode::kBoth}))
    if (is_eulerian(sg)) out.push_back(std::move(sg));
  return out;
}

}  // namespace

TEST_SUITE("resigning") {

TEST_CASE("resigning keeps the odd T-joins") {
  int cases = 0;
  for (const SignedGraft& sg : random_grafts(1200, 1, 8)) {
    const auto before = oracle::odd_tjoins(sg);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << sg.num_vertices()); ++u) {
      const VertexSet shore(u);
      if ((shore & sg.terminals()).size() % 2 == 1) {
        CHECK_THROWS_AS(resign(sg, shore), InvalidResignError);
        continue;
      }
      CHECK(oracle::odd_tjoins(resign(sg, shore)) == before);
      ++cases;
    }
  }
  MESSAGE(cases << " resignings");
  CHECK(cases >= 1000);
}

TEST_CASE("canonical signature is the least resigning") {
  for (const SignedGraft& sg : random_grafts(1000, 2, 8)) {
    std::uint64_t least = ~std::uint64_t{0};
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << sg.num_vertices()); ++u) {
      if ((VertexSet(u) & sg.terminals()).size() % 2 == 0)
        least = std::min(least, sg.sigma().bits() ^ oracle::cut(oracle::from(sg.graph()), u));
    }
    CHECK(canonical_signature(sg).bits() == least);
  }
}

}

TEST_SUITE("covers") {

TEST_CASE("minimal covers are signatures or T-cuts and meet joins oddly") {
  int cases = 0;
  for (const SignedGraft& sg : random_grafts(1500, 3, 8)) {
    const auto joins = oracle::odd_tjoins(sg);
    if (joins.empty()) continue;
    std::vector<std::uint64_t> hitting;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << sg.num_edges()); ++b) {
      if (std::all_of(joins.begin(), joins.end(), [&](std::uint64_t j) { return (j & b) != 0; })) hitting.push_back(b);
    }
    for (std::uint64_t b : oracle::minimal_only(hitting)) {
      CHECK(classify_cover(sg, EdgeSet(b)) != CoverClass::kNeither);
      CHECK((oracle::is_signature(sg, b) || oracle::is_tcut(sg, b)));
      for (std::uint64_t j : joins) CHECK(oracle::pop(j & b) % 2 == 1);
      ++cases;
    }
  }
  MESSAGE(cases << " minimal covers");
  CHECK(cases >= 1000);
}

TEST_CASE("signatures and T-cuts share a parity on Eulerian grafts") {
  int cases = 0;
  for (const SignedGraft& sg : eulerian_grafts(4, 7)) {
    const std::vector<Cover> covers = signatures_and_tcuts(sg);
    REQUIRE_FALSE(covers.empty());
    const int parity = covers.front().edges.size() % 2;
    for (const Cover& c : covers) CHECK(c.edges.size() % 2 == parity);
    CHECK(parity == sg.sigma().size() % 2);
    const auto t = tau(sg).value;
    if (t) CHECK(*t % 2 == parity);
    ++cases;
  }
  MESSAGE(cases << " Eulerian grafts");
  CHECK(cases >= 1000);
}

}

TEST_SUITE("packing-bounds") {

TEST_CASE("nu <= nu* <= tau with exact rationals") {
  int cases = 0;
  for (const SignedGraft& sg : generate({.n_min = 1, .n_max = 4, .m_min = 0, .m_max = 6, .t_mode = TMode::kBoth})) {
    const PackingResult p = packs(sg);
    if (!p.tau) continue;
    const NustarResult f = nustar(sg);
    CHECK(check_fractional_packing(f.joins, sg.num_edges(), f.lp));
    CHECK(Rational(p.nu) <= f.value);
    CHECK(f.value <= Rational(*p.tau));
    if (p.packs) CHECK(f.value == Rational(p.nu));
    if (f.doubling_value) CHECK(*f.doubling_value <= f.value);
    ++cases;
  }
  MESSAGE(cases << " grafts with an odd T-join");
  CHECK(cases >= 1000);
}

TEST_CASE("tau and nu agree with brute force on random grafts") {
  for (const SignedGraft& sg : random_grafts(1000, 4, 9)) {
    const PackingResult p = packs(sg);
    CHECK(p.tau == oracle::tau(sg));
    CHECK(p.nu == oracle::nu(sg));
  }
}

}
