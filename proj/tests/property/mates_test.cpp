#include <doctest.h>

#include <random>

#include "oddjoin/enumerate.hpp"
#include "oddjoin/omega.hpp"
#include "oddjoin/packing.hpp"
#include "helpers.hpp"

using namespace oddjoin;

namespace {

struct Setting {
  SignedGraft graft;
  OmegaPacking packing;
  std::vector<Cover> covers;
};

// Legal packings only: 3 <= k <= tau and k = tau (mod 2).
std::vector<Setting> settings() {
  std::vector<SignedGraft> pool = generate({.n_min = 2, .n_max = 4, .m_min = 6, .m_max = 8, .t_mode = TMode::kBoth});
  for (int m = 9; m <= 11; ++m) {
    for (SignedGraft& sg : generate_random(5, m, TMode::kPair, 100 + static_cast<std::uint64_t>(m), 150)) pool.push_back(sg);
    for (SignedGraft& sg : generate_random(4, m, TMode::kEmpty, 200 + static_cast<std::uint64_t>(m), 150)) pool.push_back(sg);
  }
  std::vector<Setting> out;
  for (const SignedGraft& sg : pool) {
    const auto t = tau(sg).value;
    if (!t || *t < 3) continue;
    const std::vector<Cover> covers = signatures_and_tcuts(sg);
    for (int k = *t % 2 == 1 ? 3 : 4; k <= *t; k += 2) {
      for (EdgeId omega = 0; omega < sg.num_edges(); ++omega) {
        if (auto p = find_omega_packing(sg, omega, k)) out.push_back({sg, *p, covers});
      }
    }
  }
  return out;
}

const std::vector<Setting>& all_settings() {
  static const std::vector<Setting> s = settings();
  return s;
}

}  // namespace

TEST_SUITE("mates") {

TEST_CASE("k-mates are exactly the caps") {
  int cases = 0;
  for (const Setting& s : all_settings()) {
    REQUIRE(is_omega_packing(s.graft, s.packing));
    const int k = s.packing.k();
    for (const Cover& c : s.covers) {
      for (int l = 0; l < k; ++l) {
        const bool mate = is_kmate(s.graft, c.edges, s.packing.joins[static_cast<std::size_t>(l)], k);
        CHECK(mate == is_cap(s.graft, s.packing, c.edges, l));
        ++cases;
      }
    }
  }
  MESSAGE(all_settings().size() << " packings, " << cases << " checks");
  CHECK(cases >= 1000);
}

TEST_CASE("covers inside the union of two mates") {
  int cases = 0;
  for (const Setting& s : all_settings()) {
    const OmegaPacking& p = s.packing;
    const int k = p.k();
    EdgeSet rest;
    for (int i = 3; i < k; ++i) rest |= p.joins[static_cast<std::size_t>(i)];
    const EdgeSet l1 = p.joins[0];
    const EdgeSet l2 = p.joins[1];
    const auto m1 = kmates(s.graft, l1, k);
    const auto m2 = kmates(s.graft, l2, k);
    for (EdgeSet b1 : m1) CHECK(b1.is_subset_of(l1 | rest));
    for (EdgeSet b1 : m1) {
      for (EdgeSet b2 : m2) {
        for (const Cover& c : s.covers) {
          const EdgeSet b = c.edges;
          if (!b.is_subset_of(b1 | b2)) continue;
          ++cases;
          CHECK(b.contains(p.omega));
          CHECK(b.is_subset_of(l1 | l2 | rest));
          for (int i = 2; i < k; ++i) CHECK((b & p.joins[static_cast<std::size_t>(i)]).size() == 1);
          CHECK(((b & l1).size() >= 3 || (b & l2).size() >= 3));
          if ((b & l1).size() == 1) CHECK(is_kmate(s.graft, b, l2, k));
          if ((b & l2).size() == 1) CHECK(is_kmate(s.graft, b, l1, k));
        }
      }
      for (EdgeSet b1b : m1) {
        for (const Cover& c : s.covers) {
          if (c.edges.is_subset_of(b1 | b1b)) CHECK(is_kmate(s.graft, c.edges, l1, k));
        }
      }
    }
  }
  MESSAGE(cases << " covers checked");
  CHECK(cases >= 1000);
}

}
