#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oddjoin/clutter.hpp"
#include "oddjoin/enumerate.hpp"
#include "oddjoin/obstructions.hpp"
#include "oddjoin/reductions.hpp"
#include "oddjoin/signed_graft.hpp"
#include "oracles.hpp"

using namespace oddjoin;

namespace {

struct PathSystem {
  SignedGraft graft;
  std::vector<EdgeSet> paths;
};

// x = 0, y = 1; each path runs through fresh or shared internal vertices.
PathSystem random_paths(std::mt19937_64& rng) {
  const int pool = 2 + static_cast<int>(rng() % 5);
  const int count = 2 + static_cast<int>(rng() % 4);
  std::vector<Edge> edges;
  std::vector<EdgeSet> paths;
  for (int p = 0; p < count && edges.size() < 14; ++p) {
    std::vector<int> inner(static_cast<std::size_t>(pool - 2));
    std::iota(inner.begin(), inner.end(), 2);
    std::shuffle(inner.begin(), inner.end(), rng);
    inner.resize(rng() % (inner.size() + 1));
    std::vector<int> walk{0};
    walk.insert(walk.end(), inner.begin(), inner.end());
    walk.push_back(1);
    EdgeSet path;
    for (std::size_t i = 0; i + 1 < walk.size() && edges.size() < 16; ++i) {
      path.insert(static_cast<int>(edges.size()));
      edges.push_back({walk[i], walk[i + 1]});
    }
    if (path.size() + 1 != static_cast<int>(walk.size())) break;
    paths.push_back(path);
  }
  EdgeSet all;
  for (EdgeSet p : paths) all |= p;
  edges.resize(static_cast<std::size_t>(all.size()));
  const Multigraph g(pool, edges);
  EdgeSet sigma;
  const int odd = static_cast<int>(rng() % 3);
  for (int i = 0; i < odd; ++i) sigma.insert(static_cast<int>(rng() % edges.size()));
  if (rng() % 2 == 0) sigma ^= cut(g, VertexSet(rng() & ((1U << pool) - 1)));
  return {SignedGraft(g, sigma, VertexSet{0, 1}), paths};
}

}  // namespace

TEST_SUITE("bipartite") {

TEST_CASE("pairwise bipartite path systems are bipartite") {
  std::mt19937_64 rng(5);
  int hypothesis = 0;
  int non_trivial = 0;
  for (int round = 0; round < 4000; ++round) {
    const PathSystem s = random_paths(rng);
    bool pairwise = true;
    for (std::size_t i = 0; i < s.paths.size() && pairwise; ++i) {
      for (std::size_t j = i + 1; j < s.paths.size() && pairwise; ++j)
        pairwise = is_bipartite_set(s.graft, s.paths[i] | s.paths[j]);
    }
    if (!pairwise) continue;
    ++hypothesis;
    non_trivial += !s.graft.sigma().empty();
    CHECK(is_bipartite(s.graft));
    const auto g = oracle::from(s.graft.graph());
    bool some_odd_cycle = false;
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << g.m()); ++c)
      some_odd_cycle = some_odd_cycle || oracle::is_odd_cycle(g, s.graft.sigma().bits(), c);
    CHECK_FALSE(some_odd_cycle);
  }
  MESSAGE(hypothesis << " systems meeting the hypothesis, " << non_trivial << " with a nonempty signature");
  CHECK(hypothesis >= 1000);
}

}

TEST_SUITE("minors") {

TEST_CASE("take_minor matches one operation at a time") {
  std::mt19937_64 rng(9);
  int cases = 0;
  for (int round = 0; round < 1500; ++round) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 8);
    const SignedGraft sg = generate_random(n, m, rng() % 2 == 0 ? TMode::kEmpty : TMode::kPair, rng(), 1).front();
    EdgeSet del;
    EdgeSet con;
    for (EdgeId e = 0; e < m; ++e) {
      const auto r = rng() % 3;
      if (r == 0) del.insert(e);
      else if (r == 1 && !sg.graph().edge(e).is_loop()) con.insert(e);
    }
    Minor minor;
    try {
      minor = take_minor(sg, del, con);
    } catch (const NotAValidMinorError&) {
      continue;
    }

    SignedGraft cur = sg;
    std::vector<EdgeId> origin(static_cast<std::size_t>(m));
    std::iota(origin.begin(), origin.end(), 0);
    auto position = [&](EdgeId old) {
      return static_cast<EdgeId>(std::find(origin.begin(), origin.end(), old) - origin.begin());
    };
    for (EdgeId e = m - 1; e >= 0; --e) {
      if (!del.contains(e)) continue;
      cur = delete_edge(cur, position(e));
      origin.erase(origin.begin() + position(e));
    }
    bool ok = true;
    con.for_each([&](EdgeId e) {
      if (!ok) return;
      const EdgeId at = position(e);
      if (cur.graph().edge(at).is_loop()) {
        if (cur.is_odd(EdgeSet{at})) ok = false;
        cur = delete_edge(cur, at);
      } else {
        cur = contract_edge(cur, at, OddContraction::kAutoResign);
      }
      origin.erase(origin.begin() + at);
    });
    REQUIRE(ok);

    auto in_old_ids = [](const SignedGraft& g, const std::vector<EdgeId>& ids) {
      std::vector<std::uint64_t> out;
      for (EdgeSet j : minimal_odd_tjoins(g)) {
        std::uint64_t b = 0;
        j.for_each([&](EdgeId e) { b |= std::uint64_t{1} << ids[static_cast<std::size_t>(e)]; });
        out.push_back(b);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(in_old_ids(minor.graft, minor.kept_edges) == in_old_ids(cur, origin));
    CHECK(minor.graft.terminals().size() == cur.terminals().size());
    ++cases;
  }
  MESSAGE(cases << " minors");
  CHECK(cases >= 1000);
}

TEST_CASE("topological classes exclude both obstructions") {
  int cases = 0;
  for (const SignedGraft& sg : generate({.n_min = 1, .n_max = 4, .m_min = 0, .m_max = 7, .t_mode = TMode::kBoth})) {
    const TopoClasses c = topo_class_predicates(sg);
    if (!c.blocking_vertex && c.blocking_pair != true && c.connected_joins != true) continue;
    CHECK(obstruction_scan(sg, kDefaultMinorBudget, 0).outcome == ScanOutcome::kNone);
    ++cases;
  }
  MESSAGE(cases << " grafts in a class");
  CHECK(cases >= 1000);
}

TEST_CASE("clutters of grafts are binary and Eulerian together with the graft") {
  int cases = 0;
  int unused = 0;
  for (const SignedGraft& sg : generate({.n_min = 1, .n_max = 4, .m_min = 0, .m_max = 6, .t_mode = TMode::kBoth})) {
    const Clutter c = from_signed_graft(sg);
    if (c.empty()) continue;
    CHECK(is_binary(c));
    EdgeSet used;
    for (ElementSet member : c.sets()) used |= member;
    // an edge in no minimal join changes degrees but not the clutter
    if (used != sg.graph().all_edges()) {
      ++unused;
      continue;
    }
    CHECK(is_eulerian_clutter(c) == is_eulerian(sg));
    ++cases;
  }
  MESSAGE(cases << " clutters on every edge, " << unused << " with unused edges");
  CHECK(cases >= 1000);
}

}
