#include <doctest.h>

#include <algorithm>
#include <random>

#include "oddjoin/multigraph.hpp"
#include "oracles.hpp"
#include "helpers.hpp"

using namespace oddjoin;
using testing::graph;

TEST_SUITE("graph-core") {

TEST_CASE("cut of a single vertex in a triangle is its star") {
  const Multigraph g = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(cut(g, VertexSet{0}) == EdgeSet{0, 2});
  CHECK(cut(g, VertexSet{}).empty());
}

TEST_CASE("cut of two vertices in K5 has six edges") {
  const Multigraph g = complete_graph(5);
  const EdgeSet c = cut(g, VertexSet{0, 1});
  CHECK(c.size() == 6);
  c.for_each([&](EdgeId e) {
    const Edge& edge = g.edge(e);
    CHECK((edge.u < 2) != (edge.v < 2));
  });
  CHECK(c.bits() == oracle::cut(oracle::from(g), 0b11));
}

TEST_CASE("loops lie in no cut and count twice in the degree") {
  const Multigraph g = graph(2, {{0, 0}, {0, 1}});
  CHECK(cut(g, VertexSet{0}) == EdgeSet{1});
  CHECK(g.degree(0) == 3);
  CHECK(is_circuit(g, EdgeSet{0}));
  CHECK(is_cycle(g, EdgeSet{0}));
}

TEST_CASE("unknown vertex in a cut shore is an input error") {
  const Multigraph g = graph(3, {{0, 1}});
  CHECK_THROWS_AS(cut(g, VertexSet{5}), InputError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), InputError);
}

TEST_CASE("circuits and cycles") {
  const Multigraph tri = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(is_circuit(tri, tri.all_edges()));
  CHECK(is_cycle(tri, tri.all_edges()));
  const Multigraph two = graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_circuit(two, two.all_edges()));
  CHECK(is_cycle(two, two.all_edges()));
  CHECK_FALSE(is_cycle(tri, EdgeSet{0, 1}));
}

TEST_CASE("T-joins") {
  const Multigraph path = graph(3, {{0, 1}, {1, 2}});
  CHECK(is_tjoin(path, path.all_edges(), VertexSet{0, 2}));
  const Multigraph tri = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(is_tjoin(tri, tri.all_edges(), VertexSet{}));
  CHECK_FALSE(is_tjoin(tri, EdgeSet{0}, VertexSet{}));
  CHECK_THROWS_AS(is_tjoin(tri, EdgeSet{0}, VertexSet{0}), InputError);
}

TEST_CASE("st-paths are listed in lexicographic order") {
  const Multigraph tri = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto paths = st_paths(tri, 0, 1);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == EdgeSet{0});
  CHECK(paths[1] == EdgeSet{1, 2});
  const Multigraph apart = graph(4, {{0, 1}, {2, 3}});
  CHECK(st_paths(apart, 0, 3).empty());
  const Multigraph k4 = complete_graph(4);
  CHECK(st_paths(k4, 0, 1).size() == 5);
  CHECK(st_paths(k4, 0, 1).size() == oracle::st_paths(oracle::from(k4), 0, 1).size());
}

TEST_CASE("components are ordered by least member") {
  const Multigraph g = graph(5, {{3, 4}, {0, 2}});
  const auto parts = components(g);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == VertexSet{0, 2});
  CHECK(parts[1] == VertexSet{1});
  CHECK(parts[2] == VertexSet{3, 4});
}

TEST_CASE("circuit list matches cycles that are connected and 2-regular") {
  const Multigraph g = graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 3}});
  std::vector<std::uint64_t> expected;
  for (std::uint64_t s = 1; s < (1U << g.num_edges()); ++s) {
    if (is_circuit(g, EdgeSet(s))) expected.push_back(s);
  }
  auto got = testing::bits(circuits(g));
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("cut algebra and T-join parity on random multigraphs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e) edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    const Multigraph g(n, edges);
    const VertexSet u(rng() & ((1U << n) - 1));
    const VertexSet w(rng() & ((1U << n) - 1));
    CHECK((cut(g, u) ^ cut(g, w)) == cut(g, u ^ w));

    for (std::uint64_t s = 0; s < (1U << m); ++s) {
      const EdgeSet set(s);
      CHECK(is_tjoin(g, set, VertexSet{}) == is_cycle(g, set));
      if (is_cycle(g, set)) {
        EdgeSet rest = set;
        while (!rest.empty()) {
          const EdgeSet c = find_circuit(g, rest);
          REQUIRE(!c.empty());
          REQUIRE(is_circuit(g, c));
          rest -= c;
        }
      }
      const VertexSet t = odd_vertices(g, set);
      CHECK(t.bits() == oracle::odd_degree(oracle::from(g), s));
      const bool odd_shore = (u & t).size() % 2 == 1;
      CHECK(((cut(g, u) & set).size() % 2 == 1) == odd_shore);
    }
  }
}

TEST_CASE("for_each_tjoin visits exactly the T-joins") {
  const Multigraph g = graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 1}});
  const VertexSet t{0, 2};
  std::vector<std::uint64_t> seen;
  for_each_tjoin(g, t, [&](EdgeSet s) { seen.push_back(s.bits()); });
  std::sort(seen.begin(), seen.end());
  std::vector<std::uint64_t> expected;
  for (std::uint64_t s = 0; s < (1U << g.num_edges()); ++s) {
    if (oracle::odd_degree(oracle::from(g), s) == t.bits()) expected.push_back(s);
  }
  CHECK(seen == expected);
  CHECK_FALSE(find_tjoin(graph(4, {{0, 1}, {2, 3}}), VertexSet{0, 2}).has_value());
}

}
