#include <doctest.h>

#include "io.hpp"
#include "oddjoin/obstructions.hpp"
#include "oddjoin/packing.hpp"
#include "oddjoin/reductions.hpp"
#include "oracles.hpp"
#include "helpers.hpp"

using namespace oddjoin;
using testing::graph;

namespace {

PlaneEmbedding embedding(const char* name) {
  return io::embedding_from_json(io::read_json_file(io::resolve_fixture(name)));
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("odd circuits of even-degree graphs") {
  const PackingResult c4 = reduce_odd_minor_circuits(cycle_graph(4));
  CHECK(c4.status == PackStatus::kNoJoin);
  CHECK(c4.nu == 0);

  const Multigraph doubled = graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}});
  const PackingResult r = reduce_odd_minor_circuits(doubled);
  CHECK(r.packs);
  CHECK(r.tau == 2);
  CHECK(r.nu == 2);
  CHECK(r.tau == oracle::tau(testing::all_odd(doubled)));
  for (EdgeSet c : r.packing) CHECK(is_circuit(doubled, c));

  CHECK_THROWS_AS(reduce_odd_minor_circuits(complete_graph(5)), PreconditionError);
  CHECK_THROWS_AS(reduce_odd_minor_circuits(path_graph(3)), PreconditionError);
}

TEST_CASE("T-joins against T-cuts with four terminals") {
  const Multigraph star = graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const VertexSet t{1, 2, 3, 4};
  const TJoinPacking r = reduce_tjoin4(star, t);
  const oracle::TJoinAnswer want = oracle::tjoins(oracle::from(star), t.bits());
  CHECK(r.max_joins() == want.max_joins);
  CHECK(r.min_cut() == want.min_cut);
  CHECK(r.max_joins() == r.min_cut());
  for (EdgeSet j : r.joins) CHECK(is_tjoin(star, j, t));
  CHECK(cut(star, r.shore) == r.tcut);
  CHECK((r.shore & t).size() % 2 == 1);

  const Multigraph mixed = graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK_THROWS_AS(reduce_tjoin4(mixed, VertexSet{0, 1, 2, 3}), PreconditionError);
  CHECK_THROWS_AS(reduce_tjoin4(star, VertexSet{1, 2, 3, 4, 0, 5}), InputError);
}

TEST_CASE("two terminals pass straight through") {
  const Multigraph h = graph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 2}});
  const VertexSet t{0, 2};
  const TJoinPacking r = reduce_tjoin4(h, t);
  const SignedGraft direct(h, h.star(2), t);
  const PackingResult p = packs(direct);
  CHECK(r.max_joins() == p.nu);
  CHECK(r.min_cut() == *p.tau);
  CHECK(r.graft == direct);
}

TEST_CASE("two commodities") {
  const Multigraph apart = graph(4, {{0, 1}, {2, 3}});
  const TwoCommodity a = reduce_two_commodity(apart, 0, 1, 2, 3);
  CHECK(a.max_paths() == 2);
  CHECK(a.min_disconnecting() == 2);

  const Multigraph c4 = cycle_graph(4);
  const TwoCommodity b = reduce_two_commodity(c4, 0, 2, 1, 3);
  const oracle::CommodityAnswer want = oracle::two_commodity(oracle::from(c4), 0, 2, 1, 3);
  CHECK(b.max_paths() == 2);
  CHECK(b.max_paths() == want.max_paths);
  CHECK(b.min_disconnecting() == want.min_disconnecting);
  const EdgeSet rest = c4.all_edges() - b.disconnecting;
  CHECK_FALSE(reachable(c4, 0, rest).contains(2));
  CHECK_FALSE(reachable(c4, 1, rest).contains(3));

  CHECK_THROWS_AS(reduce_two_commodity(path_graph(3), 0, 2, 1, 2), InputError);
}

TEST_CASE("plane dual of a triangle") {
  const PlaneEmbedding tri = embedding("reduce/plane_dual_triangle");
  const PlaneDual r = reduce_plane_dual(tri, tri.graph.all_edges(), {});
  CHECK(r.signatures.size() == 3);
  CHECK(r.min_length() == 3);
  CHECK(r.dual.num_vertices() == 2);
  CHECK(r.claims_checked > 0);
  const SignedGraft primal(tri.graph, tri.graph.all_edges(), {});
  for (EdgeSet s : r.signatures) {
    CHECK(is_signature(primal, s));
    for (EdgeSet c : circuits(tri.graph)) {
      if (primal.is_odd(c)) CHECK((s & c).size() % 2 == 1);
    }
  }
}

TEST_CASE("plane dual needs two odd faces") {
  const Multigraph sq = cycle_graph(4);
  const PlaneEmbedding emb{sq, {{0, 1, 2, 3}, {3, 2, 1, 0}}};
  CHECK_THROWS_AS(reduce_plane_dual(emb, sq.all_edges(), {}), PreconditionError);
  const PlaneEmbedding broken{sq, {{0, 1, 2, 3}}};
  CHECK_THROWS_AS(reduce_plane_dual(broken, sq.all_edges(), {}), InputError);
}

TEST_CASE("four-terminal exclusion graft") {
  const auto j = io::read_json_file(io::resolve_fixture("oddtjoins"));
  const PlaneEmbedding emb = io::embedding_from_json(j);
  const SignedGraft sg = io::graft_from_json(j);
  CHECK(odd_faces(emb, sg.sigma()).size() == 2);
  const PlaneDual r = reduce_plane_dual(emb, sg.sigma(), sg.terminals());
  CHECK(r.exclusion_unchecked);
  CHECK(graft_isomorphism(r.dual, build_f7()).has_value());
  CHECK(static_cast<int>(r.signatures.size()) < r.min_length());
  CHECK_THROWS_AS(reduce_plane_dual(emb, sg.sigma(), sg.terminals(), &sg), PreconditionError);
}

TEST_CASE("cut covers") {
  const PlaneEmbedding c5 = embedding("reduce/cut_cover_pentagon");
  const CutCover r = reduce_cut_cover(c5, 0, 2);
  CHECK(r.k == 3);
  CHECK(r.cuts.size() == 3);
  for (EdgeId e = 0; e < c5.graph.num_edges(); ++e) {
    int in = 0;
    for (EdgeSet c : r.cuts) in += c.contains(e);
    CHECK(in >= r.k - 1);
  }
  for (std::size_t i = 0; i < r.cuts.size(); ++i) {
    CHECK(cut(c5.graph, r.shores[i]) == r.cuts[i]);
    CHECK_FALSE(r.shores[i].contains(0));
    CHECK_FALSE(r.shores[i].contains(2));
  }
  REQUIRE(r.colouring.has_value());
  for (const Edge& e : r.identified.edges()) {
    CHECK((*r.colouring)[static_cast<std::size_t>(e.u)] != (*r.colouring)[static_cast<std::size_t>(e.v)]);
  }

  const Multigraph tri = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const PlaneEmbedding t{tri, {{0, 1, 2}, {2, 1, 0}}};
  const CutCover small = reduce_cut_cover(t, 0, 1);
  CHECK(small.k == 1);
  CHECK_FALSE(small.colouring.has_value());

  const Multigraph sq = cycle_graph(4);
  CHECK_THROWS_AS(reduce_cut_cover(PlaneEmbedding{sq, {{0, 1, 2, 3}, {3, 2, 1, 0}}}, 0, 2), PreconditionError);
}

TEST_CASE("topological classes") {
  const Multigraph k4 = complete_graph(4);
  const SignedGraft at_zero(k4, k4.star(0), {});
  CHECK(topo_class_predicates(at_zero).blocking_vertex);

  const TopoClasses f7 = topo_class_predicates(build_f7());
  CHECK_FALSE(f7.blocking_vertex);
  CHECK(f7.blocking_pair == false);
  CHECK(f7.connected_joins == false);

  const SignedGraft none(k4, {}, VertexSet{0, 1});
  const TopoClasses v = topo_class_predicates(none);
  CHECK(v.blocking_vertex);
  CHECK(v.blocking_pair == true);
  CHECK(v.connected_joins == true);

  const PlaneEmbedding tri = embedding("reduce/plane_dual_triangle");
  const TopoClasses p = topo_class_predicates(SignedGraft(tri.graph, tri.graph.all_edges(), {}), &tri);
  CHECK(p.plane_two_odd_faces == true);
}

TEST_CASE("identifying vertices keeps edge ids") {
  std::vector<VertexId> map;
  const Multigraph h = identify_vertices(cycle_graph(4), {{0, 2}}, &map);
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 4);
  CHECK(map == std::vector<VertexId>{0, 1, 0, 2});
  CHECK(shortest_odd_circuit(cycle_graph(5), cycle_graph(5).all_edges()) == 5);
  CHECK_FALSE(shortest_odd_circuit(cycle_graph(4), cycle_graph(4).all_edges()).has_value());
}

}
