#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "oddjoin/plane.hpp"
#include "oddjoin/reductions.hpp"

using namespace oddjoin;

namespace {

// A rows x cols grid with the first cell split by a diagonal, so exactly
// two faces are triangles.
PlaneEmbedding split_grid(int rows, int cols) {
  std::vector<std::pair<double, double>> pos;
  std::vector<Edge> edges;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      pos.emplace_back(c, r);
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  edges.push_back({id(0, 0), id(1, 1)});
  return embed_straight_line(Multigraph(rows * cols, edges), pos);
}

}  // namespace

static void BM_PlaneDual(benchmark::State& state) {
  const PlaneEmbedding emb = split_grid(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_plane_dual(emb, emb.graph.all_edges(), {}).min_length());
}
BENCHMARK(BM_PlaneDual)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_CutCover(benchmark::State& state) {
  const PlaneEmbedding emb = split_grid(2, static_cast<int>(state.range(0)));
  const int last = emb.graph.num_vertices() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_cut_cover(emb, 0, last).k);
}
BENCHMARK(BM_CutCover)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_TwoCommodity(benchmark::State& state) {
  // two crossing commodities on a doubled 4-cycle
  const Multigraph h(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(reduce_two_commodity(h, 0, 2, 1, 3).max_paths());
}
BENCHMARK(BM_TwoCommodity)->Unit(benchmark::kMillisecond);

static void BM_TJoin4(benchmark::State& state) {
  const Multigraph h(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 1}, {2, 3}, {0, 2}, {1, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(reduce_tjoin4(h, VertexSet{0, 1, 2, 3}).max_joins());
}
BENCHMARK(BM_TJoin4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
