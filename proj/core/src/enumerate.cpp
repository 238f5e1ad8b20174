#include "oddjoin/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

namespace oddjoin {

namespace {

constexpr int kKeyVertexLimit = 8;

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

int pair_count(int n) { return n * (n + 1) / 2; }

struct PairTable {
  int n = 0;
  std::vector<std::uint8_t> mult;
  std::vector<std::uint8_t> odd;
};

PairTable tabulate(const SignedGraft& sg) {
  const int n = sg.num_vertices();
  PairTable t{n, std::vector<std::uint8_t>(static_cast<std::size_t>(pair_count(n)), 0),
              std::vector<std::uint8_t>(static_cast<std::size_t>(pair_count(n)), 0)};
  for (EdgeId e = 0; e < sg.num_edges(); ++e) {
    const Edge& ed = sg.graph().edge(e);
    const auto k = static_cast<std::size_t>(pair_index(n, ed.u, ed.v));
    ++t.mult[k];
    if (sg.sigma().contains(e)) ++t.odd[k];
  }
  return t;
}

// Least key over relabellings for fixed odd counts.
void minimise_over_perms(const PairTable& t, const std::vector<std::uint8_t>& odd, VertexSet terminals,
                         CanonicalKey& best) {
  const int n = t.n;
  std::array<int, kKeyVertexLimit> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::array<int, kKeyVertexLimit> inv{};
  CanonicalKey key(static_cast<std::size_t>(2 + 2 * pair_count(n)));
  key[0] = static_cast<std::uint8_t>(n);
  do {
    std::uint8_t tmask = 0;
    for (int v = 0; v < n; ++v) {
      inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
      if (terminals.contains(v)) tmask |= static_cast<std::uint8_t>(1U << perm[static_cast<std::size_t>(v)]);
    }
    if (!best.empty() && tmask > best[1]) continue;
    key[1] = tmask;
    std::size_t pos = 2;
    bool worse = false;
    bool decided = best.empty() || tmask < best[1];
    for (int a = 0; a < n && !worse; ++a) {
      for (int b = a; b < n; ++b) {
        const auto k = static_cast<std::size_t>(
            pair_index(n, inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)]));
        key[pos] = t.mult[k];
        key[pos + 1] = odd[k];
        if (!decided) {
          for (std::size_t q = pos; q < pos + 2 && !decided; ++q) {
            if (key[q] < best[q]) decided = true;
            else if (key[q] > best[q]) worse = true;
            if (worse) break;
          }
          if (worse) break;
        }
        pos += 2;
      }
    }
    if (worse) continue;
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
}

CanonicalKey shape_key(const PairTable& t) {
  CanonicalKey best;
  minimise_over_perms(t, std::vector<std::uint8_t>(t.odd.size(), 0), {}, best);
  return best;
}

Multigraph graph_from_table(int n, const std::vector<std::uint8_t>& mult) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int c = 0; c < mult[static_cast<std::size_t>(pair_index(n, i, j))]; ++c) edges.push_back({i, j});
  return Multigraph(n, std::move(edges));
}

// Edges outside a spanning forest, in id order.
EdgeSet non_forest_edges(const Multigraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a == b) {
      out.insert(e);
    } else {
      parent[static_cast<std::size_t>(a)] = b;
    }
  }
  return out;
}

void for_each_multiset(int types, int lo, int hi, const std::function<void(const std::vector<std::uint8_t>&)>& fn) {
  std::vector<std::uint8_t> counts(static_cast<std::size_t>(types), 0);
  const std::function<void(int, int)> rec = [&](int type, int used) {
    if (type == types) {
      if (used >= lo) fn(counts);
      return;
    }
    for (int c = 0; used + c <= hi; ++c) {
      counts[static_cast<std::size_t>(type)] = static_cast<std::uint8_t>(c);
      rec(type + 1, used + c);
    }
    counts[static_cast<std::size_t>(type)] = 0;
  };
  rec(0, 0);
}

}  // namespace

std::string to_string(TMode m) {
  switch (m) {
    case TMode::kEmpty: return "empty";
    case TMode::kPair: return "pair";
    case TMode::kBoth: return "both";
  }
  return "?";
}

TMode parse_t_mode(const std::string& s) {
  if (s == "empty") return TMode::kEmpty;
  if (s == "pair") return TMode::kPair;
  if (s == "both") return TMode::kBoth;
  throw InputError("unknown terminal mode '" + s + "'");
}

CanonicalKey canonical_key(const SignedGraft& sg) {
  const int n = sg.num_vertices();
  if (n > kKeyVertexLimit) throw PreconditionError("canonical keys are limited to 8 vertices");
  const PairTable t = tabulate(sg);
  if (n == 0) return {0, 0};
  CanonicalKey best;
  std::vector<std::uint8_t> odd(t.odd.size());
  const std::uint64_t shores = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 0; bits < shores; ++bits) {
    const VertexSet u(bits);
    if ((u & sg.terminals()).size() % 2 == 1) continue;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const auto k = static_cast<std::size_t>(pair_index(n, i, j));
        odd[k] = u.contains(i) != u.contains(j) ? static_cast<std::uint8_t>(t.mult[k] - t.odd[k]) : t.odd[k];
      }
    minimise_over_perms(t, odd, sg.terminals(), best);
  }
  return best;
}

SignedGraft graft_from_key(const CanonicalKey& key) {
  if (key.size() < 2) throw InputError("canonical key too short");
  const int n = key[0];
  if (key.size() != static_cast<std::size_t>(2 + 2 * pair_count(n))) throw InputError("canonical key has the wrong length");
  std::vector<Edge> edges;
  EdgeSet sigma;
  std::size_t pos = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, pos += 2) {
      for (int c = 0; c < key[pos]; ++c) {
        if (c < key[pos + 1]) sigma.insert(static_cast<int>(edges.size()));
        edges.push_back({i, j});
      }
    }
  return SignedGraft(Multigraph(n, std::move(edges)), sigma, VertexSet(key[1]));
}

SignedGraft canonical_graft(const SignedGraft& sg) { return graft_from_key(canonical_key(sg)); }

std::vector<SignedGraft> generate(const GenerateBounds& b) {
  if (b.n_max > kMaxGenerateVertices || b.m_max > kMaxGenerateEdges)
    throw PreconditionError("generation is limited to 7 vertices and 12 edges");
  std::set<CanonicalKey> found;
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    std::set<CanonicalKey> shapes;
    for_each_multiset(pair_count(n), std::max(0, b.m_min), b.m_max, [&](const std::vector<std::uint8_t>& counts) {
      shapes.insert(shape_key(PairTable{n, counts, std::vector<std::uint8_t>(counts.size(), 0)}));
    });
    for (const CanonicalKey& shape : shapes) {
      std::vector<std::uint8_t> mult;
      for (std::size_t pos = 2; pos < shape.size(); pos += 2) mult.push_back(shape[pos]);
      const Multigraph g = graph_from_table(n, mult);
      VertexSet isolated;
      for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == 0) isolated.insert(v);
      std::vector<VertexSet> terminal_sets;
      if (b.t_mode != TMode::kPair && isolated.empty()) terminal_sets.push_back({});
      if (b.t_mode != TMode::kEmpty)
        for (int a = 0; a < n; ++a)
          for (int c = a + 1; c < n; ++c)
            if (isolated.is_subset_of(VertexSet{a, c})) terminal_sets.push_back({a, c});
      const EdgeSet free = non_forest_edges(g);
      for (VertexSet ts : terminal_sets) {
        const EdgeSet flip = ts.empty() ? EdgeSet{} : cut(g, VertexSet::singleton(ts.front()));
        for (std::uint64_t bits = 0;; bits = (bits - free.bits()) & free.bits()) {
          const EdgeSet s(bits);
          found.insert(canonical_key(SignedGraft(g, s, ts)));
          if (!ts.empty()) found.insert(canonical_key(SignedGraft(g, s ^ flip, ts)));
          if (bits == free.bits()) break;
        }
      }
    }
  }
  std::vector<SignedGraft> out;
  out.reserve(found.size());
  for (const CanonicalKey& k : found) out.push_back(graft_from_key(k));
  return out;
}

std::vector<SignedGraft> generate_random(int n, int m, TMode t_mode, std::uint64_t seed, int count) {
  if (n < 1 || m < 0 || m > EdgeSet::kCapacity) throw PreconditionError("random grafts need n >= 1 and m <= 64");
  if (t_mode != TMode::kEmpty && n < 2) throw PreconditionError("a terminal pair needs two vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<SignedGraft> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Edge> edges;
    EdgeSet sigma;
    for (int e = 0; e < m; ++e) {
      edges.push_back({vertex(rng), vertex(rng)});
      if (coin(rng)) sigma.insert(e);
    }
    VertexSet ts;
    if (t_mode == TMode::kPair || (t_mode == TMode::kBoth && coin(rng))) {
      const int a = vertex(rng);
      int c = vertex(rng);
      while (c == a) c = vertex(rng);
      ts = VertexSet{a, c};
    }
    out.emplace_back(Multigraph(n, std::move(edges)), sigma, ts);
  }
  return out;
}

}  // namespace oddjoin
