#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oddjoin/signed_graft.hpp"

namespace oddjoin {

enum class TMode { kEmpty, kPair, kBoth };
std::string to_string(TMode m);
/// Accepts "empty", "pair" and "both"; throws InputError otherwise.
TMode parse_t_mode(const std::string& s);

inline constexpr int kMaxGenerateVertices = 7;
inline constexpr int kMaxGenerateEdges = 12;

struct GenerateBounds {
  int n_min = 1;
  int n_max = 4;
  int m_min = 0;
  int m_max = 7;
  TMode t_mode = TMode::kBoth;
};

/// Bytes [n, terminal mask, then (multiplicity, odd count) for every vertex
/// pair i <= j in order], minimised over vertex relabellings and legal
/// resignings. Equal keys mean isomorphic up to resigning. n <= 8.
using CanonicalKey = std::vector<std::uint8_t>;
CanonicalKey canonical_key(const SignedGraft& sg);
/// The graft spelled by a key: pairs in order, odd parallel edges first.
SignedGraft graft_from_key(const CanonicalKey& key);
SignedGraft canonical_graft(const SignedGraft& sg);

/// One graft per equivalence class with n_min <= n <= n_max vertices and
/// m_min <= m <= m_max edges, in increasing key order. Vertices outside T
/// are never isolated. Throws PreconditionError past 7 vertices or 12 edges.
std::vector<SignedGraft> generate(const GenerateBounds& bounds);

/// `count` grafts with exactly n vertices and m edges drawn from a seeded
/// generator; no deduplication.
std::vector<SignedGraft> generate_random(int n, int m, TMode t_mode, std::uint64_t seed, int count);

}  // namespace oddjoin
