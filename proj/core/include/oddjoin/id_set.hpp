#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "oddjoin/error.hpp"

namespace oddjoin {

struct EdgeTag {};
struct VertexTag {};

/// Subset of a dense id range [0, 64) with bitset semantics.
///
/// The tag keeps edge sets and vertex sets from being mixed up. `^` is the
/// symmetric difference, `-` the set difference.
template <class Tag>
class IdSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr IdSet() = default;
  constexpr explicit IdSet(std::uint64_t bits) : bits_(bits) {}
  IdSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(id);
  }

  static IdSet from_ids(const std::vector<int>& ids) {
    IdSet s;
    for (int id : ids) s.insert(id);
    return s;
  }
  /// The set {0, ..., count-1}.
  static constexpr IdSet range(int count) {
    return IdSet(count >= kCapacity ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << count) - 1);
  }
  static constexpr IdSet singleton(int id) { return IdSet(std::uint64_t{1} << id); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int id) const { return (bits_ >> id) & 1U; }
  constexpr bool is_subset_of(IdSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IdSet other) const { return (bits_ & other.bits_) != 0; }
  /// Lowest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr int back() const { return 63 - std::countl_zero(bits_); }

  void insert(int id) {
    if (id < 0 || id >= kCapacity) throw InputError("id " + std::to_string(id) + " out of range");
    bits_ |= std::uint64_t{1} << id;
  }
  constexpr void erase(int id) { bits_ &= ~(std::uint64_t{1} << id); }
  constexpr void flip(int id) { bits_ ^= std::uint64_t{1} << id; }

  constexpr IdSet operator|(IdSet o) const { return IdSet(bits_ | o.bits_); }
  constexpr IdSet operator&(IdSet o) const { return IdSet(bits_ & o.bits_); }
  constexpr IdSet operator^(IdSet o) const { return IdSet(bits_ ^ o.bits_); }
  constexpr IdSet operator-(IdSet o) const { return IdSet(bits_ & ~o.bits_); }
  constexpr IdSet& operator|=(IdSet o) { bits_ |= o.bits_; return *this; }
  constexpr IdSet& operator&=(IdSet o) { bits_ &= o.bits_; return *this; }
  constexpr IdSet& operator^=(IdSet o) { bits_ ^= o.bits_; return *this; }
  constexpr IdSet& operator-=(IdSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const IdSet&) const = default;
  /// Orders by the raw bitmask value; see lex_less for sequence order.
  constexpr auto operator<=>(const IdSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

using EdgeSet = IdSet<EdgeTag>;
using VertexSet = IdSet<VertexTag>;

/// Lexicographic order on the sorted id sequences of two sets.
template <class Tag>
constexpr bool lex_less(IdSet<Tag> a, IdSet<Tag> b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int first = std::countr_zero(diff);
  const std::uint64_t above = first == 63 ? 0 : ~((std::uint64_t{2} << first) - 1);
  if (a.contains(first)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

template <class Tag>
std::string to_string(IdSet<Tag> s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int id) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  });
  return out + "}";
}

}  // namespace oddjoin
