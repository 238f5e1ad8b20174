#include "oddjoin/rational_lp.hpp"

#include "oddjoin/error.hpp"

namespace oddjoin {

FractionalPacking solve_fractional_packing(std::span<const EdgeSet> family, int ground) {
  const int cols = static_cast<int>(family.size());
  const int rows = ground;
  const int width = cols + rows;  // structural columns, then slacks
  // tableau[r] = row r over all columns followed by the right-hand side.
  std::vector<std::vector<Rational>> tableau(static_cast<std::size_t>(rows),
                                             std::vector<Rational>(static_cast<std::size_t>(width + 1)));
  for (int r = 0; r < rows; ++r) {
    auto& row = tableau[static_cast<std::size_t>(r)];
    for (int c = 0; c < cols; ++c)
      if (family[static_cast<std::size_t>(c)].contains(r)) row[static_cast<std::size_t>(c)] = 1;
    row[static_cast<std::size_t>(cols + r)] = 1;
    row[static_cast<std::size_t>(width)] = 1;
  }
  // Reduced costs of the maximisation objective; positive entries improve.
  std::vector<Rational> reduced(static_cast<std::size_t>(width + 1));
  for (int c = 0; c < cols; ++c) reduced[static_cast<std::size_t>(c)] = 1;
  std::vector<int> basis(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) basis[static_cast<std::size_t>(r)] = cols + r;

  for (;;) {
    int enter = -1;
    for (int c = 0; c < width; ++c) {
      if (reduced[static_cast<std::size_t>(c)] > 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int r = 0; r < rows; ++r) {
      const auto& row = tableau[static_cast<std::size_t>(r)];
      const Rational& a = row[static_cast<std::size_t>(enter)];
      if (a <= 0) continue;
      const Rational ratio = row[static_cast<std::size_t>(width)] / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // Every column is bounded by its own rows, so the LP cannot be unbounded
    // unless a member is empty.
    if (leave < 0) throw InputError("packing LP is unbounded: the family holds an empty set");
    auto& pivot_row = tableau[static_cast<std::size_t>(leave)];
    const Rational pivot = pivot_row[static_cast<std::size_t>(enter)];
    for (auto& x : pivot_row) x /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leave) continue;
      auto& row = tableau[static_cast<std::size_t>(r)];
      const Rational factor = row[static_cast<std::size_t>(enter)];
      if (factor == 0) continue;
      for (int c = 0; c <= width; ++c) row[static_cast<std::size_t>(c)] -= factor * pivot_row[static_cast<std::size_t>(c)];
    }
    const Rational factor = reduced[static_cast<std::size_t>(enter)];
    for (int c = 0; c <= width; ++c) reduced[static_cast<std::size_t>(c)] -= factor * pivot_row[static_cast<std::size_t>(c)];
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  FractionalPacking out;
  out.weights.assign(static_cast<std::size_t>(cols), Rational(0));
  for (int r = 0; r < rows; ++r) {
    const int b = basis[static_cast<std::size_t>(r)];
    if (b < cols) out.weights[static_cast<std::size_t>(b)] = tableau[static_cast<std::size_t>(r)][static_cast<std::size_t>(width)];
  }
  out.cover.resize(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) out.cover[static_cast<std::size_t>(r)] = -reduced[static_cast<std::size_t>(cols + r)];
  out.value = -reduced[static_cast<std::size_t>(width)];
  return out;
}

bool check_fractional_packing(std::span<const EdgeSet> family, int ground,
                              const FractionalPacking& lp) {
  if (lp.weights.size() != family.size() || lp.cover.size() != static_cast<std::size_t>(ground)) return false;
  Rational primal = 0;
  std::vector<Rational> load(static_cast<std::size_t>(ground));
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (lp.weights[i] < 0) return false;
    primal += lp.weights[i];
    family[i].for_each([&](int e) {
      if (e < ground) load[static_cast<std::size_t>(e)] += lp.weights[i];
    });
  }
  for (const Rational& l : load)
    if (l > 1) return false;
  Rational dual = 0;
  for (const Rational& y : lp.cover) {
    if (y < 0) return false;
    dual += y;
  }
  for (EdgeSet s : family) {
    Rational covered = 0;
    s.for_each([&](int e) {
      if (e < ground) covered += lp.cover[static_cast<std::size_t>(e)];
    });
    if (covered < 1) return false;
  }
  return primal == dual && primal == lp.value;
}

}  // namespace oddjoin
