#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddjoin/id_set.hpp"

namespace oddjoin {

using Rational = boost::multiprecision::cpp_rational;

/// Optimal primal/dual pair of the fractional packing LP
///
///   max sum_S x_S  s.t.  sum_{S : e in S} x_S <= 1 for every element e,  x >= 0
///
/// whose dual is the fractional cover LP min sum_e y_e s.t. sum_{e in S} y_e >= 1.
struct FractionalPacking {
  Rational value;
  /// One weight per family member, in family order.
  std::vector<Rational> weights;
  /// One weight per ground element 0..ground-1.
  std::vector<Rational> cover;
};

/// Solves the packing LP exactly with a dense rational simplex under Bland's
/// rule. The origin is feasible, so no phase one is needed.
FractionalPacking solve_fractional_packing(std::span<const EdgeSet> family, int ground);

/// Primal feasibility, dual feasibility and equal objectives. Independent of
/// the solver.
bool check_fractional_packing(std::span<const EdgeSet> family, int ground,
                              const FractionalPacking& lp);

}  // namespace oddjoin
