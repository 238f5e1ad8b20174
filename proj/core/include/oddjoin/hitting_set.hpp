#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oddjoin/id_set.hpp"

namespace oddjoin {

/// Set-system primitives shared by the graft-level and clutter-level solvers.
/// Families are spans of bitsets over one ground set.

/// Minimum-size set meeting every member of `family`, found by branch and
/// bound. Branches on the elements of the smallest unhit member; the bound
/// is a greedy packing of pairwise disjoint unhit members. Returns nullopt
/// when some member is empty.
std::optional<EdgeSet> min_hitting_set(std::span<const EdgeSet> family);

/// Largest subfamily of pairwise disjoint members inside `allowed`.
///
/// Depth-first over the lowest available element: either it stays unused or
/// one member containing it is taken. Results are memoised on the residual
/// ground set. The search stops early once `stop_at` members are found.
std::vector<EdgeSet> max_disjoint_subfamily(std::span<const EdgeSet> family, EdgeSet allowed,
                                            int stop_at = 1 << 30);
std::vector<EdgeSet> max_disjoint_subfamily(std::span<const EdgeSet> family);

/// Inclusion-wise minimal members of `sets`, deduplicated and sorted by lex_less.
std::vector<EdgeSet> minimal_members(std::vector<EdgeSet> sets);

/// Minimal transversals of `family` (its blocker), sorted by lex_less.
/// Berge's incremental construction. Empty family -> {{}}; a family holding
/// the empty set -> {}.
std::vector<EdgeSet> minimal_transversals(std::span<const EdgeSet> family);

}  // namespace oddjoin
