#pragma once

#include <cstdint>

#include "slitpath/series.hpp"
#include "slitpath/weights.hpp"

namespace slitpath::oracles {

/// Maximum enumeration order, read from SLITPATH_MAX_ENUM (default 30).
int enumeration_budget();

/// First-passage enumeration from state m-1.
///
/// series[n] is the total weight of step sequences (-1: a1, +1: a2, +2: a3)
/// that stay in 1..m-1 and land exactly on 0 at step n. Reaching m or m+1 kills
/// the branch. The depth-first search shares subtrees with equal
/// (state, remaining steps).
///
/// Throws std::length_error("enumeration budget exceeded") when
/// order > enumeration_budget().
Series enumerate_paths(const SlitSpec& spec, const Weights& w, int order);

/// Same as enumerate_paths for an arbitrary start state 0..m+1.
Series enumerate_paths_from(const SlitSpec& spec, const Weights& w, int start, int order);

/// Unmemoized depth-first search over every step sequence. Cost grows like
/// 3^order; throws std::length_error("enumeration budget exceeded") once more
/// than max_nodes search nodes have been visited.
Series enumerate_paths_exhaustive(const SlitSpec& spec, const Weights& w, int start, int order,
                                  std::uint64_t max_nodes = 50'000'000);

} // namespace slitpath::oracles
