#pragma once

#include "graph.hpp"

namespace pac {

// Number of threshold assignments: product over vertices of the number of
// distinct outgoing weights, saturating at 2^63-1.
std::uint64_t oracle_count_combinations(const Instance& g);

// Exhaustive exact solver. Enumerates every per-vertex threshold assignment
// t(v) drawn from v's outgoing weights; the induced arc set {vu : w(vu) <= t(v)}
// closes any solution upward at equal cost, so the minimum over strongly
// connected assignments is the optimum.
Solution oracle_solve(const Instance& g, std::uint64_t combination_cap = 10'000'000);

// Secondary micro-oracle over all 2^m arc subsets; validates the threshold
// enumeration on tiny instances.
Solution oracle_solve_subsets(const Instance& g, int max_arcs = 20);

}  // namespace pac
