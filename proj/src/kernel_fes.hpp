#pragma once

#include <optional>

#include "graph.hpp"
#include "journal.hpp"

namespace pac {

// Path-gadget weights per the h>=2 inner-path case split. Inputs are the
// weights of the h-1 antiparallel inner pairs; nullopt means the arc is
// missing (conceptually infinite). k is the 1-based index of the heaviest
// pair, first index on ties; missing arcs dominate every finite sum.
struct GadgetWeights {
    std::optional<Weight> c_r, c_l, c_n;
    std::int32_t k = 1;
    std::optional<Weight> a1b1, a2b2, a1b2, a2b1;  // nullopt: omit the arc
};

GadgetWeights gadget_weights(std::span<const std::optional<Weight>> fwd,
                             std::span<const std::optional<Weight>> bwd);

// Subtracts each vertex's cheapest outgoing weight from all its outgoing arcs.
std::pair<Instance, KernelJournal> rule2_normalize(const Instance& g);

// Exhaustively removes degree-1 vertices of the underlying undirected graph,
// folding the forced payments into d and into the neighbor's arc weights.
std::pair<Instance, KernelJournal> rule3_degree1(const Instance& g);

// Degree-1 elimination followed by weight normalization, both exhaustive,
// in O(n + m) via a worklist and deferred per-vertex weight subtraction.
std::pair<Instance, KernelJournal> preprocess_linear(const Instance& g);

// Replaces the inner vertices of every maximal induced path with at least 7
// inner vertices by a 6-vertex gadget. Requires a preprocessed instance whose
// underlying graph is not a cycle.
std::pair<Instance, KernelJournal> rule4_replace_paths(const Instance& g);

// Exact solver for instances whose underlying graph is a simple cycle:
// the best of all-forward, all-backward, and both-directions minus the
// heaviest antiparallel pair (pair chosen on normalized weights).
Solution solve_cycle(const Instance& g);

// Full feedback-edge-number kernelization: preprocess, then either stop in
// cycle mode or replace long paths. For feedback edge number g >= 2 the
// kernel has at most 20g-20 vertices and 42g-42 arcs.
std::pair<Instance, KernelJournal> kernelize_fes(const Instance& g);

// Census helpers for the size-bound analysis of the underlying graph
// (vertices of undirected degree >= 3, and maximal induced paths where an
// edge between two such vertices counts as a path with no inner vertex).
struct UndirectedCensus {
    std::int64_t degree_ge3 = 0;
    std::int64_t maximal_paths = 0;
};
UndirectedCensus undirected_census(const Instance& g);

}  // namespace pac
