#pragma once

#include "graph.hpp"

namespace pac {

// Per-vertex lower bound on the payment of any optimal solution.
struct LowerBound {
    std::vector<Weight> ell;
};

enum class LbKind { Trivial, UniqueIn, Both };

// ell(v) = cheapest outgoing arc of v. Needs n >= 2.
LowerBound lb_trivial(const Instance& g);

// Strengthens lb_trivial: if v is the sole in-neighbor source of some u
// (in-degree of u is exactly 1), then v must pay at least w(vu). Single pass.
LowerBound lb_unique_in_arc(const Instance& g);

// Pointwise max of the two bounds above; sound since both are sound.
LowerBound lb_combined(const Instance& g);

LowerBound lower_bound(const Instance& g, LbKind kind);

// Arcs vu with w(vu) <= ell(v), their SCC decomposition and per-vertex
// heaviest obligatory weight.
struct ObligatorySubgraph {
    std::vector<ArcId> arc_ids;    // input order
    std::vector<char> obligatory;  // per arc id
    std::vector<Weight> obl_max;   // per vertex, 0 if no obligatory arc
    SccIndex scc;
};

ObligatorySubgraph obligatory_subgraph(const Instance& g, const LowerBound& lb);

}  // namespace pac
