#pragma once

#include <variant>

#include "graph.hpp"

namespace pac {

// sentinel for a missing arc inside journal weight lists
inline constexpr Weight kNoArc = ~0ull;

// Weight normalization at v: delta subtracted from every outgoing arc.
struct R2Record {
    Vertex v;
    Weight delta;
};

// Degree-1 elimination: v removed, u its only neighbor; weights are the
// current values at removal time and together form the record's d share.
struct R3Record {
    Vertex v;
    Vertex u;
    Weight w_vu;
    Weight w_uv;
};

// Path replacement: inner vertices of path[1..h] collapse to a 6-vertex
// gadget. fwd[i-1] = w(path[i] -> path[i+1]) for i in [1, h-1], bwd likewise
// in the opposite direction; kNoArc marks missing arcs. k is the 1-based
// index of the heaviest antiparallel pair, a1/a2/b1/b2 are freshly allocated
// vertex ids (>= the vertex count at kernelization start).
struct R4Record {
    std::vector<Vertex> path;  // v_0 .. v_{h+1}
    std::vector<Weight> fwd;   // size h-1
    std::vector<Weight> bwd;   // size h-1
    std::int32_t k;
    Vertex a1, a2, b1, b2;
};

// Twin removal: u deleted, u_keep is the surviving class member. The removed
// vertex's arcs are recorded so lifting can re-wire it.
struct VC1Record {
    Vertex u;
    Vertex u_keep;
    std::vector<std::pair<Vertex, Weight>> out_arcs;  // (head, weight), input order
    std::vector<std::pair<Vertex, Weight>> in_arcs;   // (tail, weight), input order
};

using JournalRecord = std::variant<R2Record, R3Record, R4Record, VC1Record>;

struct KernelJournal {
    std::vector<JournalRecord> records;
    Cost offset_d = 0;
    bool cycle_mode = false;
};

// d share of a single record (R4 contributes 0).
Cost record_delta(const JournalRecord& r);

struct ReplayResult {
    Instance kernel;
    std::vector<Vertex> kernel_to_global;  // kernel vertex id -> id in the journal's space
};

// Deterministically re-applies the journal to the original instance. The
// result is structurally identical to what the kernelization emitted.
ReplayResult journal_apply(const Instance& original, const KernelJournal& j);

// Replays the journal in reverse, turning any feasible kernel solution into a
// feasible solution of the original instance. cost(lifted) <= cost(kernel) + d,
// with equality when the kernel solution is optimal.
Solution lift_solution(const Instance& original, const KernelJournal& j,
                       const Solution& kernel_solution);

}  // namespace pac
