#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pac {

using Vertex = std::int32_t;
using ArcId = std::int32_t;
using Weight = std::uint64_t;
using Cost = std::uint64_t;

inline constexpr Weight kMaxWeight = (1ull << 63) - 1;
inline constexpr Cost kInfCost = ~0ull;

struct Arc {
    Vertex tail;
    Vertex head;
    Weight weight;
};

// Immutable weighted digraph. Vertices are dense 0-based ids, at most one arc
// per ordered pair, no self-loops. Arc ids index the construction order, which
// all tie-breaking downstream relies on.
class Instance {
public:
    static Instance create(Vertex n, std::vector<Arc> arcs);

    Vertex vertex_count() const { return n_; }
    std::int64_t arc_count() const { return static_cast<std::int64_t>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(ArcId id) const { return arcs_[static_cast<std::size_t>(id)]; }
    std::span<const ArcId> out_arcs(Vertex v) const;
    std::span<const ArcId> in_arcs(Vertex v) const;
    std::optional<ArcId> find_arc(Vertex tail, Vertex head) const;

private:
    Vertex n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<ArcId> out_flat_, in_flat_;
    std::vector<std::int64_t> out_start_, in_start_;
    std::vector<std::uint64_t> key_sorted_;
    std::vector<ArcId> key_arc_;
};

struct Solution {
    std::vector<std::pair<Vertex, Vertex>> arcs;  // sorted ascending (tail, head)
    Cost cost = 0;
};

struct SccIndex {
    std::vector<std::int32_t> component_of;       // vertex -> component id
    std::vector<std::vector<Vertex>> components;  // topological order of the condensation
    std::int32_t count() const { return static_cast<std::int32_t>(components.size()); }
};

Cost checked_add(Cost a, Cost b);

// Sum over `vertices` of the heaviest arc in `arc_ids` leaving each vertex.
// A vertex without an outgoing arc is an error unless the instance has a
// single vertex; then it contributes 0.
Cost subset_cost(const Instance& g, std::span<const Vertex> vertices,
                 std::span<const ArcId> arc_ids);
Cost arcset_cost(const Instance& g, std::span<const ArcId> arc_ids);

SccIndex scc_decompose(const Instance& g);
SccIndex scc_decompose(const Instance& g, std::span<const ArcId> arc_ids);
bool is_strongly_connected(const Instance& g);
bool is_strongly_connected(const Instance& g, std::span<const ArcId> arc_ids);

// Edges of the underlying undirected graph beyond a spanning tree; antiparallel
// arc pairs count as one edge. Requires a connected underlying graph.
std::uint64_t feedback_edge_number(const Instance& g);

struct Verdict {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks arc membership, strong connectivity and exact cost of a claimed
// solution. Collects violations instead of throwing.
Verdict verify_solution(const Instance& g, const Solution& s);

// Sorted (tail, head) pairs plus exact recomputed cost for a set of arc ids.
Solution make_solution(const Instance& g, std::vector<ArcId> arc_ids);

}  // namespace pac
