#pragma once

#include <functional>

#include "bounds.hpp"
#include "graph.hpp"

namespace pac {

// Arc-reduced view of an instance: per (vertex, foreign SCC) pair only one
// minimum-weight arc survives, intra-SCC arcs are untouched. residual(vu) =
// max(0, w(vu) - oblMax(v)) is the marginal cost of vu beyond the payment the
// obligatory arcs already force at v.
struct RelevantSubgraph {
    const Instance* instance = nullptr;
    ObligatorySubgraph obligatory;
    std::vector<ArcId> kept;      // input order
    std::vector<char> kept_flag;  // per arc id
    std::vector<Cost> residual;   // per arc id
};

RelevantSubgraph reduce_relevant(const Instance& g, ObligatorySubgraph obl);

// Materializes the kept arcs as a standalone instance (testing aid).
Instance materialize(const RelevantSubgraph& rel);

struct FptOptions {
    std::int32_t cap_c = 20;
    std::uint64_t cap_table_bytes = 1ull << 30;
};

// Minimum-cost connectors: for every SCC S and every subset T of the SCCs
// reachable from S via one arc, the cheapest arc set from S hitting all of T
// under residual weights.
struct ConnectorTable {
    struct PerScc {
        std::vector<std::int32_t> sdom;  // reachable component ids, ascending
        std::vector<Cost> cost;          // indexed by subset mask over sdom
        std::vector<ArcId> arcs;         // mask * width + j, -1 when absent
        std::size_t width() const { return sdom.size(); }
        std::span<const ArcId> row(std::size_t mask) const {
            return {arcs.data() + mask * width(), width()};
        }
    };
    std::vector<PerScc> per_scc;
};

ConnectorTable connector_dp(const RelevantSubgraph& rel, const FptOptions& opts = {});

struct SearchStats {
    std::uint64_t configurations = 0;
    std::uint64_t feasible = 0;
};

// Exhaustive search over SCC interconnection patterns with c <= sum k_i <= 2c-2.
// Requires c >= 2.
Solution search_optimal(const RelevantSubgraph& rel, const ConnectorTable& table,
                        SearchStats* stats = nullptr);

struct SolveStats {
    std::int32_t scc_count = 0;
    double phase1_ms = 0, phase2_ms = 0, phase3_ms = 0;
};

// Full pipeline: obligatory subgraph, relevant reduction, connector DP,
// exhaustive search. Cost is reported against the original weights.
Solution solve_minpac(const Instance& g, const LowerBound& lb, const FptOptions& opts = {},
                      SolveStats* stats = nullptr);

// All ways to write `total` as `parts` positive integers, in deterministic
// order (first part ascending). Exposed for tests.
void for_each_composition(int parts, int total, const std::function<void(std::span<const int>)>& fn);

}  // namespace pac
