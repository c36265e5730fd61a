#include "fpt.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "errors.hpp"

namespace pac {

RelevantSubgraph reduce_relevant(const Instance& g, ObligatorySubgraph obl) {
    const Vertex n = g.vertex_count();
    const std::size_t m = static_cast<std::size_t>(g.arc_count());
    const auto& comp = obl.scc.component_of;
    const std::int32_t c = obl.scc.count();

    RelevantSubgraph rel;
    rel.instance = &g;
    rel.kept_flag.assign(m, 0);
    rel.residual.assign(m, 0);

    // stamped per-component minimum so the whole pass stays O(n + m)
    std::vector<ArcId> best(static_cast<std::size_t>(c), -1);
    std::vector<std::int32_t> stamp(static_cast<std::size_t>(c), -1);
    for (Vertex v = 0; v < n; ++v) {
        const std::int32_t cv = comp[static_cast<std::size_t>(v)];
        for (ArcId id : g.out_arcs(v)) {
            const Arc& a = g.arc(id);
            const std::int32_t cu = comp[static_cast<std::size_t>(a.head)];
            if (cu == cv) {
                rel.kept_flag[static_cast<std::size_t>(id)] = 1;
                continue;
            }
            if (stamp[static_cast<std::size_t>(cu)] != v) {
                stamp[static_cast<std::size_t>(cu)] = v;
                best[static_cast<std::size_t>(cu)] = id;
            } else if (a.weight < g.arc(best[static_cast<std::size_t>(cu)]).weight) {
                best[static_cast<std::size_t>(cu)] = id;
            }
        }
        for (ArcId id : g.out_arcs(v)) {
            const std::int32_t cu = comp[static_cast<std::size_t>(g.arc(id).head)];
            if (cu != cv && best[static_cast<std::size_t>(cu)] == id)
                rel.kept_flag[static_cast<std::size_t>(id)] = 1;
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (!rel.kept_flag[i]) continue;
        rel.kept.push_back(static_cast<ArcId>(i));
        const Arc& a = g.arcs()[i];
        const Weight base = obl.obl_max[static_cast<std::size_t>(a.tail)];
        rel.residual[i] = a.weight > base ? a.weight - base : 0;
    }
    rel.obligatory = std::move(obl);
    return rel;
}

Instance materialize(const RelevantSubgraph& rel) {
    std::vector<Arc> arcs;
    arcs.reserve(rel.kept.size());
    for (ArcId id : rel.kept) arcs.push_back(rel.instance->arc(id));
    return Instance::create(rel.instance->vertex_count(), std::move(arcs));
}

namespace {

// cost of an arc row under residual weights: per-tail maximum, summed
Cost row_cost(const RelevantSubgraph& rel, std::span<const ArcId> row,
              std::vector<Cost>& tail_max, std::vector<std::int32_t>& tail_stamp,
              std::int32_t stamp_value, std::vector<Vertex>& touched) {
    touched.clear();
    for (ArcId id : row) {
        if (id < 0) continue;
        const Vertex t = rel.instance->arc(id).tail;
        const Cost r = rel.residual[static_cast<std::size_t>(id)];
        if (tail_stamp[static_cast<std::size_t>(t)] != stamp_value) {
            tail_stamp[static_cast<std::size_t>(t)] = stamp_value;
            tail_max[static_cast<std::size_t>(t)] = r;
            touched.push_back(t);
        } else {
            tail_max[static_cast<std::size_t>(t)] =
                std::max(tail_max[static_cast<std::size_t>(t)], r);
        }
    }
    Cost total = 0;
    for (Vertex t : touched) total = checked_add(total, tail_max[static_cast<std::size_t>(t)]);
    return total;
}

}  // namespace

ConnectorTable connector_dp(const RelevantSubgraph& rel, const FptOptions& opts) {
    const Instance& g = *rel.instance;
    const SccIndex& scc = rel.obligatory.scc;
    const std::int32_t c = scc.count();
    if (c > opts.cap_c)
        throw CapExceededError("obligatory subgraph has " + std::to_string(c) +
                                   " strongly connected components, cap is " +
                                   std::to_string(opts.cap_c),
                               static_cast<std::uint64_t>(c));

    // reachable foreign components per SCC, ascending component id
    std::vector<std::vector<std::int32_t>> sdom(static_cast<std::size_t>(c));
    for (ArcId id : rel.kept) {
        const Arc& a = g.arc(id);
        const std::int32_t cs = scc.component_of[static_cast<std::size_t>(a.tail)];
        const std::int32_t ct = scc.component_of[static_cast<std::size_t>(a.head)];
        if (cs != ct) sdom[static_cast<std::size_t>(cs)].push_back(ct);
    }
    std::uint64_t bytes = 0;
    for (auto& d : sdom) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        const std::uint64_t k = d.size();
        bytes += (1ull << k) * (8 + 4 * k);
    }
    if (bytes > opts.cap_table_bytes)
        throw CapExceededError("connector tables would need " + std::to_string(bytes) +
                                   " bytes, cap is " + std::to_string(opts.cap_table_bytes),
                               bytes);

    const Vertex n = g.vertex_count();
    std::vector<std::int32_t> local_of(static_cast<std::size_t>(c), -1);
    std::vector<Cost> tail_max(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> tail_stamp(static_cast<std::size_t>(n), -1);
    std::int32_t stamp_value = 0;
    std::vector<Vertex> touched;

    ConnectorTable table;
    table.per_scc.resize(static_cast<std::size_t>(c));

    struct ForeignArc {
        ArcId id;
        std::int32_t local;
        Cost res;
    };

    for (std::int32_t s = 0; s < c; ++s) {
        auto& out = table.per_scc[static_cast<std::size_t>(s)];
        out.sdom = sdom[static_cast<std::size_t>(s)];
        const std::size_t width = out.sdom.size();
        const std::size_t K = 1ull << width;
        for (std::size_t j = 0; j < width; ++j)
            local_of[static_cast<std::size_t>(out.sdom[j])] = static_cast<std::int32_t>(j);

        std::vector<Cost> prev_cost(K, kInfCost), cur_cost;
        std::vector<ArcId> prev_arcs(K * width, -1), cur_arcs;
        prev_cost[0] = 0;

        std::vector<ArcId> first_arc(width, -1);
        std::size_t covered = 0;

        std::vector<ForeignArc> foreign, biu;
        std::vector<ArcId> init_row(width, -1);

        for (Vertex v : scc.components[static_cast<std::size_t>(s)]) {
            cur_cost = prev_cost;
            cur_arcs = prev_arcs;

            foreign.clear();
            for (ArcId id : g.out_arcs(v)) {
                if (!rel.kept_flag[static_cast<std::size_t>(id)]) continue;
                const std::int32_t ct =
                    scc.component_of[static_cast<std::size_t>(g.arc(id).head)];
                if (ct == s) continue;
                foreign.push_back({id, local_of[static_cast<std::size_t>(ct)],
                                   rel.residual[static_cast<std::size_t>(id)]});
            }

            // initialization sweep: one first-found arc per newly reachable SCC
            for (const ForeignArc& fa : foreign) {
                const std::size_t bit = 1ull << fa.local;
                if (!(covered & bit)) {
                    covered |= bit;
                    first_arc[static_cast<std::size_t>(fa.local)] = fa.id;
                }
            }
            for (std::size_t sub = covered;; sub = (sub - 1) & covered) {
                if (sub != 0) {
                    for (std::size_t j = 0; j < width; ++j)
                        init_row[j] = (sub >> j & 1) ? first_arc[j] : -1;
                    Cost cost = row_cost(rel, init_row, tail_max, tail_stamp, ++stamp_value,
                                         touched);
                    if (cost < cur_cost[sub]) {
                        cur_cost[sub] = cost;
                        std::copy(init_row.begin(), init_row.end(),
                                  cur_arcs.begin() + static_cast<std::ptrdiff_t>(sub * width));
                    }
                }
                if (sub == 0) break;
            }

            // update sweep: v pays exactly the residual of one of its arcs u;
            // everything at most as expensive rides along for free
            for (const ForeignArc& u : foreign) {
                biu.clear();
                std::size_t biu_mask = 0;
                for (const ForeignArc& fa : foreign) {
                    if (fa.res <= u.res) {
                        biu.push_back(fa);
                        biu_mask |= 1ull << fa.local;
                    }
                }
                for (std::size_t mask = 1; mask < K; ++mask) {
                    const std::size_t add = mask & biu_mask;
                    if (add == 0) continue;
                    const std::size_t prev_mask = mask & ~biu_mask;
                    if (prev_cost[prev_mask] == kInfCost) continue;
                    Cost add_cost = 0;
                    for (const ForeignArc& fa : biu)
                        if (add >> fa.local & 1) add_cost = std::max(add_cost, fa.res);
                    const Cost cand = checked_add(prev_cost[prev_mask], add_cost);
                    if (cand < cur_cost[mask]) {
                        cur_cost[mask] = cand;
                        auto dst = cur_arcs.begin() + static_cast<std::ptrdiff_t>(mask * width);
                        std::copy(prev_arcs.begin() +
                                      static_cast<std::ptrdiff_t>(prev_mask * width),
                                  prev_arcs.begin() +
                                      static_cast<std::ptrdiff_t>((prev_mask + 1) * width),
                                  dst);
                        for (const ForeignArc& fa : biu)
                            if (add >> fa.local & 1) dst[fa.local] = fa.id;
                    }
                }
            }

            prev_cost = std::move(cur_cost);
            prev_arcs = std::move(cur_arcs);
        }

        out.cost = std::move(prev_cost);
        out.arcs = std::move(prev_arcs);
        covered = 0;
        for (std::size_t j = 0; j < width; ++j)
            local_of[static_cast<std::size_t>(out.sdom[j])] = -1;
    }
    return table;
}

void for_each_composition(int parts, int total,
                          const std::function<void(std::span<const int>)>& fn) {
    std::vector<int> buf(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == parts - 1) {
            buf[static_cast<std::size_t>(pos)] = rem;
            fn(buf);
            return;
        }
        const int reserve = parts - 1 - pos;  // later parts need >= 1 each
        for (int k = 1; k <= rem - reserve; ++k) {
            buf[static_cast<std::size_t>(pos)] = k;
            rec(pos + 1, rem - k);
        }
    };
    if (parts >= 1 && total >= parts) rec(0, total);
}

namespace {

// next bitmask with the same popcount (Gosper); caller guards the range
std::uint32_t next_same_popcount(std::uint32_t v) {
    const std::uint32_t c = v & (0u - v);
    const std::uint32_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

bool aux_strongly_connected(std::span<const std::uint32_t> out_mask) {
    const std::size_t c = out_mask.size();
    const std::uint32_t full = (c == 32) ? ~0u : (1u << c) - 1;
    std::uint32_t reach = 1u;
    while (true) {
        std::uint32_t next = reach;
        for (std::size_t i = 0; i < c; ++i)
            if (reach >> i & 1) next |= out_mask[i];
        if (next == reach) break;
        reach = next;
    }
    if (reach != full) return false;
    std::uint32_t coreach = 1u;
    while (true) {
        std::uint32_t next = coreach;
        for (std::size_t i = 0; i < c; ++i)
            if (!(coreach >> i & 1) && (out_mask[i] & coreach)) next |= 1u << i;
        if (next == coreach) break;
        coreach = next;
    }
    return coreach == full;
}

}  // namespace

Solution search_optimal(const RelevantSubgraph& rel, const ConnectorTable& table,
                        SearchStats* stats) {
    const SccIndex& scc = rel.obligatory.scc;
    const std::int32_t c = scc.count();
    if (c < 2) throw PacError("search requires at least two components");
    if (c > 30) throw PacError("component count exceeds search limit");

    // global-component bit masks per (scc, local subset)
    std::vector<std::vector<std::uint32_t>> global_mask(static_cast<std::size_t>(c));
    for (std::int32_t s = 0; s < c; ++s) {
        const auto& per = table.per_scc[static_cast<std::size_t>(s)];
        if (per.sdom.empty())
            throw InfeasibleError("component " + std::to_string(s) +
                                  " has no outgoing arc to another component");
        const std::size_t K = 1ull << per.width();
        auto& gm = global_mask[static_cast<std::size_t>(s)];
        gm.assign(K, 0);
        for (std::size_t mask = 1; mask < K; ++mask) {
            const std::size_t low = mask & (0ull - mask);
            const std::size_t j = static_cast<std::size_t>(std::countr_zero(low));
            gm[mask] = gm[mask ^ low] | (1u << per.sdom[j]);
        }
    }

    Cost best = kInfCost;
    std::vector<std::uint32_t> best_config;
    std::vector<std::uint32_t> config(static_cast<std::size_t>(c), 0);
    std::vector<std::uint32_t> out_mask(static_cast<std::size_t>(c), 0);
    SearchStats local_stats;

    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == c) {
            ++local_stats.configurations;
            Cost total = 0;
            for (std::int32_t s = 0; s < c; ++s) {
                total = checked_add(
                    total, table.per_scc[static_cast<std::size_t>(s)].cost[config[s]]);
                out_mask[static_cast<std::size_t>(s)] =
                    global_mask[static_cast<std::size_t>(s)][config[s]];
            }
            if (!aux_strongly_connected(out_mask)) return;
            ++local_stats.feasible;
            if (total < best) {
                best = total;
                best_config.assign(config.begin(), config.end());
            }
            return;
        }
        const auto& per = table.per_scc[static_cast<std::size_t>(pos)];
        const int width = static_cast<int>(per.width());
        const int reserve = c - 1 - pos;
        for (int k = 1; k <= std::min(width, rem - reserve); ++k) {
            std::uint32_t mask = (1u << k) - 1;
            const std::uint32_t highest = mask << (width - k);
            while (true) {
                config[static_cast<std::size_t>(pos)] = mask;
                rec(pos + 1, rem - k);
                if (mask == highest) break;
                mask = next_same_popcount(mask);
            }
        }
    };

    for (int k = c; k <= 2 * c - 2; ++k) rec(0, k);

    if (stats) *stats = local_stats;
    if (best == kInfCost)
        throw InfeasibleError("no strongly connected component interconnection found");

    std::vector<ArcId> ids = rel.obligatory.arc_ids;
    for (std::int32_t s = 0; s < c; ++s) {
        const auto& per = table.per_scc[static_cast<std::size_t>(s)];
        for (ArcId id : per.row(best_config[static_cast<std::size_t>(s)]))
            if (id >= 0) ids.push_back(id);
    }
    return make_solution(*rel.instance, std::move(ids));
}

Solution solve_minpac(const Instance& g, const LowerBound& lb, const FptOptions& opts,
                      SolveStats* stats) {
    using clock = std::chrono::steady_clock;
    const auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };

    if (g.vertex_count() == 1) {
        if (stats) stats->scc_count = 1;
        return Solution{};
    }

    const auto t0 = clock::now();
    ObligatorySubgraph obl = obligatory_subgraph(g, lb);
    const std::int32_t c = obl.scc.count();
    if (stats) stats->scc_count = c;
    if (c == 1) {
        Solution s = make_solution(g, obl.arc_ids);
        if (stats) stats->phase1_ms = ms(t0, clock::now());
        return s;
    }

    RelevantSubgraph rel = reduce_relevant(g, std::move(obl));
    const auto t1 = clock::now();
    ConnectorTable table = connector_dp(rel, opts);
    const auto t2 = clock::now();
    Solution s = search_optimal(rel, table);
    const auto t3 = clock::now();
    if (stats) {
        stats->phase1_ms = ms(t0, t1);
        stats->phase2_ms = ms(t1, t2);
        stats->phase3_ms = ms(t2, t3);
    }
    return s;
}

}  // namespace pac
