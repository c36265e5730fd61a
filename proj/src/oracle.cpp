#include "oracle.hpp"

#include <algorithm>

#include "errors.hpp"

namespace pac {

namespace {

// Distinct outgoing weights per vertex, ascending, plus the vertex's out-arc
// ids sorted by weight (stable, so equal weights keep input order).
struct VertexThresholds {
    std::vector<Weight> levels;
    std::vector<ArcId> arcs_by_weight;
    std::vector<std::size_t> prefix;  // per level: #arcs with weight <= level
};

std::vector<VertexThresholds> build_thresholds(const Instance& g) {
    const Vertex n = g.vertex_count();
    std::vector<VertexThresholds> t(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        auto out = g.out_arcs(v);
        auto& tv = t[static_cast<std::size_t>(v)];
        tv.arcs_by_weight.assign(out.begin(), out.end());
        std::stable_sort(tv.arcs_by_weight.begin(), tv.arcs_by_weight.end(),
                         [&](ArcId a, ArcId b) { return g.arc(a).weight < g.arc(b).weight; });
        for (ArcId id : tv.arcs_by_weight) {
            Weight w = g.arc(id).weight;
            if (tv.levels.empty() || tv.levels.back() != w) {
                tv.levels.push_back(w);
                tv.prefix.push_back(0);
            }
        }
        std::size_t count = 0, li = 0;
        for (ArcId id : tv.arcs_by_weight) {
            Weight w = g.arc(id).weight;
            while (tv.levels[li] != w) ++li;
            tv.prefix[li] = ++count;
        }
    }
    return t;
}

// Strong connectivity of the arc set induced by threshold choices: forward and
// backward reachability from vertex 0 over the implicit prefix adjacency.
bool induced_strongly_connected(const Instance& g, const std::vector<VertexThresholds>& t,
                                const std::vector<std::size_t>& choice,
                                std::vector<char>& mark, std::vector<Vertex>& queue) {
    const Vertex n = g.vertex_count();
    std::fill(mark.begin(), mark.end(), 0);
    queue.clear();
    queue.push_back(0);
    mark[0] = 1;
    std::size_t seen = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex v = queue[qi];
        const auto& tv = t[static_cast<std::size_t>(v)];
        std::size_t limit = tv.prefix[choice[static_cast<std::size_t>(v)]];
        for (std::size_t i = 0; i < limit; ++i) {
            Vertex h = g.arc(tv.arcs_by_weight[i]).head;
            if (!mark[static_cast<std::size_t>(h)]) {
                mark[static_cast<std::size_t>(h)] = 1;
                ++seen;
                queue.push_back(h);
            }
        }
    }
    if (seen != static_cast<std::size_t>(n)) return false;

    std::fill(mark.begin(), mark.end(), 0);
    queue.clear();
    queue.push_back(0);
    mark[0] = 1;
    seen = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex v = queue[qi];
        for (ArcId id : g.in_arcs(v)) {
            const Arc& a = g.arc(id);
            if (mark[static_cast<std::size_t>(a.tail)]) continue;
            const auto& tt = t[static_cast<std::size_t>(a.tail)];
            if (a.weight > tt.levels[choice[static_cast<std::size_t>(a.tail)]]) continue;
            mark[static_cast<std::size_t>(a.tail)] = 1;
            ++seen;
            queue.push_back(a.tail);
        }
    }
    return seen == static_cast<std::size_t>(n);
}

}  // namespace

std::uint64_t oracle_count_combinations(const Instance& g) {
    const std::uint64_t sat = (1ull << 63) - 1;
    std::uint64_t total = 1;
    std::vector<Weight> ws;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ws.clear();
        for (ArcId id : g.out_arcs(v)) ws.push_back(g.arc(id).weight);
        if (ws.empty()) continue;
        std::sort(ws.begin(), ws.end());
        std::uint64_t k =
            static_cast<std::uint64_t>(std::unique(ws.begin(), ws.end()) - ws.begin());
        if (total > sat / k) return sat;
        total *= k;
    }
    return total;
}

Solution oracle_solve(const Instance& g, std::uint64_t combination_cap) {
    const Vertex n = g.vertex_count();
    if (n == 1) return Solution{};

    for (Vertex v = 0; v < n; ++v)
        if (g.out_arcs(v).empty())
            throw InfeasibleError("vertex " + std::to_string(v + 1) +
                                  " has no outgoing arc; no spanning solution exists");

    const std::uint64_t combos = oracle_count_combinations(g);
    if (combos > combination_cap)
        throw CapExceededError("threshold combination count " + std::to_string(combos) +
                                   " exceeds cap " + std::to_string(combination_cap),
                               combos);

    const auto t = build_thresholds(g);
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> best_choice;
    Cost best = kInfCost;
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));

    // lexicographic enumeration: vertex 0 most significant, weights ascending
    while (true) {
        Cost total = 0;
        bool skip = false;
        for (Vertex v = 0; v < n; ++v) {
            total = checked_add(
                total, t[static_cast<std::size_t>(v)].levels[choice[static_cast<std::size_t>(v)]]);
            if (best != kInfCost && total >= best) {
                skip = true;  // cannot strictly improve, connectivity check is moot
                break;
            }
        }
        if (!skip && induced_strongly_connected(g, t, choice, mark, queue)) {
            best = total;
            best_choice = choice;
        }
        // odometer: last vertex fastest
        Vertex v = n - 1;
        while (v >= 0) {
            if (++choice[static_cast<std::size_t>(v)] <
                t[static_cast<std::size_t>(v)].levels.size())
                break;
            choice[static_cast<std::size_t>(v)] = 0;
            --v;
        }
        if (v < 0) break;
    }

    if (best == kInfCost)
        throw InfeasibleError("no threshold assignment is strongly connected");

    std::vector<ArcId> ids;
    for (Vertex v = 0; v < n; ++v) {
        const auto& tv = t[static_cast<std::size_t>(v)];
        std::size_t limit = tv.prefix[best_choice[static_cast<std::size_t>(v)]];
        for (std::size_t i = 0; i < limit; ++i) ids.push_back(tv.arcs_by_weight[i]);
    }
    Solution s = make_solution(g, std::move(ids));
    if (s.cost != best) throw PacError("oracle internal cost mismatch");
    return s;
}

Solution oracle_solve_subsets(const Instance& g, int max_arcs) {
    const Vertex n = g.vertex_count();
    if (n == 1) return Solution{};
    const int m = static_cast<int>(g.arc_count());
    if (m > max_arcs)
        throw CapExceededError("arc-subset oracle limited to " + std::to_string(max_arcs) +
                                   " arcs, instance has " + std::to_string(m),
                               static_cast<std::uint64_t>(m));

    std::vector<std::uint32_t> out_mask(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i)
        out_mask[static_cast<std::size_t>(g.arc(static_cast<ArcId>(i)).tail)] |= 1u << i;

    Cost best = kInfCost;
    std::uint32_t best_mask = 0;
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n), 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool all_out = true;
        for (Vertex v = 0; v < n && all_out; ++v)
            if (!(out_mask[static_cast<std::size_t>(v)] & mask)) all_out = false;
        if (!all_out) continue;

        for (Vertex v = 0; v < n; ++v) reach[static_cast<std::size_t>(v)] = 1ull << v;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < m; ++i) {
                if (!(mask & (1u << i))) continue;
                const Arc& a = g.arc(static_cast<ArcId>(i));
                std::uint64_t merged =
                    reach[static_cast<std::size_t>(a.tail)] | reach[static_cast<std::size_t>(a.head)];
                if (merged != reach[static_cast<std::size_t>(a.tail)]) {
                    reach[static_cast<std::size_t>(a.tail)] = merged;
                    changed = true;
                }
            }
        }
        const std::uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
        bool sc = true;
        for (Vertex v = 0; v < n && sc; ++v)
            if (reach[static_cast<std::size_t>(v)] != full) sc = false;
        if (!sc) continue;

        Cost total = 0;
        for (Vertex v = 0; v < n; ++v) {
            Weight w = 0;
            for (ArcId id : g.out_arcs(v))
                if (mask & (1u << id)) w = std::max(w, g.arc(id).weight);
            total = checked_add(total, w);
        }
        if (total < best) {
            best = total;
            best_mask = mask;
        }
    }
    if (best == kInfCost) throw InfeasibleError("no strongly connected arc subset exists");
    std::vector<ArcId> ids;
    for (int i = 0; i < m; ++i)
        if (best_mask & (1u << i)) ids.push_back(static_cast<ArcId>(i));
    return make_solution(g, std::move(ids));
}

}  // namespace pac
