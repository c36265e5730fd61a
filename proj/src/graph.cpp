#include "graph.hpp"

#include <algorithm>

#include "errors.hpp"

namespace pac {

namespace {

std::uint64_t pack(Vertex tail, Vertex head) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tail)) << 32) |
           static_cast<std::uint32_t>(head);
}

}  // namespace

Cost checked_add(Cost a, Cost b) {
    Cost r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

Instance Instance::create(Vertex n, std::vector<Arc> arcs) {
    if (n < 1) throw PacError("vertex count must be at least 1");
    Instance g;
    g.n_ = n;
    g.arcs_ = std::move(arcs);

    const std::size_t m = g.arcs_.size();
    g.key_sorted_.resize(m);
    g.key_arc_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Arc& a = g.arcs_[i];
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw PacError("arc endpoint out of range");
        if (a.tail == a.head) throw PacError("self-loops are not allowed");
        if (a.weight > kMaxWeight) throw PacError("arc weight exceeds 2^63-1");
        g.key_sorted_[i] = pack(a.tail, a.head);
        g.key_arc_[i] = static_cast<ArcId>(i);
    }
    std::sort(g.key_arc_.begin(), g.key_arc_.end(), [&](ArcId x, ArcId y) {
        return g.key_sorted_[static_cast<std::size_t>(x)] <
               g.key_sorted_[static_cast<std::size_t>(y)];
    });
    std::sort(g.key_sorted_.begin(), g.key_sorted_.end());
    for (std::size_t i = 1; i < m; ++i)
        if (g.key_sorted_[i] == g.key_sorted_[i - 1])
            throw PacError("duplicate arc " +
                           std::to_string((g.key_sorted_[i] >> 32) + 1) + "->" +
                           std::to_string((g.key_sorted_[i] & 0xffffffffu) + 1));

    g.out_start_.assign(static_cast<std::size_t>(n) + 1, 0);
    g.in_start_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& a : g.arcs_) {
        ++g.out_start_[static_cast<std::size_t>(a.tail) + 1];
        ++g.in_start_[static_cast<std::size_t>(a.head) + 1];
    }
    for (Vertex v = 0; v < n; ++v) {
        g.out_start_[static_cast<std::size_t>(v) + 1] += g.out_start_[v];
        g.in_start_[static_cast<std::size_t>(v) + 1] += g.in_start_[v];
    }
    g.out_flat_.resize(m);
    g.in_flat_.resize(m);
    std::vector<std::int64_t> out_pos(g.out_start_.begin(), g.out_start_.end() - 1);
    std::vector<std::int64_t> in_pos(g.in_start_.begin(), g.in_start_.end() - 1);
    for (std::size_t i = 0; i < m; ++i) {
        const Arc& a = g.arcs_[i];
        g.out_flat_[static_cast<std::size_t>(out_pos[a.tail]++)] = static_cast<ArcId>(i);
        g.in_flat_[static_cast<std::size_t>(in_pos[a.head]++)] = static_cast<ArcId>(i);
    }
    return g;
}

std::span<const ArcId> Instance::out_arcs(Vertex v) const {
    return {out_flat_.data() + out_start_[v],
            static_cast<std::size_t>(out_start_[static_cast<std::size_t>(v) + 1] - out_start_[v])};
}

std::span<const ArcId> Instance::in_arcs(Vertex v) const {
    return {in_flat_.data() + in_start_[v],
            static_cast<std::size_t>(in_start_[static_cast<std::size_t>(v) + 1] - in_start_[v])};
}

std::optional<ArcId> Instance::find_arc(Vertex tail, Vertex head) const {
    const std::uint64_t key = pack(tail, head);
    auto it = std::lower_bound(key_sorted_.begin(), key_sorted_.end(), key);
    if (it == key_sorted_.end() || *it != key) return std::nullopt;
    return key_arc_[static_cast<std::size_t>(it - key_sorted_.begin())];
}

Cost subset_cost(const Instance& g, std::span<const Vertex> vertices,
                 std::span<const ArcId> arc_ids) {
    const Vertex n = g.vertex_count();
    std::vector<char> wanted(static_cast<std::size_t>(n), 0);
    for (Vertex v : vertices) wanted[static_cast<std::size_t>(v)] = 1;
    std::vector<Weight> best(static_cast<std::size_t>(n), 0);
    std::vector<char> has(static_cast<std::size_t>(n), 0);
    for (ArcId id : arc_ids) {
        const Arc& a = g.arc(id);
        if (!wanted[static_cast<std::size_t>(a.tail)]) continue;
        if (!has[static_cast<std::size_t>(a.tail)] ||
            a.weight > best[static_cast<std::size_t>(a.tail)]) {
            has[static_cast<std::size_t>(a.tail)] = 1;
            best[static_cast<std::size_t>(a.tail)] = a.weight;
        }
    }
    Cost total = 0;
    for (Vertex v : vertices) {
        if (!has[static_cast<std::size_t>(v)]) {
            if (n >= 2) throw MissingOutArcError(v);
            continue;
        }
        total = checked_add(total, best[static_cast<std::size_t>(v)]);
    }
    return total;
}

Cost arcset_cost(const Instance& g, std::span<const ArcId> arc_ids) {
    const Vertex n = g.vertex_count();
    std::vector<Weight> best(static_cast<std::size_t>(n), 0);
    std::vector<char> has(static_cast<std::size_t>(n), 0);
    for (ArcId id : arc_ids) {
        const Arc& a = g.arc(id);
        if (!has[static_cast<std::size_t>(a.tail)] ||
            a.weight > best[static_cast<std::size_t>(a.tail)]) {
            has[static_cast<std::size_t>(a.tail)] = 1;
            best[static_cast<std::size_t>(a.tail)] = a.weight;
        }
    }
    Cost total = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (!has[static_cast<std::size_t>(v)]) {
            if (n >= 2) throw MissingOutArcError(v);
            continue;
        }
        total = checked_add(total, best[static_cast<std::size_t>(v)]);
    }
    return total;
}

namespace {

struct Csr {
    std::vector<std::int64_t> start;
    std::vector<Vertex> to;
};

Csr build_csr(const Instance& g, std::span<const ArcId> arc_ids) {
    const Vertex n = g.vertex_count();
    Csr adj;
    adj.start.assign(static_cast<std::size_t>(n) + 1, 0);
    for (ArcId id : arc_ids) ++adj.start[static_cast<std::size_t>(g.arc(id).tail) + 1];
    for (Vertex v = 0; v < n; ++v)
        adj.start[static_cast<std::size_t>(v) + 1] += adj.start[v];
    adj.to.resize(arc_ids.size());
    std::vector<std::int64_t> pos(adj.start.begin(), adj.start.end() - 1);
    for (ArcId id : arc_ids) {
        const Arc& a = g.arc(id);
        adj.to[static_cast<std::size_t>(pos[a.tail]++)] = a.head;
    }
    return adj;
}

SccIndex tarjan(Vertex n, const Csr& adj) {
    std::vector<std::int32_t> index(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::int64_t>> frames;
    std::vector<std::vector<Vertex>> comps;
    std::int32_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        frames.emplace_back(root, adj.start[root]);
        while (!frames.empty()) {
            Vertex v = frames.back().first;
            std::int64_t& it = frames.back().second;
            if (it < adj.start[static_cast<std::size_t>(v) + 1]) {
                Vertex w = adj.to[static_cast<std::size_t>(it++)];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, adj.start[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    std::vector<Vertex> c;
                    while (true) {
                        Vertex w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        c.push_back(w);
                        if (w == v) break;
                    }
                    comps.push_back(std::move(c));
                }
                frames.pop_back();
                if (!frames.empty()) {
                    Vertex parent = frames.back().first;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }

    // completion order is reverse topological
    std::reverse(comps.begin(), comps.end());
    SccIndex r;
    r.components = std::move(comps);
    r.component_of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < r.components.size(); ++i)
        for (Vertex v : r.components[i])
            r.component_of[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);
    return r;
}

}  // namespace

SccIndex scc_decompose(const Instance& g, std::span<const ArcId> arc_ids) {
    return tarjan(g.vertex_count(), build_csr(g, arc_ids));
}

SccIndex scc_decompose(const Instance& g) {
    std::vector<ArcId> all(static_cast<std::size_t>(g.arc_count()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ArcId>(i);
    return scc_decompose(g, all);
}

bool is_strongly_connected(const Instance& g, std::span<const ArcId> arc_ids) {
    return scc_decompose(g, arc_ids).count() == 1;
}

bool is_strongly_connected(const Instance& g) {
    return scc_decompose(g).count() == 1;
}

std::uint64_t feedback_edge_number(const Instance& g) {
    std::uint64_t edges = 0;
    for (const Arc& a : g.arcs()) {
        if (a.tail < a.head)
            ++edges;
        else if (!g.find_arc(a.head, a.tail))
            ++edges;
    }
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    if (edges + 1 < n) throw PacError("feedback edge number needs a connected graph");
    return edges + 1 - n;
}

Verdict verify_solution(const Instance& g, const Solution& s) {
    Verdict v;
    std::vector<ArcId> ids;
    ids.reserve(s.arcs.size());
    std::vector<std::pair<Vertex, Vertex>> seen = s.arcs;
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i] == seen[i - 1])
            v.violations.push_back("duplicate arc " + std::to_string(seen[i].first + 1) + "->" +
                                   std::to_string(seen[i].second + 1));
    for (auto [t, h] : s.arcs) {
        if (t < 0 || t >= g.vertex_count() || h < 0 || h >= g.vertex_count()) {
            v.violations.push_back("arc endpoint out of range: " + std::to_string(t + 1) + "->" +
                                   std::to_string(h + 1));
            continue;
        }
        auto id = g.find_arc(t, h);
        if (!id) {
            v.violations.push_back("arc " + std::to_string(t + 1) + "->" + std::to_string(h + 1) +
                                   " is not in the instance");
            continue;
        }
        ids.push_back(*id);
    }
    if (!is_strongly_connected(g, ids))
        v.violations.push_back("subgraph is not a strongly connected spanning subgraph");
    try {
        Cost c = arcset_cost(g, ids);
        if (c != s.cost)
            v.violations.push_back("cost mismatch: claimed " + std::to_string(s.cost) +
                                   ", recomputed " + std::to_string(c));
    } catch (const MissingOutArcError& e) {
        v.violations.push_back(std::string("cost undefined: ") + e.what());
    } catch (const OverflowError&) {
        v.violations.push_back("cost recomputation overflows");
    }
    return v;
}

Solution make_solution(const Instance& g, std::vector<ArcId> arc_ids) {
    std::sort(arc_ids.begin(), arc_ids.end());
    arc_ids.erase(std::unique(arc_ids.begin(), arc_ids.end()), arc_ids.end());
    Solution s;
    s.cost = arcset_cost(g, arc_ids);
    s.arcs.reserve(arc_ids.size());
    for (ArcId id : arc_ids) s.arcs.emplace_back(g.arc(id).tail, g.arc(id).head);
    std::sort(s.arcs.begin(), s.arcs.end());
    return s;
}

}  // namespace pac
