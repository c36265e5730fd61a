#include "bounds.hpp"

#include <algorithm>

#include "errors.hpp"

namespace pac {

LowerBound lb_trivial(const Instance& g) {
    const Vertex n = g.vertex_count();
    LowerBound lb;
    lb.ell.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        auto out = g.out_arcs(v);
        if (out.empty()) {
            if (n >= 2) throw PacError("vertex " + std::to_string(v + 1) + " has no outgoing arc");
            continue;
        }
        Weight best = g.arc(out[0]).weight;
        for (ArcId id : out) best = std::min(best, g.arc(id).weight);
        lb.ell[static_cast<std::size_t>(v)] = best;
    }
    return lb;
}

LowerBound lb_unique_in_arc(const Instance& g) {
    LowerBound lb = lb_trivial(g);
    const Vertex n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        auto in = g.in_arcs(u);
        if (in.size() != 1) continue;
        const Arc& a = g.arc(in[0]);
        lb.ell[static_cast<std::size_t>(a.tail)] =
            std::max(lb.ell[static_cast<std::size_t>(a.tail)], a.weight);
    }
    return lb;
}

LowerBound lb_combined(const Instance& g) {
    return lb_unique_in_arc(g);  // already includes the trivial bound pointwise
}

LowerBound lower_bound(const Instance& g, LbKind kind) {
    switch (kind) {
        case LbKind::Trivial: return lb_trivial(g);
        case LbKind::UniqueIn: return lb_unique_in_arc(g);
        case LbKind::Both: return lb_combined(g);
    }
    throw PacError("unknown lower bound kind");
}

ObligatorySubgraph obligatory_subgraph(const Instance& g, const LowerBound& lb) {
    const Vertex n = g.vertex_count();
    ObligatorySubgraph obl;
    obl.obligatory.assign(static_cast<std::size_t>(g.arc_count()), 0);
    obl.obl_max.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(g.arc_count()); ++i) {
        const Arc& a = g.arcs()[i];
        if (a.weight <= lb.ell[static_cast<std::size_t>(a.tail)]) {
            obl.obligatory[i] = 1;
            obl.arc_ids.push_back(static_cast<ArcId>(i));
            obl.obl_max[static_cast<std::size_t>(a.tail)] =
                std::max(obl.obl_max[static_cast<std::size_t>(a.tail)], a.weight);
        }
    }
    obl.scc = scc_decompose(g, obl.arc_ids);
    return obl;
}

}  // namespace pac
