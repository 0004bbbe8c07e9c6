#include "stcclust/wedges.hpp"

namespace stcc {

std::int64_t wedge_count(const Graph& g) {
    std::int64_t count = 0;
    for (Node k = 0; k < g.node_count(); ++k) {
        auto nb = g.neighbors(k);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                count += !g.has_edge(nb[a], nb[b]);
    }
    return count;
}

GallaiGraph build_gallai(const Graph& g, std::int64_t cap) {
    std::int64_t total = wedge_count(g);
    if (total > cap)
        throw ResourceLimitError("Gallai graph would have " + std::to_string(total) +
                                 " edges, cap is " + std::to_string(cap));
    GallaiGraph out;
    out.node_count = g.edge_count();
    out.edges.reserve(static_cast<std::size_t>(total));
    for_each_wedge(g, [&](const OpenWedge& w) {
        out.edges.emplace_back(g.edge_id(w.i, w.k), g.edge_id(w.j, w.k));
    });
    return out;
}

WedgeHypergraph build_wedge_hypergraph(const Graph& g, std::int64_t cap) {
    std::int64_t total = wedge_count(g);
    if (total > cap)
        throw ResourceLimitError("wedge hypergraph would have " + std::to_string(total) +
                                 " hyperedges, cap is " + std::to_string(cap));
    WedgeHypergraph out;
    const std::int64_t n = g.node_count();
    out.node_count = n * (n - 1) / 2;
    out.hyperedges.reserve(static_cast<std::size_t>(total));
    for_each_wedge(g, [&](const OpenWedge& w) {
        out.hyperedges.push_back(
            {pair_key(w.i, w.j), pair_key(w.i, w.k), pair_key(w.j, w.k)});
    });
    return out;
}

}  // namespace stcc
