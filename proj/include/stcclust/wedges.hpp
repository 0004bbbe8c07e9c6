#ifndef STCCLUST_WEDGES_HPP
#define STCCLUST_WEDGES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "stcclust/graph.hpp"

namespace stcc {

/// Node triple with (i,k) and (j,k) edges and (i,j) a non-edge; k is the
/// center and i < j.
struct OpenWedge {
    Node i = 0;
    Node j = 0;
    Node k = 0;

    friend bool operator==(const OpenWedge&, const OpenWedge&) = default;
};

/// Streams every open wedge to `visit(const OpenWedge&)` and returns the
/// wedge count. Order is deterministic: centers ascending, and per center the
/// pairs (i,j) lexicographic over the sorted adjacency of the center.
template <typename Visitor>
std::int64_t for_each_wedge(const Graph& g, Visitor&& visit) {
    std::int64_t count = 0;
    for (Node k = 0; k < g.node_count(); ++k) {
        auto nb = g.neighbors(k);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                ++count;
                visit(OpenWedge{nb[a], nb[b], k});
            }
        }
    }
    return count;
}

/// Same stream, but centers processed in the given order (ids within a center
/// stay lexicographic). Used for seeded matching orders.
template <typename Visitor>
std::int64_t for_each_wedge_ordered(const Graph& g, std::span<const Node> center_order,
                                    Visitor&& visit) {
    std::int64_t count = 0;
    for (Node k : center_order) {
        auto nb = g.neighbors(k);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                ++count;
                visit(OpenWedge{nb[a], nb[b], k});
            }
        }
    }
    return count;
}

/// Number of open wedges, without materializing anything.
std::int64_t wedge_count(const Graph& g);

/// Graph on the edges of g: one node per edge (indexed by edge id), one edge
/// per open wedge joining the wedge's two g-edges.
struct GallaiGraph {
    std::int64_t node_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
};

/// 3-uniform hypergraph on all node pairs of g: one hyperedge {ij, ik, jk}
/// per open wedge (i,j,k). Node pairs are identified by pair_key.
struct WedgeHypergraph {
    std::int64_t node_count = 0;  // n*(n-1)/2 pair nodes
    std::vector<std::array<PairKey, 3>> hyperedges;
};

/// Materializations are intended for diagnostics and small instances; both
/// throw ResourceLimitError when the wedge count exceeds `cap`.
GallaiGraph build_gallai(const Graph& g, std::int64_t cap = 100'000'000);
WedgeHypergraph build_wedge_hypergraph(const Graph& g, std::int64_t cap = 100'000'000);

}  // namespace stcc

#endif
