#ifndef STCCLUST_GRAPH_HPP
#define STCCLUST_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "stcclust/types.hpp"

namespace stcc {

/// Immutable simple undirected graph with contiguous node ids 0..n-1 and
/// sorted adjacency lists. Safe to share read-only across threads.
///
/// Edges carry ids 0..m-1 in lexicographic (u,v) order, u < v; the id of the
/// edge behind every adjacency slot is stored alongside the neighbor, so
/// per-edge bookkeeping (covers, deletions) can use plain arrays.
class Graph {
public:
    Graph() = default;

    /// Builds from an explicit node count and edge list. Self-loops and
    /// duplicates are dropped. `labels`, when given, maps node id to the
    /// original input label (defaults to the identity).
    static Graph from_edges(Node n, std::vector<Pair> edges,
                            std::vector<std::int64_t> labels = {});

    Node node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    /// Sorted lexicographic edge list; position == edge id.
    const std::vector<Pair>& edges() const { return edges_; }

    std::span<const Node> neighbors(Node u) const {
        return {nbrs_.data() + offsets_[u], nbrs_.data() + offsets_[u + 1]};
    }

    /// Edge ids aligned with neighbors(u).
    std::span<const std::int64_t> incident_edge_ids(Node u) const {
        return {edge_ids_.data() + offsets_[u], edge_ids_.data() + offsets_[u + 1]};
    }

    /// Start of u's slice in the flat adjacency array; slot index
    /// adjacency_offset(u) + i corresponds to neighbors(u)[i]. Useful for
    /// per-direction bookkeeping without touching the edge-id table.
    std::int64_t adjacency_offset(Node u) const { return offsets_[u]; }

    Node degree(Node u) const { return static_cast<Node>(offsets_[u + 1] - offsets_[u]); }

    /// True iff {u,v} is an edge; (u,u) is never an edge.
    /// Throws std::out_of_range for ids outside 0..n-1.
    bool has_edge(Node u, Node v) const;

    /// Edge id of {u,v}, or -1 when not an edge. Same range checks as has_edge.
    std::int64_t edge_id(Node u, Node v) const;

    std::int64_t label(Node u) const { return labels_[u]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    /// Node id for an original label, or -1 if the label is unknown.
    Node node_of_label(std::int64_t label) const;

private:
    Node n_ = 0;
    std::vector<Pair> edges_;
    std::vector<std::int64_t> offsets_;
    std::vector<Node> nbrs_;
    std::vector<std::int64_t> edge_ids_;
    std::vector<std::int64_t> labels_;
    std::vector<std::pair<std::int64_t, Node>> label_index_;  // sorted by label

    void check_node(Node u) const;
};

/// Partition of 0..n-1 into clusters 0..k-1, every cluster nonempty.
struct Clustering {
    std::vector<int> assignment;
    int k = 0;

    /// Normalizes arbitrary nonnegative cluster labels to 0..k-1 in
    /// first-appearance order.
    static Clustering from_assignment(std::vector<int> raw);

    int size_of(int cluster) const;
    std::vector<std::vector<Node>> clusters() const;
};

}  // namespace stcc

#endif
