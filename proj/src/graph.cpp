#include "stcclust/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stcc {

Graph Graph::from_edges(Node n, std::vector<Pair> edges, std::vector<std::int64_t> labels) {
    for (const Pair& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw std::out_of_range("edge endpoint outside 0..n-1");
    }
    std::erase_if(edges, [](const Pair& e) { return e.u == e.v; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);

    std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const Pair& e : g.edges_) {
        ++deg[static_cast<std::size_t>(e.u) + 1];
        ++deg[static_cast<std::size_t>(e.v) + 1];
    }
    g.offsets_.assign(deg.begin(), deg.end());
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

    g.nbrs_.resize(static_cast<std::size_t>(g.offsets_[n]));
    g.edge_ids_.resize(g.nbrs_.size());
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t id = 0; id < g.edges_.size(); ++id) {
        const Pair& e = g.edges_[id];
        g.nbrs_[cursor[e.u]] = e.v;
        g.edge_ids_[cursor[e.u]++] = static_cast<std::int64_t>(id);
        g.nbrs_[cursor[e.v]] = e.u;
        g.edge_ids_[cursor[e.v]++] = static_cast<std::int64_t>(id);
    }
    // Adjacency slices must be ascending, with edge ids kept aligned.
    for (Node u = 0; u < n; ++u) {
        auto b = g.offsets_[u], e = g.offsets_[u + 1];
        std::vector<std::pair<Node, std::int64_t>> slice;
        slice.reserve(static_cast<std::size_t>(e - b));
        for (auto i = b; i < e; ++i) slice.emplace_back(g.nbrs_[i], g.edge_ids_[i]);
        std::sort(slice.begin(), slice.end());
        for (auto i = b; i < e; ++i) {
            g.nbrs_[i] = slice[static_cast<std::size_t>(i - b)].first;
            g.edge_ids_[i] = slice[static_cast<std::size_t>(i - b)].second;
        }
    }

    if (labels.empty()) {
        g.labels_.resize(static_cast<std::size_t>(n));
        std::iota(g.labels_.begin(), g.labels_.end(), std::int64_t{0});
    } else {
        if (static_cast<Node>(labels.size()) != n)
            throw std::invalid_argument("label table size != node count");
        g.labels_ = std::move(labels);
    }
    g.label_index_.reserve(static_cast<std::size_t>(n));
    for (Node u = 0; u < n; ++u) g.label_index_.emplace_back(g.labels_[u], u);
    std::sort(g.label_index_.begin(), g.label_index_.end());
    return g;
}

void Graph::check_node(Node u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("node id outside 0..n-1");
}

bool Graph::has_edge(Node u, Node v) const {
    return edge_id(u, v) >= 0;
}

std::int64_t Graph::edge_id(Node u, Node v) const {
    check_node(u);
    check_node(v);
    if (u == v) return -1;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return incident_edge_ids(u)[static_cast<std::size_t>(it - nb.begin())];
}

Node Graph::node_of_label(std::int64_t label) const {
    auto it = std::lower_bound(label_index_.begin(), label_index_.end(),
                               std::make_pair(label, Node{0}));
    if (it == label_index_.end() || it->first != label) return -1;
    return it->second;
}

Clustering Clustering::from_assignment(std::vector<int> raw) {
    Clustering c;
    c.assignment.assign(raw.size(), -1);
    std::vector<int> remap;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        int id = raw[i];
        if (id < 0) throw std::invalid_argument("negative cluster id");
        if (static_cast<std::size_t>(id) >= remap.size()) remap.resize(static_cast<std::size_t>(id) + 1, -1);
        if (remap[static_cast<std::size_t>(id)] < 0) remap[static_cast<std::size_t>(id)] = c.k++;
        c.assignment[i] = remap[static_cast<std::size_t>(id)];
    }
    return c;
}

int Clustering::size_of(int cluster) const {
    int s = 0;
    for (int a : assignment) s += (a == cluster);
    return s;
}

std::vector<std::vector<Node>> Clustering::clusters() const {
    std::vector<std::vector<Node>> out(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < assignment.size(); ++i)
        out[static_cast<std::size_t>(assignment[i])].push_back(static_cast<Node>(i));
    return out;
}

}  // namespace stcc
