#ifndef STCCLUST_TESTS_SUPPORT_HPP
#define STCCLUST_TESTS_SUPPORT_HPP

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "stcclust/graph.hpp"
#include "stcclust/rng.hpp"

namespace testsupport {

using stcc::Graph;
using stcc::Node;
using stcc::Pair;

inline Graph path_graph(Node n) {
    std::vector<Pair> edges;
    for (Node i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(Node n) {
    std::vector<Pair> edges;
    for (Node i = 0; i < n; ++i)
        for (Node j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

/// Star with center 0 and `leaves` leaves 1..leaves.
inline Graph star_graph(Node leaves) {
    std::vector<Pair> edges;
    for (Node i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, std::move(edges));
}

inline Graph cycle_graph(Node n) {
    std::vector<Pair> edges;
    for (Node i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph er_graph(Node n, double p, std::uint64_t seed) {
    stcc::Rng rng(seed);
    std::vector<Pair> edges;
    for (Node i = 0; i < n; ++i)
        for (Node j = i + 1; j < n; ++j)
            if (rng.next_unit() < p) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

/// Graph from an edge-set bitmask over the lexicographic pair order of n
/// nodes (pair (i,j), i<j, has rank i*(2n-i-1)/2 + (j-i-1)).
inline Graph graph_from_mask(Node n, std::uint64_t mask) {
    std::vector<Pair> edges;
    int bit = 0;
    for (Node i = 0; i < n; ++i)
        for (Node j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

inline bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<Node> stack = {0};
    seen[0] = 1;
    Node reached = 1;
    while (!stack.empty()) {
        Node u = stack.back();
        stack.pop_back();
        for (Node v : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == g.node_count();
}

/// Calls fn(graph) for every connected graph on exactly n labeled nodes.
template <typename Fn>
void for_each_connected_graph(Node n, Fn&& fn) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (is_connected(g)) fn(g);
    }
}

/// Unique temp file that deletes itself.
class TempFile {
public:
    explicit TempFile(const std::string& contents = "") {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("stcclust_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter++)))
                    .string();
        if (!contents.empty()) {
            std::ofstream f(path_);
            f << contents;
        }
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace testsupport

#endif
