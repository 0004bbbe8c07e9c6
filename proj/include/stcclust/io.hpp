#ifndef STCCLUST_IO_HPP
#define STCCLUST_IO_HPP

#include <iosfwd>
#include <string>

#include "stcclust/graph.hpp"

namespace stcc {

enum class GraphFormat { edge_list, matrix_market };

/// Picks matrix_market for .mtx paths, edge_list otherwise.
GraphFormat guess_format(const std::string& path);

/// Loads and standardizes a graph: directions and weights dropped, self-loops
/// removed, parallel edges deduplicated, labels remapped to 0..n-1 in
/// first-appearance order. Matrix-market headers may declare isolated nodes,
/// which are retained.
///
/// Edge lists are one edge per line, two whitespace-separated integer tokens,
/// '#' comment lines skipped. Matrix-market accepts coordinate pattern/real
/// symmetric/general headers only; values are ignored.
///
/// Throws ParseError on malformed input and EmptyGraphError when the input
/// describes no nodes.
Graph load_graph(const std::string& path, GraphFormat format);
Graph read_graph(std::istream& in, GraphFormat format, const std::string& name = "<stream>");

/// Writes an edge list that reloads to an identical graph. One `v v` line per
/// node pins the id of every node (including isolated ones) before the edges;
/// the loader drops those lines as self-loops. Original labels are used.
void write_edge_list(const Graph& g, const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

/// Clustering files: line r holds the cluster id of node r. Ids are
/// normalized to 0..k-1 on load.
Clustering load_clustering(const std::string& path);
Clustering read_clustering(std::istream& in, const std::string& name = "<stream>");
void write_clustering(const Clustering& c, const std::string& path);
void write_clustering(const Clustering& c, std::ostream& out);

}  // namespace stcc

#endif
