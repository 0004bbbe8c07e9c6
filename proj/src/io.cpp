#include "stcclust/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace stcc {

namespace {

bool parse_int(std::string_view tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

Graph read_edge_list(std::istream& in, const std::string& name) {
    std::unordered_map<std::int64_t, Node> id_of;
    std::vector<std::int64_t> labels;
    std::vector<Pair> edges;
    std::string line;
    std::int64_t lineno = 0;

    auto intern = [&](std::int64_t label) {
        auto [it, fresh] = id_of.try_emplace(label, static_cast<Node>(labels.size()));
        if (fresh) labels.push_back(label);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b))
            throw ParseError(name + ":" + std::to_string(lineno) + ": expected two tokens");
        if (ls >> extra)
            throw ParseError(name + ":" + std::to_string(lineno) + ": trailing tokens");
        std::int64_t la, lb;
        if (!parse_int(a, la) || !parse_int(b, lb))
            throw ParseError(name + ":" + std::to_string(lineno) + ": non-integer node id");
        Node u = intern(la);
        Node w = intern(lb);
        if (u != w) edges.emplace_back(u, w);
    }
    if (labels.empty())
        throw EmptyGraphError(name + ": no nodes");
    const Node n = static_cast<Node>(labels.size());
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph read_matrix_market(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(name + ": empty file");
    std::istringstream hs(line);
    std::string banner, object, fmt, field, symmetry;
    hs >> banner >> object >> fmt >> field >> symmetry;
    if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix")
        throw ParseError(name + ": missing %%MatrixMarket matrix banner");
    if (lower(fmt) != "coordinate")
        throw ParseError(name + ": only coordinate format is supported");
    field = lower(field);
    symmetry = lower(symmetry);
    if (field != "pattern" && field != "real")
        throw ParseError(name + ": unsupported field '" + field + "'");
    if (symmetry != "symmetric" && symmetry != "general")
        throw ParseError(name + ": unsupported symmetry '" + symmetry + "'");
    const bool has_value = field == "real";

    std::int64_t lineno = 1;
    // Size line, after any further % comments.
    std::int64_t rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '%') continue;
        std::istringstream ss(line);
        if (!(ss >> rows >> cols >> nnz))
            throw ParseError(name + ":" + std::to_string(lineno) + ": bad size line");
        break;
    }
    if (rows < 0)
        throw ParseError(name + ": missing size line");
    if (rows != cols)
        throw ParseError(name + ": adjacency matrix must be square");
    if (rows == 0)
        throw EmptyGraphError(name + ": matrix declares zero nodes");

    std::vector<Pair> edges;
    edges.reserve(static_cast<std::size_t>(nnz));
    std::int64_t seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '%') continue;
        std::istringstream ss(line);
        std::int64_t i, j;
        if (!(ss >> i >> j))
            throw ParseError(name + ":" + std::to_string(lineno) + ": bad entry");
        if (has_value) {
            double v;
            if (!(ss >> v))
                throw ParseError(name + ":" + std::to_string(lineno) + ": missing value");
        }
        if (i < 1 || i > rows || j < 1 || j > rows)
            throw ParseError(name + ":" + std::to_string(lineno) + ": index out of range");
        ++seen;
        if (i != j) edges.emplace_back(static_cast<Node>(i - 1), static_cast<Node>(j - 1));
    }
    if (seen != nnz)
        throw ParseError(name + ": entry count " + std::to_string(seen) +
                         " does not match declared nnz " + std::to_string(nnz));
    return Graph::from_edges(static_cast<Node>(rows), std::move(edges));
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(path + ": cannot open file");
    return f;
}

}  // namespace

GraphFormat guess_format(const std::string& path) {
    if (path.size() >= 4 && lower(path.substr(path.size() - 4)) == ".mtx")
        return GraphFormat::matrix_market;
    return GraphFormat::edge_list;
}

Graph read_graph(std::istream& in, GraphFormat format, const std::string& name) {
    return format == GraphFormat::edge_list ? read_edge_list(in, name)
                                            : read_matrix_market(in, name);
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream f = open_or_throw(path);
    return read_graph(f, format, path);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (Node u = 0; u < g.node_count(); ++u)
        out << g.label(u) << ' ' << g.label(u) << '\n';
    for (const Pair& e : g.edges())
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError(path + ": cannot open for writing");
    write_edge_list(g, f);
}

Clustering read_clustering(std::istream& in, const std::string& name) {
    std::vector<int> raw;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::int64_t v;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        if (!parse_int(tok, v) || v < 0)
            throw ParseError(name + ":" + std::to_string(lineno) + ": bad cluster id");
        raw.push_back(static_cast<int>(v));
    }
    if (raw.empty()) throw ParseError(name + ": empty clustering");
    return Clustering::from_assignment(std::move(raw));
}

Clustering load_clustering(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    return read_clustering(f, path);
}

void write_clustering(const Clustering& c, std::ostream& out) {
    for (int a : c.assignment) out << a << '\n';
}

void write_clustering(const Clustering& c, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError(path + ": cannot open for writing");
    write_clustering(c, f);
}

}  // namespace stcc
