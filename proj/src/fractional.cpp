#include "stcclust/fractional.hpp"

#include <fstream>
#include <sstream>

#include "stcclust/wedges.hpp"

namespace stcc {

double FractionalSolution::value(const Graph& g, Node u, Node v) const {
    auto it = values.find(pair_key(u, v));
    if (it != values.end()) return it->second;
    if (g.has_edge(u, v))
        throw InfeasibleSolutionError("missing value for edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")");
    if (flavor == StcFlavor::stc)
        throw InfeasibleSolutionError("plain-flavor solution only defines values on edges");
    return 1.0;
}

FractionalSolution read_fractional(std::istream& in, const Graph& g, const std::string& name) {
    FractionalSolution sol;
    std::string line;
    std::int64_t lineno = 0;

    // Header: flavor token.
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        if (tok == "STC")
            sol.flavor = StcFlavor::stc;
        else if (tok == "STC+")
            sol.flavor = StcFlavor::stc_plus;
        else
            throw ParseError(name + ":" + std::to_string(lineno) + ": expected STC or STC+ header");
        break;
    }

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line);
        std::int64_t la, lb;
        double x;
        if (!(ss >> la >> lb >> x))
            throw ParseError(name + ":" + std::to_string(lineno) + ": expected `u v value`");
        Node u = g.node_of_label(la);
        Node v = g.node_of_label(lb);
        if (u < 0 || v < 0)
            throw ParseError(name + ":" + std::to_string(lineno) + ": unknown node label");
        if (u == v)
            throw ParseError(name + ":" + std::to_string(lineno) + ": self pair");
        if (x < -1e-9 || x > 1.0 + 1e-9)
            throw InfeasibleSolutionError(name + ":" + std::to_string(lineno) +
                                          ": value outside [0,1]");
        sol.values[pair_key(u, v)] = std::min(1.0, std::max(0.0, x));
    }
    return sol;
}

FractionalSolution load_fractional(const std::string& path, const Graph& g) {
    std::ifstream f(path);
    if (!f) throw ParseError(path + ": cannot open file");
    return read_fractional(f, g, path);
}

void check_fractional_feasible(const Graph& g, const FractionalSolution& sol, double tol) {
    for (const Pair& e : g.edges()) {
        if (!sol.has(e.u, e.v))
            throw InfeasibleSolutionError("missing value for edge (" + std::to_string(e.u) + "," +
                                          std::to_string(e.v) + ")");
    }
    if (sol.flavor == StcFlavor::stc) {
        for (const auto& [key, x] : sol.values) {
            Pair p = pair_from_key(key);
            if (!g.has_edge(p.u, p.v))
                throw InfeasibleSolutionError("plain-flavor solution references non-edge (" +
                                              std::to_string(p.u) + "," + std::to_string(p.v) + ")");
            (void)x;
        }
        std::string firstbad;
        for_each_wedge(g, [&](const OpenWedge& w) {
            if (!firstbad.empty()) return;
            double zik = sol.value(g, w.i, w.k);
            double zjk = sol.value(g, w.j, w.k);
            if (zik + zjk < 1.0 - tol)
                firstbad = "wedge (" + std::to_string(w.i) + "," + std::to_string(w.j) + ";" +
                           std::to_string(w.k) + "): " + std::to_string(zik) + " + " +
                           std::to_string(zjk) + " < 1";
        });
        if (!firstbad.empty())
            throw InfeasibleSolutionError("infeasible fractional solution: " + firstbad);
        return;
    }

    std::string firstbad;
    for_each_wedge(g, [&](const OpenWedge& w) {
        if (!firstbad.empty()) return;
        double xij = sol.value(g, w.i, w.j);
        double xik = sol.value(g, w.i, w.k);
        double xjk = sol.value(g, w.j, w.k);
        if (xij > xik + xjk + tol)
            firstbad = "wedge (" + std::to_string(w.i) + "," + std::to_string(w.j) + ";" +
                       std::to_string(w.k) + "): " + std::to_string(xij) + " > " +
                       std::to_string(xik) + " + " + std::to_string(xjk);
    });
    if (!firstbad.empty())
        throw InfeasibleSolutionError("infeasible fractional solution: " + firstbad);
}

}  // namespace stcc
