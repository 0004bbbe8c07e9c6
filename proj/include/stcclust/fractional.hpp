#ifndef STCCLUST_FRACTIONAL_HPP
#define STCCLUST_FRACTIONAL_HPP

#include <iosfwd>
#include <string>
#include <unordered_map>

#include "stcclust/graph.hpp"

namespace stcc {

/// Fractional labeling values in [0,1], produced by an external solver and
/// consumed here for rounding.
///
/// Plain flavor: one value z per edge of G (z = 1 means fully weak).
/// Plus flavor: separation values x over node pairs; pairs absent from the
/// file default to x = 1 (fully separated non-edge). Every edge must be
/// present in either flavor.
struct FractionalSolution {
    StcFlavor flavor = StcFlavor::stc;
    std::unordered_map<PairKey, double> values;

    bool has(Node u, Node v) const { return values.contains(pair_key(u, v)); }

    /// Value for a pair, applying the plus-flavor default of 1 for missing
    /// pairs. Throws InfeasibleSolutionError for a missing edge value.
    double value(const Graph& g, Node u, Node v) const;
};

/// File format: header line `STC` or `STC+`, then `u v value` lines keyed by
/// original node labels.
FractionalSolution load_fractional(const std::string& path, const Graph& g);
FractionalSolution read_fractional(std::istream& in, const Graph& g,
                                   const std::string& name = "<stream>");

/// Throws InfeasibleSolutionError unless the solution satisfies every
/// open-wedge constraint of g within `tol`, has a value for every edge, and
/// (plain flavor) references only edges.
void check_fractional_feasible(const Graph& g, const FractionalSolution& sol,
                               double tol = 1e-9);

}  // namespace stcc

#endif
