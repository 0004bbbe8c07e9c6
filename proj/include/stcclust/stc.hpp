#ifndef STCCLUST_STC_HPP
#define STCCLUST_STC_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stcclust/graph.hpp"
#include "stcclust/wedges.hpp"

namespace stcc {

/// Weak/strong edge labeling together with the wedge matching that produced
/// it. weak_edges is a subset of E; added_pairs is a subset of the non-edges
/// (always empty for the plain flavor). matching_size is the number of
/// matched wedges and is the combinatorial lower bound carried by the
/// labeling.
struct StcLabeling {
    StcFlavor flavor = StcFlavor::stc;
    std::vector<Pair> weak_edges;
    std::vector<Pair> added_pairs;
    std::vector<OpenWedge> matched_wedges;
    std::int64_t matching_size = 0;

    std::int64_t cover_size() const {
        return static_cast<std::int64_t>(weak_edges.size() + added_pairs.size());
    }
};

/// Greedy maximal matching over the wedge stream in which a wedge is matched
/// iff neither of its two edges is covered yet; the covered edges become the
/// weak set. matching_size is a lower bound on the optimal cluster deletion
/// cost. order_seed 0 keeps the natural center order; any other seed shuffles
/// the centers deterministically.
StcLabeling match_cd(const Graph& g, std::uint64_t order_seed = 0);

/// Greedy maximal matching in the wedge hypergraph: a wedge is matched iff
/// none of its three pairs is covered. Covered edges become weak, covered
/// non-edges become added pairs. matching_size lower-bounds the optimal
/// cluster editing cost.
StcLabeling match_ce(const Graph& g, std::uint64_t order_seed = 0);

/// Full wedge scan: true iff every open wedge of g touches the labeling
/// (one of its two edges weak; for the plus flavor, the non-adjacent pair
/// being an added pair also counts).
bool check_stc_feasible(const Graph& g, const StcLabeling& lab);

/// Text export: header `flavor matching_size`, then `W u v` per weak edge and
/// `A u v` per added pair (original labels).
void write_labeling(const Graph& g, const StcLabeling& lab, std::ostream& out);
void write_labeling(const Graph& g, const StcLabeling& lab, const std::string& path);

}  // namespace stcc

#endif
