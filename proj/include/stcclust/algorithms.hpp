#ifndef STCCLUST_ALGORITHMS_HPP
#define STCCLUST_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "stcclust/fractional.hpp"
#include "stcclust/graph.hpp"
#include "stcclust/pivot.hpp"
#include "stcclust/stc.hpp"

namespace stcc {

/// One result row: lower bound, achieved objective, their ratio, and
/// timings. lb <= ub always holds for the algorithms emitting these; the
/// ratio is 1 when lb = ub = 0 and undefined (nullopt) when only the upper
/// bound exists.
struct AlgoReport {
    std::string graph_name;
    Node n = 0;
    std::int64_t m = 0;
    std::string algorithm;
    double lb = 0.0;
    std::int64_t ub = 0;
    std::optional<double> ratio;
    double lb_seconds = 0.0;
    double round_seconds = 0.0;
    std::uint64_t seed = 0;
    int reps = 1;
    std::string status = "ok";
};

std::optional<double> make_ratio(double lb, std::int64_t ub);

struct RoundOptions {
    int reps = 100;
    std::uint64_t seed = 0;
    std::uint64_t order_seed = 0;  // matching order; 0 = natural
    int threads = 1;
    double time_limit_seconds = 0.0;  // 0 = unlimited; checked between repetitions
};

/// Where the pivot rounding of the editing pipeline runs: on the flipped
/// derived graph (the analyzed variant) or on the input graph itself.
enum class RoundTarget { derived, original };

struct AlgoResult {
    AlgoReport report;
    Clustering clustering;
    StcLabeling labeling;   // empty for rounding-only algorithms
    PivotInstance instance; // holds a pointer to the input graph
};

/// Matching lower bound, edge deletion, best-of-reps pivoting. Output is
/// always a valid cluster deletion solution (every cluster a clique).
AlgoResult mfp_cd(const Graph& g, const RoundOptions& opt = {});

/// Matching lower bound in the wedge hypergraph, pair flipping, best-of-reps
/// pivoting on the chosen target graph; evaluated under cluster editing.
AlgoResult mfp_ce(const Graph& g, const RoundOptions& opt = {},
                  RoundTarget target = RoundTarget::derived);

/// Deterministic variants: one run of deterministic pivoting with unit
/// budgets on the covered pairs. Costs are hard-bounded by twice the cover
/// size (no expectation involved).
AlgoResult mfp_cd_det(const Graph& g, std::uint64_t order_seed = 0);
AlgoResult mfp_ce_det(const Graph& g, std::uint64_t order_seed = 0);

/// Rounds a feasible plain-flavor fractional solution: keep edges with value
/// below 1/2, pivot best-of-reps, lower bound is the fractional objective.
/// Output is always cluster-deletion feasible. Throws
/// InfeasibleSolutionError on infeasible or incomplete input.
AlgoResult lp_round_stc(const Graph& g, const FractionalSolution& sol,
                        const RoundOptions& opt = {});

/// Plus-flavor analogue for cluster editing: keep pairs with value below
/// 1/2; the lower bound adds, per non-edge pair present in the solution, one
/// minus its value.
AlgoResult lp_round_stcplus(const Graph& g, const FractionalSolution& sol,
                            const RoundOptions& opt = {});

/// Best-of-reps plain pivoting on g itself, evaluated as cluster editing.
/// Carries no lower bound of its own.
AlgoResult pivot_baseline(const Graph& g, const RoundOptions& opt = {});

/// Certified quality of an externally produced clustering against a known
/// lower bound. Throws InfeasibleSolutionError for a deletion-infeasible
/// clustering and std::invalid_argument when lb is 0 but the cost is not.
double aposteriori_ratio(const Graph& g, const Clustering& c, ObjectiveKind kind, double lb);

}  // namespace stcc

#endif
