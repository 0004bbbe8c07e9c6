#ifndef STCCLUST_PIVOT_HPP
#define STCCLUST_PIVOT_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stcclust/graph.hpp"

namespace stcc {

/// Sparse nonnegative budget per node pair; pairs without an entry have
/// budget 0.
struct PairBudgets {
    std::unordered_map<PairKey, double> values;

    double at(Node u, Node v) const {
        auto it = values.find(pair_key(u, v));
        return it == values.end() ? 0.0 : it->second;
    }

    double total() const {
        double s = 0.0;
        for (const auto& [k, v] : values) s += v;
        return s;
    }

    void set(Node u, Node v, double b) { values[pair_key(u, v)] = b; }
};

/// Weighted clustering instance driving pivot rounding: the objective kind
/// fixes the per-pair attraction/repulsion weights relative to the base
/// graph, and the derived graph is the one actually pivoted on.
///
/// Weights: edges of the base graph have (w+, w-) = (1, 0); non-edges have
/// (0, 1) for cluster editing and (0, infinity) for cluster deletion. The
/// infinite repulsion is a marker, never an arithmetic value.
struct PivotInstance {
    ObjectiveKind kind = ObjectiveKind::cluster_editing;
    const Graph* base = nullptr;
    Graph derived;
    PairBudgets budgets;

    double wplus(Node u, Node v) const { return base->has_edge(u, v) ? 1.0 : 0.0; }
    bool wminus_infinite(Node u, Node v) const {
        return kind == ObjectiveKind::cluster_deletion && !base->has_edge(u, v);
    }
    double wminus(Node u, Node v) const {
        if (base->has_edge(u, v)) return 0.0;
        return kind == ObjectiveKind::cluster_editing ? 1.0 : 0.0;  // infinite case flagged separately
    }
};

/// Standard pivoting: repeatedly pick an unclustered node uniformly at random
/// and cluster it with its unclustered neighbors in the derived graph.
/// Deterministic given the seed.
Clustering pivot_random(const Graph& derived, std::uint64_t seed);

/// Deterministic pivoting. Each round scores every remaining node k by the
/// ratio P_k of the weighted mistakes that pivoting on k would charge
/// (derived-graph edges losing exactly one endpoint to the new cluster, plus
/// non-adjacent pairs swallowed together) to the budgets of those pairs, and
/// pivots on the argmin (smallest id on ties). P_k with an empty mistake set
/// is 0; positive mistake weight over zero budget scores infinite and is
/// never selected. Throws InvalidInstanceError when every remaining node
/// scores infinite, which valid budget conditions rule out.
Clustering pivot_deterministic(const PivotInstance& inst);

struct BudgetViolation {
    int condition = 0;        // 1: per-pair, 2: per-wedge
    Node i = -1, j = -1, k = -1;  // k = -1 for condition 1
    double lhs = 0.0, rhs = 0.0;
    bool infinite_lhs = false;
};

struct BudgetCheck {
    bool pass = true;
    std::vector<BudgetViolation> violations;  // first `max_violations` only
};

/// Verifies the two budget conditions that bound pivot output cost by
/// alpha * (sum of budgets): (1) every derived edge has w- <= alpha*b and
/// every other pair has w+ <= alpha*b; (2) every open wedge of the derived
/// graph, centered at j, has w+_ij + w+_jk + w-_ik <= alpha*(b_ij+b_jk+b_ik).
BudgetCheck check_pivot_budgets(const PivotInstance& inst, double alpha,
                                std::size_t max_violations = 100);

struct ObjectiveValue {
    bool feasible = true;
    std::int64_t cost = 0;
};

/// Disagreement count of a clustering. Cluster editing: edges cut plus
/// non-adjacent co-clustered pairs. Cluster deletion: edges cut, or
/// infeasible when some cluster is not a clique. Co-clustered non-adjacent
/// pairs are counted per cluster, never over all n^2 pairs.
ObjectiveValue eval_objective(const Graph& g, const Clustering& c, ObjectiveKind kind);

}  // namespace stcc

#endif
