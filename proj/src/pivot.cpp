#include "stcclust/pivot.hpp"

#include <cmath>
#include <limits>

#include "stcclust/rng.hpp"
#include "stcclust/wedges.hpp"

namespace stcc {

Clustering pivot_random(const Graph& derived, std::uint64_t seed) {
    const Node n = derived.node_count();
    std::vector<Node> order = identity_order(n);
    Rng rng(seed);
    rng.shuffle(order);

    Clustering c;
    c.assignment.assign(static_cast<std::size_t>(n), -1);
    for (Node p : order) {
        if (c.assignment[static_cast<std::size_t>(p)] != -1) continue;
        const int id = c.k++;
        c.assignment[static_cast<std::size_t>(p)] = id;
        for (Node v : derived.neighbors(p))
            if (c.assignment[static_cast<std::size_t>(v)] == -1)
                c.assignment[static_cast<std::size_t>(v)] = id;
    }
    return c;
}

namespace {

struct PivotScore {
    double ratio = 0.0;
    bool infinite = false;
};

// Mistake-to-budget ratio of pivoting on k among the remaining (alive) nodes.
// Mistakes: derived edges (i,j), i,j != k, with exactly one endpoint adjacent
// to k (charged w+), and non-adjacent pairs (i,j) of k-neighbors (charged w-).
PivotScore score_pivot(const PivotInstance& inst, Node k, const std::vector<char>& alive,
                       std::vector<Node>& nb_scratch) {
    const Graph& d = inst.derived;
    double num = 0.0, den = 0.0;
    bool inf_num = false;

    nb_scratch.clear();
    for (Node v : d.neighbors(k))
        if (alive[static_cast<std::size_t>(v)]) nb_scratch.push_back(v);

    // Non-adjacent neighbor pairs swallowed into k's cluster.
    for (std::size_t a = 0; a < nb_scratch.size(); ++a) {
        for (std::size_t b = a + 1; b < nb_scratch.size(); ++b) {
            Node i = nb_scratch[a], j = nb_scratch[b];
            if (d.has_edge(i, j)) continue;
            if (inst.wminus_infinite(i, j))
                inf_num = true;
            else
                num += inst.wminus(i, j);
            den += inst.budgets.at(i, j);
        }
    }
    // Derived edges cut by the cluster: (i,j) with i adjacent to k, j not.
    for (Node i : nb_scratch) {
        for (Node j : d.neighbors(i)) {
            if (j == k || !alive[static_cast<std::size_t>(j)]) continue;
            if (d.has_edge(j, k)) continue;  // visited from i only, never double counted
            num += inst.wplus(i, j);
            den += inst.budgets.at(i, j);
        }
    }

    // Positive mistake weight with zero budget makes k unusable as a pivot;
    // the caller skips it. An empty mistake set scores 0.
    PivotScore s;
    if (inf_num || (num > 0.0 && den == 0.0)) {
        s.infinite = true;
    } else if (num > 0.0) {
        s.ratio = num / den;
    }
    return s;
}

}  // namespace

Clustering pivot_deterministic(const PivotInstance& inst) {
    const Graph& d = inst.derived;
    const Node n = d.node_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    Node remaining = n;

    Clustering c;
    c.assignment.assign(static_cast<std::size_t>(n), -1);
    std::vector<Node> nb_scratch;

    while (remaining > 0) {
        Node best = -1;
        PivotScore best_score;
        for (Node k = 0; k < n; ++k) {
            if (!alive[static_cast<std::size_t>(k)]) continue;
            PivotScore s = score_pivot(inst, k, alive, nb_scratch);
            bool better;
            if (best < 0)
                better = true;
            else if (s.infinite != best_score.infinite)
                better = !s.infinite;
            else if (s.infinite)
                better = false;
            else
                better = s.ratio < best_score.ratio;
            if (better) {
                best = k;
                best_score = s;
            }
        }
        // Valid budget conditions guarantee some remaining node scores below
        // alpha; if every candidate is unusable the instance is broken.
        if (best_score.infinite)
            throw InvalidInstanceError(
                "every remaining pivot has positive mistake weight and zero budget");
        const int id = c.k++;
        c.assignment[static_cast<std::size_t>(best)] = id;
        alive[static_cast<std::size_t>(best)] = 0;
        --remaining;
        for (Node v : d.neighbors(best)) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            c.assignment[static_cast<std::size_t>(v)] = id;
            alive[static_cast<std::size_t>(v)] = 0;
            --remaining;
        }
    }
    return c;
}

BudgetCheck check_pivot_budgets(const PivotInstance& inst, double alpha,
                                std::size_t max_violations) {
    // Tiny slack absorbs float noise in budgets that come from fractional
    // solutions.
    constexpr double kEps = 1e-9;
    BudgetCheck out;
    auto record = [&](BudgetViolation v) {
        out.pass = false;
        if (out.violations.size() < max_violations) out.violations.push_back(v);
    };

    const Graph& d = inst.derived;
    const Graph& g = *inst.base;

    // Condition 1 on derived edges: repulsion within budget.
    for (const Pair& e : d.edges()) {
        double rhs = alpha * inst.budgets.at(e.u, e.v);
        if (inst.wminus_infinite(e.u, e.v)) {
            record({1, e.u, e.v, -1, std::numeric_limits<double>::infinity(), rhs, true});
        } else if (inst.wminus(e.u, e.v) > rhs + kEps) {
            record({1, e.u, e.v, -1, inst.wminus(e.u, e.v), rhs, false});
        }
    }
    // Condition 1 on pairs outside the derived graph: attraction within
    // budget. w+ is zero off the base edge set, so scanning E suffices.
    for (const Pair& e : g.edges()) {
        if (d.has_edge(e.u, e.v)) continue;
        double rhs = alpha * inst.budgets.at(e.u, e.v);
        if (inst.wplus(e.u, e.v) > rhs + kEps)
            record({1, e.u, e.v, -1, inst.wplus(e.u, e.v), rhs, false});
    }

    // Condition 2 on open wedges of the derived graph. The stream emits
    // (i, j, center); the wedge centered at the middle node has its
    // non-adjacent pair charged w-.
    for_each_wedge(d, [&](const OpenWedge& w) {
        double rhs = alpha * (inst.budgets.at(w.i, w.k) + inst.budgets.at(w.j, w.k) +
                              inst.budgets.at(w.i, w.j));
        if (inst.wminus_infinite(w.i, w.j)) {
            record({2, w.i, w.j, w.k, std::numeric_limits<double>::infinity(), rhs, true});
            return;
        }
        double lhs = inst.wplus(w.i, w.k) + inst.wplus(w.j, w.k) + inst.wminus(w.i, w.j);
        if (lhs > rhs + kEps) record({2, w.i, w.j, w.k, lhs, rhs, false});
    });
    return out;
}

ObjectiveValue eval_objective(const Graph& g, const Clustering& c, ObjectiveKind kind) {
    const Node n = g.node_count();
    if (static_cast<Node>(c.assignment.size()) != n)
        throw std::invalid_argument("clustering size does not match graph");

    std::vector<std::int64_t> cluster_size(static_cast<std::size_t>(c.k), 0);
    for (int a : c.assignment) ++cluster_size[static_cast<std::size_t>(a)];

    std::vector<std::int64_t> internal(static_cast<std::size_t>(c.k), 0);
    std::int64_t cut = 0;
    for (const Pair& e : g.edges()) {
        int cu = c.assignment[static_cast<std::size_t>(e.u)];
        int cv = c.assignment[static_cast<std::size_t>(e.v)];
        if (cu == cv)
            ++internal[static_cast<std::size_t>(cu)];
        else
            ++cut;
    }

    ObjectiveValue out;
    if (kind == ObjectiveKind::cluster_deletion) {
        for (int cl = 0; cl < c.k; ++cl) {
            std::int64_t s = cluster_size[static_cast<std::size_t>(cl)];
            if (internal[static_cast<std::size_t>(cl)] != s * (s - 1) / 2) {
                out.feasible = false;
                return out;
            }
        }
        out.cost = cut;
        return out;
    }
    std::int64_t missing = 0;
    for (int cl = 0; cl < c.k; ++cl) {
        std::int64_t s = cluster_size[static_cast<std::size_t>(cl)];
        missing += s * (s - 1) / 2 - internal[static_cast<std::size_t>(cl)];
    }
    out.cost = cut + missing;
    return out;
}

}  // namespace stcc
