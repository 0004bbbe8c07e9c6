#include "stcclust/algorithms.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <thread>
#include <unordered_set>

#include "stcclust/rng.hpp"
#include "stcclust/timer.hpp"

namespace stcc {

std::optional<double> make_ratio(double lb, std::int64_t ub) {
    if (lb > 0.0) return static_cast<double>(ub) / lb;
    if (ub == 0) return 1.0;
    return std::nullopt;
}

namespace {

constexpr std::int64_t kInfeasibleCost = std::numeric_limits<std::int64_t>::max();

void for_each_rep(int reps, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || reps <= 1) {
        for (int r = 0; r < reps; ++r) body(r);
        return;
    }
    threads = std::min(threads, reps);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (int r = next.fetch_add(1); r < reps; r = next.fetch_add(1)) body(r);
        });
    }
    for (auto& th : pool) th.join();
}

struct BestPivot {
    Clustering clustering;
    std::int64_t cost = 0;
    int rep = 0;
};

// Two passes keep the result independent of thread scheduling: per-rep costs
// first, then the winning repetition is re-run to materialize its clustering.
// deadline_seconds 0 means unlimited.
BestPivot best_of_pivots(const Graph& derived, const Graph& eval_graph, ObjectiveKind kind,
                         int reps, std::uint64_t seed, int threads, bool require_feasible,
                         double deadline_seconds = 0.0) {
    std::vector<std::int64_t> costs(static_cast<std::size_t>(reps));
    Stopwatch sw;
    std::atomic<bool> timed_out{false};
    for_each_rep(reps, threads, [&](int rep) {
        if (timed_out.load(std::memory_order_relaxed)) return;
        if (deadline_seconds > 0.0 && sw.seconds() > deadline_seconds) {
            timed_out.store(true, std::memory_order_relaxed);
            return;
        }
        Clustering c = pivot_random(derived, mix_seed(seed, static_cast<std::uint64_t>(rep)));
        ObjectiveValue v = eval_objective(eval_graph, c, kind);
        costs[static_cast<std::size_t>(rep)] = v.feasible ? v.cost : kInfeasibleCost;
    });
    if (timed_out.load())
        throw TimeoutError("time limit reached during pivot repetitions");

    BestPivot best;
    best.cost = kInfeasibleCost;
    best.rep = -1;
    for (int rep = 0; rep < reps; ++rep) {
        if (costs[static_cast<std::size_t>(rep)] < best.cost) {
            best.cost = costs[static_cast<std::size_t>(rep)];
            best.rep = rep;
        }
    }
    if (best.rep < 0 || best.cost == kInfeasibleCost)
        throw std::logic_error("pivot rounding produced no feasible clustering");
    if (require_feasible) {
        for (std::int64_t c : costs)
            if (c == kInfeasibleCost)
                throw std::logic_error("pivot rounding produced an infeasible clustering");
    }
    best.clustering = pivot_random(derived, mix_seed(seed, static_cast<std::uint64_t>(best.rep)));
    return best;
}

Graph drop_weak_edges(const Graph& g, const StcLabeling& lab) {
    std::unordered_set<PairKey> weak;
    weak.reserve(lab.weak_edges.size() * 2);
    for (const Pair& e : lab.weak_edges) weak.insert(pair_key(e));
    std::vector<Pair> kept;
    kept.reserve(static_cast<std::size_t>(g.edge_count()) - lab.weak_edges.size());
    for (const Pair& e : g.edges())
        if (!weak.contains(pair_key(e))) kept.push_back(e);
    return Graph::from_edges(g.node_count(), std::move(kept));
}

Graph flip_cover(const Graph& g, const StcLabeling& lab) {
    std::unordered_set<PairKey> weak;
    weak.reserve(lab.weak_edges.size() * 2);
    for (const Pair& e : lab.weak_edges) weak.insert(pair_key(e));
    std::vector<Pair> kept;
    kept.reserve(static_cast<std::size_t>(g.edge_count()) + lab.added_pairs.size());
    for (const Pair& e : g.edges())
        if (!weak.contains(pair_key(e))) kept.push_back(e);
    for (const Pair& p : lab.added_pairs) kept.push_back(p);
    return Graph::from_edges(g.node_count(), std::move(kept));
}

PairBudgets unit_budgets(const StcLabeling& lab) {
    PairBudgets b;
    b.values.reserve((lab.weak_edges.size() + lab.added_pairs.size()) * 2);
    for (const Pair& e : lab.weak_edges) b.set(e.u, e.v, 1.0);
    for (const Pair& p : lab.added_pairs) b.set(p.u, p.v, 1.0);
    return b;
}

AlgoReport base_report(const Graph& g, std::string algorithm) {
    AlgoReport r;
    r.n = g.node_count();
    r.m = g.edge_count();
    r.algorithm = std::move(algorithm);
    return r;
}

// Seconds left for the rounding stage, or 0 for unlimited.
double remaining_budget(double limit, double elapsed) {
    if (limit <= 0.0) return 0.0;
    if (elapsed >= limit)
        throw TimeoutError("time limit reached while computing the lower bound");
    return limit - elapsed;
}

}  // namespace

AlgoResult mfp_cd(const Graph& g, const RoundOptions& opt) {
    if (opt.reps < 1) throw std::invalid_argument("reps must be >= 1");
    AlgoResult out;
    out.report = base_report(g, "mfp-cd");

    Stopwatch lb_timer;
    out.labeling = match_cd(g, opt.order_seed);
    out.report.lb_seconds = lb_timer.seconds();
    out.report.lb = static_cast<double>(out.labeling.matching_size);

    Stopwatch round_timer;
    out.instance = PivotInstance{ObjectiveKind::cluster_deletion, &g, drop_weak_edges(g, out.labeling),
                                 unit_budgets(out.labeling)};
    BestPivot best = best_of_pivots(out.instance.derived, g, ObjectiveKind::cluster_deletion,
                                    opt.reps, opt.seed, opt.threads, /*require_feasible=*/true,
                                    remaining_budget(opt.time_limit_seconds, out.report.lb_seconds));
    out.report.round_seconds = round_timer.seconds();

    out.clustering = std::move(best.clustering);
    out.report.ub = best.cost;
    out.report.ratio = make_ratio(out.report.lb, out.report.ub);
    out.report.seed = opt.seed;
    out.report.reps = opt.reps;
    return out;
}

AlgoResult mfp_ce(const Graph& g, const RoundOptions& opt, RoundTarget target) {
    if (opt.reps < 1) throw std::invalid_argument("reps must be >= 1");
    AlgoResult out;
    out.report = base_report(g, target == RoundTarget::derived ? "mfp-ce" : "mfp-ce-pivg");

    Stopwatch lb_timer;
    out.labeling = match_ce(g, opt.order_seed);
    out.report.lb_seconds = lb_timer.seconds();
    out.report.lb = static_cast<double>(out.labeling.matching_size);

    Stopwatch round_timer;
    out.instance = PivotInstance{ObjectiveKind::cluster_editing, &g, flip_cover(g, out.labeling),
                                 unit_budgets(out.labeling)};
    const Graph& round_on = target == RoundTarget::derived ? out.instance.derived : g;
    BestPivot best = best_of_pivots(round_on, g, ObjectiveKind::cluster_editing, opt.reps,
                                    opt.seed, opt.threads, /*require_feasible=*/true,
                                    remaining_budget(opt.time_limit_seconds, out.report.lb_seconds));
    out.report.round_seconds = round_timer.seconds();

    out.clustering = std::move(best.clustering);
    out.report.ub = best.cost;
    out.report.ratio = make_ratio(out.report.lb, out.report.ub);
    out.report.seed = opt.seed;
    out.report.reps = opt.reps;
    return out;
}

AlgoResult mfp_cd_det(const Graph& g, std::uint64_t order_seed) {
    AlgoResult out;
    out.report = base_report(g, "mfp-cd-det");

    Stopwatch lb_timer;
    out.labeling = match_cd(g, order_seed);
    out.report.lb_seconds = lb_timer.seconds();
    out.report.lb = static_cast<double>(out.labeling.matching_size);

    Stopwatch round_timer;
    out.instance = PivotInstance{ObjectiveKind::cluster_deletion, &g, drop_weak_edges(g, out.labeling),
                                 unit_budgets(out.labeling)};
    out.clustering = pivot_deterministic(out.instance);
    ObjectiveValue v = eval_objective(g, out.clustering, ObjectiveKind::cluster_deletion);
    if (!v.feasible)
        throw std::logic_error("deterministic pivoting produced an infeasible deletion clustering");
    out.report.round_seconds = round_timer.seconds();

    out.report.ub = v.cost;
    out.report.ratio = make_ratio(out.report.lb, out.report.ub);
    return out;
}

AlgoResult mfp_ce_det(const Graph& g, std::uint64_t order_seed) {
    AlgoResult out;
    out.report = base_report(g, "mfp-ce-det");

    Stopwatch lb_timer;
    out.labeling = match_ce(g, order_seed);
    out.report.lb_seconds = lb_timer.seconds();
    out.report.lb = static_cast<double>(out.labeling.matching_size);

    Stopwatch round_timer;
    out.instance = PivotInstance{ObjectiveKind::cluster_editing, &g, flip_cover(g, out.labeling),
                                 unit_budgets(out.labeling)};
    out.clustering = pivot_deterministic(out.instance);
    ObjectiveValue v = eval_objective(g, out.clustering, ObjectiveKind::cluster_editing);
    out.report.round_seconds = round_timer.seconds();

    out.report.ub = v.cost;
    out.report.ratio = make_ratio(out.report.lb, out.report.ub);
    return out;
}

AlgoResult lp_round_stc(const Graph& g, const FractionalSolution& sol, const RoundOptions& opt) {
    if (opt.reps < 1) throw std::invalid_argument("reps must be >= 1");
    if (sol.flavor != StcFlavor::stc)
        throw std::invalid_argument("lp_round_stc expects a plain-flavor solution");
    AlgoResult out;
    out.report = base_report(g, "lp-stc");

    Stopwatch lb_timer;
    check_fractional_feasible(g, sol);
    double lb = 0.0;
    std::vector<Pair> kept;
    PairBudgets budgets;
    for (const Pair& e : g.edges()) {
        double z = sol.value(g, e.u, e.v);
        lb += z;
        budgets.set(e.u, e.v, z);
        if (z < 0.5) kept.push_back(e);  // strict threshold
    }
    out.report.lb = lb;
    out.report.lb_seconds = lb_timer.seconds();

    Stopwatch round_timer;
    out.instance = PivotInstance{ObjectiveKind::cluster_deletion, &g,
                                 Graph::from_edges(g.node_count(), std::move(kept)),
                                 std::move(budgets)};
    BestPivot best = best_of_pivots(out.instance.derived, g, ObjectiveKind::cluster_deletion,
                                    opt.reps, opt.seed, opt.threads, /*require_feasible=*/true,
                                    remaining_budget(opt.time_limit_seconds, out.report.lb_seconds));
    out.report.round_seconds = round_timer.seconds();

    out.clustering = std::move(best.clustering);
    out.report.ub = best.cost;
    out.report.ratio = make_ratio(out.report.lb, out.report.ub);
    out.report.seed = opt.seed;
    out.report.reps = opt.reps;
    return out;
}

AlgoResult lp_round_stcplus(const Graph& g, const FractionalSolution& sol,
                            const RoundOptions& opt) {
    if (opt.reps < 1) throw std::invalid_argument("reps must be >= 1");
    if (sol.flavor != StcFlavor::stc_plus)
        throw std::invalid_argument("lp_round_stcplus expects a plus-flavor solution");
    AlgoResult out;
    out.report = base_report(g, "lp-stc+");

    Stopwatch lb_timer;
    check_fractional_feasible(g, sol);
    double lb = 0.0;
    std::vector<Pair> kept;
    PairBudgets budgets;
    for (const auto& [key, x] : sol.values) {
        Pair p = pair_from_key(key);
        if (g.has_edge(p.u, p.v)) {
            lb += x;
            budgets.set(p.u, p.v, x);
        } else {
            // Pairs left at the default value of 1 contribute nothing and
            // stay out of the derived graph, so only listed pairs matter.
            lb += 1.0 - x;
            budgets.set(p.u, p.v, 1.0 - x);
        }
        if (x < 0.5) kept.push_back(p);
    }
    out.report.lb = lb;
    out.report.lb_seconds = lb_timer.seconds();

    Stopwatch round_timer;
    out.instance = PivotInstance{ObjectiveKind::cluster_editing, &g,
                                 Graph::from_edges(g.node_count(), std::move(kept)),
                                 std::move(budgets)};
    BestPivot best = best_of_pivots(out.instance.derived, g, ObjectiveKind::cluster_editing,
                                    opt.reps, opt.seed, opt.threads, /*require_feasible=*/true,
                                    remaining_budget(opt.time_limit_seconds, out.report.lb_seconds));
    out.report.round_seconds = round_timer.seconds();

    out.clustering = std::move(best.clustering);
    out.report.ub = best.cost;
    out.report.ratio = make_ratio(out.report.lb, out.report.ub);
    out.report.seed = opt.seed;
    out.report.reps = opt.reps;
    return out;
}

AlgoResult pivot_baseline(const Graph& g, const RoundOptions& opt) {
    if (opt.reps < 1) throw std::invalid_argument("reps must be >= 1");
    AlgoResult out;
    out.report = base_report(g, "pivot");

    Stopwatch round_timer;
    BestPivot best = best_of_pivots(g, g, ObjectiveKind::cluster_editing, opt.reps, opt.seed,
                                    opt.threads, /*require_feasible=*/true,
                                    opt.time_limit_seconds);
    out.report.round_seconds = round_timer.seconds();

    out.clustering = std::move(best.clustering);
    out.report.ub = best.cost;
    out.report.lb = 0.0;
    out.report.ratio = make_ratio(0.0, best.cost);
    out.report.seed = opt.seed;
    out.report.reps = opt.reps;
    out.instance = PivotInstance{ObjectiveKind::cluster_editing, &g, g, {}};
    return out;
}

double aposteriori_ratio(const Graph& g, const Clustering& c, ObjectiveKind kind, double lb) {
    if (lb < 0.0) throw std::invalid_argument("negative lower bound");
    ObjectiveValue v = eval_objective(g, c, kind);
    if (!v.feasible)
        throw InfeasibleSolutionError("clustering is infeasible for cluster deletion");
    if (lb == 0.0) {
        if (v.cost == 0) return 1.0;
        throw std::invalid_argument("lower bound 0 with positive cost");
    }
    return static_cast<double>(v.cost) / lb;
}

}  // namespace stcc
