#include <doctest.h>

#include "stcclust/algorithms.hpp"
#include "stcclust/oracle.hpp"
#include "stcclust/rng.hpp"
#include "support.hpp"

using namespace stcc;
using namespace testsupport;

namespace {

bool clusters_are_cliques(const Graph& g, const Clustering& c) {
    return eval_objective(g, c, ObjectiveKind::cluster_deletion).feasible;
}

FractionalSolution stc_solution(std::initializer_list<std::pair<Pair, double>> vals) {
    FractionalSolution sol;
    sol.flavor = StcFlavor::stc;
    for (const auto& [p, x] : vals) sol.values[pair_key(p)] = x;
    return sol;
}

FractionalSolution stcplus_solution(std::initializer_list<std::pair<Pair, double>> vals) {
    FractionalSolution sol;
    sol.flavor = StcFlavor::stc_plus;
    for (const auto& [p, x] : vals) sol.values[pair_key(p)] = x;
    return sol;
}

}  // namespace

TEST_CASE("mfp_cd on the small graphs") {
    RoundOptions opt;
    opt.reps = 20;
    opt.seed = 7;

    AlgoResult star = mfp_cd(star_graph(3), opt);
    CHECK(star.report.lb == 1.0);
    CHECK(star.report.ub == 2);
    CHECK(star.report.ratio == 2.0);
    CHECK(clusters_are_cliques(star_graph(3), star.clustering));

    AlgoResult tri = mfp_cd(complete_graph(3), opt);
    CHECK(tri.report.lb == 0.0);
    CHECK(tri.report.ub == 0);
    CHECK(tri.report.ratio == 1.0);

    AlgoResult path = mfp_cd(path_graph(3), opt);
    CHECK(path.report.lb == 1.0);
    CHECK(path.report.ub == 2);  // both path edges get deleted
}

TEST_CASE("mfp_ce derived vs original rounding on the path") {
    RoundOptions opt;
    opt.reps = 10;
    AlgoResult derived = mfp_ce(path_graph(3), opt, RoundTarget::derived);
    CHECK(derived.report.lb == 1.0);
    CHECK(derived.report.ub == 3);
    CHECK(derived.report.algorithm == "mfp-ce");

    AlgoResult original = mfp_ce(path_graph(3), opt, RoundTarget::original);
    CHECK(original.report.lb == 1.0);
    CHECK(original.report.ub == 1);
    CHECK(original.report.algorithm == "mfp-ce-pivg");
}

TEST_CASE("deterministic variants meet their hard bounds on the examples") {
    AlgoResult star = mfp_cd_det(star_graph(3));
    CHECK(star.report.ub == 2);
    CHECK(star.report.ub <= 2 * static_cast<std::int64_t>(star.labeling.weak_edges.size()));

    AlgoResult path = mfp_ce_det(path_graph(3));
    CHECK(path.report.ub == 3);
    CHECK(path.report.ub <= 2 * path.labeling.cover_size());

    CHECK(mfp_cd_det(complete_graph(3)).report.ub == 0);
    CHECK(mfp_ce_det(complete_graph(3)).report.ub == 0);
}

TEST_CASE("deterministic bounds hold across random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = er_graph(30, 0.2, seed + 400);
        AlgoResult cd = mfp_cd_det(g);
        CHECK(cd.report.ub <= 2 * static_cast<std::int64_t>(cd.labeling.weak_edges.size()));
        CHECK(clusters_are_cliques(g, cd.clustering));
        CHECK(check_pivot_budgets(cd.instance, 2.0).pass);

        AlgoResult ce = mfp_ce_det(g);
        CHECK(ce.report.ub <= 2 * ce.labeling.cover_size());
        CHECK(check_pivot_budgets(ce.instance, 2.0).pass);
    }
}

TEST_CASE("lp_round_stc examples") {
    RoundOptions opt;
    opt.reps = 8;

    Graph k3 = complete_graph(3);
    AlgoResult zero = lp_round_stc(
        k3, stc_solution({{{0, 1}, 0.0}, {{0, 2}, 0.0}, {{1, 2}, 0.0}}), opt);
    CHECK(zero.report.lb == 0.0);
    CHECK(zero.report.ub == 0);
    CHECK(zero.clustering.k == 1);

    Graph path = path_graph(3);
    AlgoResult split = lp_round_stc(path, stc_solution({{{0, 1}, 1.0}, {{1, 2}, 0.0}}), opt);
    CHECK(split.report.lb == 1.0);
    CHECK(split.report.ub == 1);
    CHECK(split.clustering.assignment[1] == split.clustering.assignment[2]);
    CHECK(split.clustering.assignment[0] != split.clustering.assignment[1]);

    // At exactly 1/2 the strict threshold keeps no edges: all singletons.
    AlgoResult half = lp_round_stc(path, stc_solution({{{0, 1}, 0.5}, {{1, 2}, 0.5}}), opt);
    CHECK(half.report.lb == 1.0);
    CHECK(half.report.ub == 2);
    CHECK(half.clustering.k == 3);
}

TEST_CASE("lp_round_stcplus examples") {
    RoundOptions opt;
    opt.reps = 8;

    Graph k3 = complete_graph(3);
    AlgoResult zero = lp_round_stcplus(
        k3, stcplus_solution({{{0, 1}, 0.0}, {{0, 2}, 0.0}, {{1, 2}, 0.0}}), opt);
    CHECK(zero.report.lb == 0.0);
    CHECK(zero.report.ub == 0);

    Graph path = path_graph(3);
    AlgoResult join = lp_round_stcplus(
        path, stcplus_solution({{{0, 1}, 0.0}, {{1, 2}, 0.0}, {{0, 2}, 0.0}}), opt);
    CHECK(join.report.lb == 1.0);  // edges contribute 0, the flipped non-edge 1
    CHECK(join.report.ub == 1);
    CHECK(join.clustering.k == 1);

    AlgoResult halves = lp_round_stcplus(
        path, stcplus_solution({{{0, 1}, 0.5}, {{1, 2}, 0.5}, {{0, 2}, 1.0}}), opt);
    CHECK(halves.report.lb == 1.0);
    CHECK(halves.report.ub == 2);
    CHECK(halves.clustering.k == 3);
}

TEST_CASE("lp rounding rejects bad inputs") {
    RoundOptions opt;
    Graph path = path_graph(3);
    CHECK_THROWS_AS(lp_round_stc(path, stc_solution({{{0, 1}, 0.2}, {{1, 2}, 0.2}}), opt),
                    InfeasibleSolutionError);
    CHECK_THROWS_AS(lp_round_stc(path, stc_solution({{{0, 1}, 1.0}}), opt),
                    InfeasibleSolutionError);  // missing edge value
    CHECK_THROWS_AS(lp_round_stcplus(path, stc_solution({{{0, 1}, 1.0}, {{1, 2}, 1.0}}), opt),
                    std::invalid_argument);  // wrong flavor
}

TEST_CASE("lp rounding instances satisfy the alpha=4 budget conditions") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = er_graph(14, 0.35, seed + 900);
        FractionalSolution all_weak;
        all_weak.flavor = StcFlavor::stc;
        for (const Pair& e : g.edges()) all_weak.values[pair_key(e)] = 1.0;
        RoundOptions opt;
        opt.reps = 4;
        AlgoResult res = lp_round_stc(g, all_weak, opt);
        CHECK(check_pivot_budgets(res.instance, 4.0).pass);
        CHECK(clusters_are_cliques(g, res.clustering));
    }
}

TEST_CASE("deterministic pivoting on rounding instances stays within 4x the fractional bound") {
    // Random feasible fractional solutions: start fully weak, then lower
    // random edges, keeping every wedge constraint satisfied. The budgets of
    // a rounding instance sum to its lower bound.
    Rng rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = er_graph(16, 0.3, 2000 + static_cast<std::uint64_t>(trial));
        FractionalSolution sol;
        sol.flavor = StcFlavor::stc;
        for (const Pair& e : g.edges()) sol.values[pair_key(e)] = 1.0;
        for (int attempt = 0; attempt < 60; ++attempt) {
            if (g.edge_count() == 0) break;
            std::size_t pick = static_cast<std::size_t>(
                rng.next_below(static_cast<std::uint64_t>(g.edge_count())));
            const Pair& e = g.edges()[pick];
            double old = sol.values[pair_key(e)];
            sol.values[pair_key(e)] = rng.next_unit() < 0.5 ? 0.0 : old / 2.0;
            try {
                check_fractional_feasible(g, sol);
            } catch (const InfeasibleSolutionError&) {
                sol.values[pair_key(e)] = old;
            }
        }
        RoundOptions opt;
        opt.reps = 1;
        AlgoResult res = lp_round_stc(g, sol, opt);
        REQUIRE(check_pivot_budgets(res.instance, 4.0).pass);
        Clustering det = pivot_deterministic(res.instance);
        auto v = eval_objective(g, det, ObjectiveKind::cluster_deletion);
        CHECK(v.feasible);
        CHECK(static_cast<double>(v.cost) <= 4.0 * res.report.lb + 1e-9);
    }
}

TEST_CASE("aposteriori_ratio") {
    Graph path = path_graph(3);
    CHECK(aposteriori_ratio(path, Clustering::from_assignment({0, 0, 0}),
                            ObjectiveKind::cluster_editing, 1.0) == 1.0);

    Graph star = star_graph(3);
    CHECK(aposteriori_ratio(star, Clustering::from_assignment({0, 0, 1, 2}),
                            ObjectiveKind::cluster_deletion, 1.0) == 2.0);

    // An optimal clustering against its own optimum certifies ratio 1.
    CHECK(aposteriori_ratio(star, Clustering::from_assignment({0, 0, 1, 2}),
                            ObjectiveKind::cluster_deletion, 2.0) == 1.0);

    CHECK_THROWS_AS(aposteriori_ratio(path, Clustering::from_assignment({0, 0, 0}),
                                      ObjectiveKind::cluster_deletion, 1.0),
                    InfeasibleSolutionError);
    CHECK_THROWS_AS(aposteriori_ratio(path, Clustering::from_assignment({0, 1, 2}),
                                      ObjectiveKind::cluster_editing, 0.0),
                    std::invalid_argument);
}

TEST_CASE("reports keep lb <= ub and a defined ratio at least 1") {
    RoundOptions opt;
    opt.reps = 10;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = er_graph(25, 0.25, seed + 600);
        for (const AlgoResult& res :
             {mfp_cd(g, opt), mfp_ce(g, opt), mfp_ce(g, opt, RoundTarget::original),
              mfp_cd_det(g), mfp_ce_det(g)}) {
            CHECK(res.report.lb <= static_cast<double>(res.report.ub));
            REQUIRE(res.report.ratio.has_value());
            CHECK(*res.report.ratio >= 1.0);
            CHECK(check_pivot_budgets(res.instance, 2.0).pass);
        }
    }
}

TEST_CASE("sandwich bounds against the oracle on small random graphs") {
    RoundOptions opt;
    opt.reps = 30;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = er_graph(7, 0.45, seed + 777);
        auto cd_opt = opt_clustering(g, ObjectiveKind::cluster_deletion).opt;
        auto ce_opt = opt_clustering(g, ObjectiveKind::cluster_editing).opt;

        AlgoResult cd = mfp_cd(g, opt);
        CHECK(cd.report.lb <= static_cast<double>(cd_opt));
        CHECK(cd.report.ub >= cd_opt);

        AlgoResult ce = mfp_ce(g, opt);
        CHECK(ce.report.lb <= static_cast<double>(ce_opt));
        CHECK(ce.report.ub >= ce_opt);
    }
}

TEST_CASE("pivot baseline reports an undefined ratio with positive cost") {
    RoundOptions opt;
    opt.reps = 50;
    AlgoResult res = pivot_baseline(path_graph(3), opt);
    CHECK(res.report.ub == 1);
    CHECK_FALSE(res.report.ratio.has_value());

    AlgoResult clean = pivot_baseline(complete_graph(4), opt);
    CHECK(clean.report.ub == 0);
    CHECK(clean.report.ratio == 1.0);
}

TEST_CASE("results are independent of the worker thread count") {
    Graph g = er_graph(60, 0.15, 21);
    RoundOptions serial;
    serial.reps = 40;
    serial.seed = 9;
    RoundOptions parallel = serial;
    parallel.threads = 4;

    AlgoResult a = mfp_cd(g, serial);
    AlgoResult b = mfp_cd(g, parallel);
    CHECK(a.report.ub == b.report.ub);
    CHECK(a.clustering.assignment == b.clustering.assignment);

    AlgoResult c = mfp_ce(g, serial);
    AlgoResult d = mfp_ce(g, parallel);
    CHECK(c.report.ub == d.report.ub);
    CHECK(c.clustering.assignment == d.clustering.assignment);
}

TEST_CASE("rounding respects the time limit") {
    RoundOptions opt;
    opt.reps = 1000000;
    opt.time_limit_seconds = 0.05;
    Graph g = er_graph(200, 0.1, 3);
    CHECK_THROWS_AS(mfp_cd(g, opt), TimeoutError);
}
