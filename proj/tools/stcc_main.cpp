// Command-line front end: lower bounds, clustering, a posteriori ratios,
// exact optima on small graphs, and the CSV benchmark harness.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stcclust/algorithms.hpp"
#include "stcclust/bench.hpp"
#include "stcclust/io.hpp"
#include "stcclust/oracle.hpp"
#include "stcclust/timer.hpp"

namespace {

using namespace stcc;

int default_threads() {
    if (const char* env = std::getenv("STCC_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

Graph load(const std::string& path, const std::string& format) {
    GraphFormat f = guess_format(path);
    if (format == "edge-list")
        f = GraphFormat::edge_list;
    else if (format == "matrix-market")
        f = GraphFormat::matrix_market;
    else if (format != "auto")
        throw CLI::ValidationError("--format must be edge-list, matrix-market, or auto");
    return load_graph(path, f);
}

ObjectiveKind parse_objective(const std::string& obj) {
    if (obj == "cd") return ObjectiveKind::cluster_deletion;
    if (obj == "ce") return ObjectiveKind::cluster_editing;
    throw CLI::ValidationError("--obj must be cd or ce");
}

void append_csv_row(const std::string& csv_path, const AlgoReport& report) {
    if (csv_path.empty()) {
        write_csv_header(std::cout, false);
        write_csv_row(std::cout, report, false);
        return;
    }
    bool fresh = !std::ifstream(csv_path).good();
    std::ofstream out(csv_path, std::ios::app);
    if (!out) throw ParseError(csv_path + ": cannot open for writing");
    if (fresh) write_csv_header(out, false);
    write_csv_row(out, report, false);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial lower bounds and approximations for cluster editing and deletion"};
    app.require_subcommand(1);

    std::string graph_path, format = "auto", objective = "cd";
    std::uint64_t seed = 0, order_seed = 0;
    int reps = 100;

    // lb: matching lower bound and its runtime.
    std::string labeling_out;
    auto* lb_cmd = app.add_subcommand("lb", "Matching lower bound for a graph");
    lb_cmd->add_option("graph", graph_path, "input graph file")->required();
    lb_cmd->add_option("--obj", objective, "objective: cd or ce")->capture_default_str();
    lb_cmd->add_option("--format", format, "edge-list, matrix-market, or auto");
    lb_cmd->add_option("--order-seed", order_seed, "matching order seed; 0 = natural order");
    lb_cmd->add_option("--labeling-out", labeling_out, "write the weak/added labeling here");

    // cluster: run one algorithm, write the clustering and a CSV row.
    std::string algorithm = "mfp-cd", out_path, csv_path, frac_path, round_on = "derived";
    auto* cluster_cmd = app.add_subcommand("cluster", "Cluster a graph with one algorithm");
    cluster_cmd->add_option("graph", graph_path, "input graph file")->required();
    cluster_cmd->add_option("--alg", algorithm,
                            "mfp-cd | mfp-ce | mfp-cd-det | mfp-ce-det | pivot | lp-stc | lp-stc+")
        ->capture_default_str();
    cluster_cmd->add_option("--reps", reps, "pivot repetitions")->capture_default_str();
    cluster_cmd->add_option("--seed", seed, "pivot seed");
    cluster_cmd->add_option("--order-seed", order_seed, "matching order seed");
    cluster_cmd->add_option("--round-on", round_on, "mfp-ce rounding target: derived or original");
    cluster_cmd->add_option("--frac-solution", frac_path, "fractional solution file (lp-*)");
    cluster_cmd->add_option("--out", out_path, "clustering output path");
    cluster_cmd->add_option("--csv", csv_path, "append the report row to this CSV");
    cluster_cmd->add_option("--format", format, "edge-list, matrix-market, or auto");

    // ratio: certify an external clustering against a known lower bound.
    std::string clustering_path;
    double lb_value = 0.0;
    auto* ratio_cmd = app.add_subcommand("ratio", "A posteriori ratio of a clustering file");
    ratio_cmd->add_option("graph", graph_path, "input graph file")->required();
    ratio_cmd->add_option("--clustering", clustering_path, "clustering file")->required();
    ratio_cmd->add_option("--obj", objective, "objective: cd or ce")->capture_default_str();
    ratio_cmd->add_option("--lb", lb_value, "lower bound to certify against")->required();
    ratio_cmd->add_option("--format", format, "edge-list, matrix-market, or auto");

    // oracle: exact optimum on desk-size graphs.
    std::string problem = "cd";
    Node oracle_cap = 10;
    int label_cap = 24;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by brute force (small graphs)");
    oracle_cmd->add_option("graph", graph_path, "input graph file")->required();
    oracle_cmd->add_option("--problem", problem, "cd | ce | stc | stc+")->capture_default_str();
    oracle_cmd->add_option("--cap", oracle_cap, "node cap for partition enumeration")
        ->capture_default_str();
    oracle_cmd->add_option("--label-cap", label_cap, "pair cap for labeling enumeration")
        ->capture_default_str();
    oracle_cmd->add_option("--format", format, "edge-list, matrix-market, or auto");

    // bench: CSV harness over many graphs and algorithms.
    BenchConfig bench;
    std::string algs = "mfp-cd";
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark several algorithms over graphs");
    bench_cmd->add_option("graphs", bench.graph_paths, "input graph files or directories")
        ->required();
    bench_cmd->add_option("--algs", algs, "comma-separated algorithm list")->capture_default_str();
    bench_cmd->add_option("--reps", bench.reps, "pivot repetitions")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "pivot seed");
    bench_cmd->add_option("--order-seed", bench.order_seed, "matching order seed");
    bench_cmd->add_option("--time-limit", bench.time_limit_seconds, "per-graph seconds")
        ->capture_default_str();
    bench_cmd->add_option("--oracle-cap", bench.oracle_cap,
                          "append exact optima columns for graphs up to this size (0 = off)");
    bench_cmd->add_option("--out", bench_out, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*lb_cmd) {
            Graph g = load(graph_path, format);
            ObjectiveKind kind = parse_objective(objective);
            Stopwatch sw;
            StcLabeling lab = kind == ObjectiveKind::cluster_deletion ? match_cd(g, order_seed)
                                                                      : match_ce(g, order_seed);
            double secs = sw.seconds();
            std::cout << "graph " << graph_stem(graph_path) << " n " << g.node_count() << " m "
                      << g.edge_count() << '\n';
            std::cout << "lb " << lab.matching_size << '\n';
            std::cout << "lb_seconds " << format_number(secs, 3) << '\n';
            if (!labeling_out.empty()) write_labeling(g, lab, labeling_out);
            return 0;
        }

        if (*cluster_cmd) {
            Graph g = load(graph_path, format);
            RoundOptions opt;
            opt.reps = reps;
            opt.seed = seed;
            opt.order_seed = order_seed;
            opt.threads = default_threads();

            AlgoResult res;
            if (algorithm == "mfp-cd") {
                res = mfp_cd(g, opt);
            } else if (algorithm == "mfp-ce") {
                RoundTarget target = RoundTarget::derived;
                if (round_on == "original")
                    target = RoundTarget::original;
                else if (round_on != "derived")
                    throw CLI::ValidationError("--round-on must be derived or original");
                res = mfp_ce(g, opt, target);
            } else if (algorithm == "mfp-cd-det") {
                res = mfp_cd_det(g, order_seed);
            } else if (algorithm == "mfp-ce-det") {
                res = mfp_ce_det(g, order_seed);
            } else if (algorithm == "pivot") {
                res = pivot_baseline(g, opt);
            } else if (algorithm == "lp-stc" || algorithm == "lp-stc+") {
                if (frac_path.empty())
                    throw CLI::ValidationError("--frac-solution is required for " + algorithm);
                FractionalSolution sol = load_fractional(frac_path, g);
                res = algorithm == "lp-stc" ? lp_round_stc(g, sol, opt)
                                            : lp_round_stcplus(g, sol, opt);
            } else {
                throw CLI::ValidationError("unknown algorithm '" + algorithm + "'");
            }
            res.report.graph_name = graph_stem(graph_path);

            std::string cluster_out =
                out_path.empty() ? graph_stem(graph_path) + "." + algorithm + ".clusters" : out_path;
            write_clustering(res.clustering, cluster_out);
            append_csv_row(csv_path, res.report);
            return 0;
        }

        if (*ratio_cmd) {
            Graph g = load(graph_path, format);
            Clustering c = load_clustering(clustering_path);
            ObjectiveKind kind = parse_objective(objective);
            ObjectiveValue v = eval_objective(g, c, kind);
            if (!v.feasible) {
                std::cerr << "infeasible: some cluster is not a clique, no deletion cost exists\n";
                return 2;
            }
            double r = aposteriori_ratio(g, c, kind, lb_value);
            std::cout << "ub " << v.cost << '\n';
            std::cout << "lb " << format_number(lb_value) << '\n';
            std::cout << "ratio " << format_number(r) << '\n';
            return 0;
        }

        if (*oracle_cmd) {
            Graph g = load(graph_path, format);
            OracleLimits lim;
            lim.max_nodes = oracle_cap;
            lim.max_label_pairs = label_cap;
            if (problem == "cd" || problem == "ce") {
                auto res = opt_clustering(g,
                                          problem == "cd" ? ObjectiveKind::cluster_deletion
                                                          : ObjectiveKind::cluster_editing,
                                          lim);
                std::cout << "opt " << res.opt << '\n';
            } else if (problem == "stc" || problem == "stc+") {
                auto res = opt_labeling(
                    g, problem == "stc" ? StcFlavor::stc : StcFlavor::stc_plus, lim);
                std::cout << "opt " << res.opt << '\n';
            } else {
                throw CLI::ValidationError("--problem must be cd, ce, stc, or stc+");
            }
            return 0;
        }

        if (*bench_cmd) {
            bench.algorithms.clear();
            std::size_t pos = 0;
            while (pos <= algs.size()) {
                std::size_t comma = algs.find(',', pos);
                if (comma == std::string::npos) comma = algs.size();
                if (comma > pos) bench.algorithms.push_back(algs.substr(pos, comma - pos));
                pos = comma + 1;
            }
            // Directories expand to their files, sorted for stable row order.
            std::vector<std::string> paths;
            for (const std::string& p : bench.graph_paths) {
                if (std::filesystem::is_directory(p)) {
                    std::vector<std::string> inside;
                    for (const auto& entry : std::filesystem::directory_iterator(p))
                        if (entry.is_regular_file()) inside.push_back(entry.path().string());
                    std::sort(inside.begin(), inside.end());
                    paths.insert(paths.end(), inside.begin(), inside.end());
                } else {
                    paths.push_back(p);
                }
            }
            bench.graph_paths = std::move(paths);
            bench.threads = default_threads();
            if (bench_out.empty()) {
                run_bench(bench, std::cout);
            } else {
                std::ofstream out(bench_out);
                if (!out) throw ParseError(bench_out + ": cannot open for writing");
                run_bench(bench, out);
            }
            return 0;
        }
    } catch (const InfeasibleSolutionError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
