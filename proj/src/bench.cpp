#include "stcclust/bench.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "stcclust/io.hpp"
#include "stcclust/timer.hpp"

namespace stcc {

std::string graph_stem(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name;
}

std::string format_number(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

void write_csv_header(std::ostream& out, bool with_oracle) {
    out << "graph,n,m,algorithm,lb,ub,ratio,lb_seconds,round_seconds,seed,reps,status";
    if (with_oracle) out << ",opt_cluster,opt_label";
    out << '\n';
}

void write_csv_row(std::ostream& out, const AlgoReport& r, bool with_oracle,
                   const std::string& opt_cluster, const std::string& opt_label) {
    const bool ok = r.status == "ok";
    out << r.graph_name << ',' << r.n << ',' << r.m << ',' << r.algorithm << ',';
    if (ok)
        out << format_number(r.lb);
    else
        out << '-';
    out << ',';
    if (ok)
        out << r.ub;
    else
        out << '-';
    out << ',';
    if (ok && r.ratio)
        out << format_number(*r.ratio);
    else
        out << '-';
    out << ',' << format_number(r.lb_seconds, 3) << ',' << format_number(r.round_seconds, 3)
        << ',' << r.seed << ',' << r.reps << ',' << r.status;
    if (with_oracle) {
        out << ',' << (opt_cluster.empty() ? "-" : opt_cluster) << ','
            << (opt_label.empty() ? "-" : opt_label);
    }
    out << '\n';
}

namespace {

AlgoResult dispatch(const std::string& alg, const Graph& g, const RoundOptions& opt) {
    if (alg == "mfp-cd") return mfp_cd(g, opt);
    if (alg == "mfp-ce") return mfp_ce(g, opt, RoundTarget::derived);
    if (alg == "mfp-ce-pivg") return mfp_ce(g, opt, RoundTarget::original);
    if (alg == "mfp-cd-det") return mfp_cd_det(g, opt.order_seed);
    if (alg == "mfp-ce-det") return mfp_ce_det(g, opt.order_seed);
    if (alg == "pivot") return pivot_baseline(g, opt);
    throw std::invalid_argument("unknown algorithm '" + alg + "'");
}

bool is_deletion_algorithm(const std::string& alg) {
    return alg.rfind("mfp-cd", 0) == 0;
}

}  // namespace

void run_bench(const BenchConfig& config, std::ostream& out) {
    const bool with_oracle = config.oracle_cap > 0;
    write_csv_header(out, with_oracle);

    RoundOptions opt;
    opt.reps = config.reps;
    opt.seed = config.seed;
    opt.order_seed = config.order_seed;
    opt.threads = config.threads;
    opt.time_limit_seconds = config.time_limit_seconds;

    for (const std::string& path : config.graph_paths) {
        std::string name = graph_stem(path);
        Graph g;
        bool loaded = false;
        try {
            g = load_graph(path, guess_format(path));
            loaded = true;
        } catch (const std::exception&) {
            AlgoReport r;
            r.graph_name = name;
            r.status = "error";
            for (const std::string& alg : config.algorithms) {
                r.algorithm = alg;
                write_csv_row(out, r, with_oracle);
            }
        }
        if (!loaded) continue;

        for (const std::string& alg : config.algorithms) {
            AlgoReport row;
            row.graph_name = name;
            row.n = g.node_count();
            row.m = g.edge_count();
            row.algorithm = alg;
            Stopwatch limit_timer;
            try {
                AlgoResult res = dispatch(alg, g, opt);
                row = res.report;
                row.graph_name = name;
                // Deterministic variants have no in-loop checks; flag them here.
                if (limit_timer.seconds() > config.time_limit_seconds) row.status = "timeout";
            } catch (const TimeoutError&) {
                row.status = "timeout";
            } catch (const std::exception&) {
                row.status = "error";
            }

            std::string opt_cluster, opt_label;
            if (with_oracle && g.node_count() <= config.oracle_cap && row.status == "ok") {
                try {
                    OracleLimits lim;
                    lim.max_nodes = config.oracle_cap;
                    lim.max_label_pairs = 62;
                    ObjectiveKind kind = is_deletion_algorithm(alg)
                                             ? ObjectiveKind::cluster_deletion
                                             : ObjectiveKind::cluster_editing;
                    StcFlavor flavor = is_deletion_algorithm(alg) ? StcFlavor::stc
                                                                  : StcFlavor::stc_plus;
                    opt_cluster = std::to_string(opt_clustering(g, kind, lim).opt);
                    opt_label = std::to_string(opt_labeling(g, flavor, lim).opt);
                } catch (const ResourceLimitError&) {
                    opt_cluster.clear();
                    opt_label.clear();
                }
            }
            write_csv_row(out, row, with_oracle, opt_cluster, opt_label);
        }
    }
}

}  // namespace stcc
