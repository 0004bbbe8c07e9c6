#ifndef STCCLUST_BENCH_HPP
#define STCCLUST_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "stcclust/algorithms.hpp"
#include "stcclust/oracle.hpp"

namespace stcc {

/// Benchmark harness settings. Algorithms: mfp-cd, mfp-ce, mfp-ce-pivg,
/// mfp-cd-det, mfp-ce-det, pivot. A per-graph time limit turns the row into
/// a timeout marker instead of aborting the run; oracle_cap > 0 appends exact
/// optima columns for graphs small enough.
struct BenchConfig {
    std::vector<std::string> graph_paths;
    std::vector<std::string> algorithms;
    int reps = 100;
    std::uint64_t seed = 0;
    std::uint64_t order_seed = 0;
    double time_limit_seconds = 600.0;
    Node oracle_cap = 0;  // 0 disables the oracle columns
    int threads = 1;
};

/// CSV columns, fixed: graph,n,m,algorithm,lb,ub,ratio,lb_seconds,
/// round_seconds,seed,reps,status. With the oracle enabled two extra columns
/// opt_cluster,opt_label follow. Timeout and error rows carry '-' in the
/// unavailable numeric fields.
void write_csv_header(std::ostream& out, bool with_oracle);
void write_csv_row(std::ostream& out, const AlgoReport& r, bool with_oracle,
                   const std::string& opt_cluster = "", const std::string& opt_label = "");

/// Runs every (graph, algorithm) combination, one CSV row each; a failure on
/// one graph yields an error row and the run continues.
void run_bench(const BenchConfig& config, std::ostream& out);

/// Stem of a path: file name without directory or extension.
std::string graph_stem(const std::string& path);

/// Formats a double with up to `sig` significant digits, trimming the
/// trailing zeros (CSV cells and CLI output share this).
std::string format_number(double v, int sig = 6);

}  // namespace stcc

#endif
