#ifndef STCCLUST_ORACLE_HPP
#define STCCLUST_ORACLE_HPP

#include <cstdint>

#include "stcclust/graph.hpp"
#include "stcclust/stc.hpp"

namespace stcc {

/// Caps for the brute-force searches. max_nodes bounds the set-partition
/// enumeration; max_label_pairs bounds the subset enumeration for labelings
/// (edges for the plain flavor, edges plus wedge non-edges for plus).
struct OracleLimits {
    Node max_nodes = 10;
    int max_label_pairs = 24;
};

struct ClusteringOracleResult {
    std::int64_t opt = 0;
    Clustering witness;
};

struct LabelingOracleResult {
    std::int64_t opt = 0;
    StcLabeling witness;  // matching fields unused; carries the optimal label sets
};

/// Exact optimum by enumerating every set partition of the nodes (restricted
/// growth strings); deletion skips partitions with a non-clique cluster.
/// Ties broken by enumeration order. Throws ResourceLimitError over the cap.
ClusteringOracleResult opt_clustering(const Graph& g, ObjectiveKind kind,
                                      const OracleLimits& limits = {});

/// Exact minimum labeling by subset enumeration in increasing cardinality,
/// restricted to pairs that occur in at least one open wedge. A pair in no
/// wedge appears in no covering constraint, so some optimum avoids it; the
/// restriction is lossless. Throws ResourceLimitError over the cap.
LabelingOracleResult opt_labeling(const Graph& g, StcFlavor flavor,
                                  const OracleLimits& limits = {});

}  // namespace stcc

#endif
