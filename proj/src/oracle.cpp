#include "stcclust/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace stcc {

namespace {

// Adjacency as bitmasks; the oracle deliberately re-derives everything from
// the edge list so that it shares no code path with the streaming modules it
// is used to check.
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.node_count()), 0);
    for (const Pair& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    return adj;
}

struct TriplePairs {
    Pair edge_a;   // (i,k)
    Pair edge_b;   // (j,k)
    Pair nonedge;  // (i,j)
};

std::vector<TriplePairs> all_wedges(const Graph& g, const std::vector<std::uint64_t>& adj) {
    std::vector<TriplePairs> wedges;
    const Node n = g.node_count();
    for (Node k = 0; k < n; ++k) {
        for (Node i = 0; i < n; ++i) {
            if (i == k || !(adj[static_cast<std::size_t>(k)] >> i & 1)) continue;
            for (Node j = i + 1; j < n; ++j) {
                if (j == k || !(adj[static_cast<std::size_t>(k)] >> j & 1)) continue;
                if (adj[static_cast<std::size_t>(i)] >> j & 1) continue;
                wedges.push_back({Pair(i, k), Pair(j, k), Pair(i, j)});
            }
        }
    }
    return wedges;
}

// Next subset of the same popcount (Gosper); returns false when exhausted
// within `bits` bit positions.
bool next_same_popcount(std::uint64_t& s, int bits) {
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    if (r >= (std::uint64_t{1} << bits)) return false;
    s = (((r ^ s) >> 2) / c) | r;
    return true;
}

}  // namespace

ClusteringOracleResult opt_clustering(const Graph& g, ObjectiveKind kind,
                                      const OracleLimits& limits) {
    const Node n = g.node_count();
    if (n > limits.max_nodes)
        throw ResourceLimitError("opt_clustering: " + std::to_string(n) + " nodes exceeds cap " +
                                 std::to_string(limits.max_nodes));
    if (n > 63) throw ResourceLimitError("opt_clustering: node count exceeds 63");
    if (n == 0) return {};
    const auto adj = adjacency_masks(g);

    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);  // max of a[0..i-1]

    std::int64_t best = -1;
    std::vector<int> best_a;

    auto evaluate = [&]() {
        std::int64_t cost = 0;
        for (Node u = 0; u < n; ++u) {
            for (Node v = u + 1; v < n; ++v) {
                bool together = a[static_cast<std::size_t>(u)] == a[static_cast<std::size_t>(v)];
                bool edge = (adj[static_cast<std::size_t>(u)] >> v) & 1;
                if (together && !edge) {
                    if (kind == ObjectiveKind::cluster_deletion) return;  // non-clique cluster
                    ++cost;
                } else if (!together && edge) {
                    ++cost;
                }
            }
            if (best >= 0 && cost >= best) return;  // cost only grows
        }
        if (best < 0 || cost < best) {
            best = cost;
            best_a = a;
        }
    };

    while (true) {
        evaluate();
        // Advance the restricted growth string.
        Node i = n - 1;
        for (; i > 0; --i) {
            if (a[static_cast<std::size_t>(i)] <= prefix_max[static_cast<std::size_t>(i)] &&
                a[static_cast<std::size_t>(i)] < n - 1)
                break;
        }
        if (i == 0) break;
        ++a[static_cast<std::size_t>(i)];
        for (Node j = i + 1; j < n; ++j) {
            a[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] =
                std::max(prefix_max[static_cast<std::size_t>(j - 1)],
                         a[static_cast<std::size_t>(j - 1)]);
        }
    }

    if (best < 0) throw std::logic_error("no feasible partition found");  // unreachable: singletons
    ClusteringOracleResult out;
    out.opt = best;
    out.witness = Clustering::from_assignment(best_a);
    return out;
}

LabelingOracleResult opt_labeling(const Graph& g, StcFlavor flavor, const OracleLimits& limits) {
    if (g.node_count() > 63) throw ResourceLimitError("opt_labeling: node count exceeds 63");
    const auto adj = adjacency_masks(g);
    const auto wedges = all_wedges(g, adj);

    // Candidate pairs: those occurring in at least one wedge.
    std::vector<Pair> candidates;
    std::unordered_map<PairKey, int> index;
    auto intern = [&](const Pair& p) {
        auto [it, fresh] = index.try_emplace(pair_key(p), static_cast<int>(candidates.size()));
        if (fresh) candidates.push_back(p);
        return it->second;
    };

    std::vector<std::uint64_t> constraint;
    constraint.reserve(wedges.size());
    std::int64_t wedge_nonedges = 0;
    {
        std::unordered_map<PairKey, bool> seen_nonedge;
        for (const TriplePairs& w : wedges)
            if (seen_nonedge.try_emplace(pair_key(w.nonedge), true).second) ++wedge_nonedges;
    }
    const std::int64_t budget_pairs =
        flavor == StcFlavor::stc ? g.edge_count() : g.edge_count() + wedge_nonedges;
    if (budget_pairs > limits.max_label_pairs)
        throw ResourceLimitError("opt_labeling: " + std::to_string(budget_pairs) +
                                 " pairs exceeds cap " + std::to_string(limits.max_label_pairs));

    for (const TriplePairs& w : wedges) {
        std::uint64_t mask = 0;
        mask |= std::uint64_t{1} << intern(w.edge_a);
        mask |= std::uint64_t{1} << intern(w.edge_b);
        if (flavor == StcFlavor::stc_plus) mask |= std::uint64_t{1} << intern(w.nonedge);
        constraint.push_back(mask);
    }
    const int p = static_cast<int>(candidates.size());
    if (p > 62) throw ResourceLimitError("opt_labeling: candidate pair count exceeds 62");

    auto feasible = [&](std::uint64_t s) {
        for (std::uint64_t c : constraint)
            if (!(c & s)) return false;
        return true;
    };

    std::uint64_t chosen = 0;
    bool found = constraint.empty();
    std::int64_t opt = 0;
    for (int k = 1; k <= p && !found; ++k) {
        std::uint64_t s = (std::uint64_t{1} << k) - 1;
        do {
            if (feasible(s)) {
                chosen = s;
                opt = k;
                found = true;
                break;
            }
        } while (next_same_popcount(s, p));
    }
    if (!found) throw std::logic_error("full candidate set must be feasible");

    LabelingOracleResult out;
    out.opt = opt;
    out.witness.flavor = flavor;
    for (int b = 0; b < p; ++b) {
        if (!(chosen >> b & 1)) continue;
        const Pair& pr = candidates[static_cast<std::size_t>(b)];
        if (g.has_edge(pr.u, pr.v))
            out.witness.weak_edges.push_back(pr);
        else
            out.witness.added_pairs.push_back(pr);
    }
    std::sort(out.witness.weak_edges.begin(), out.witness.weak_edges.end());
    std::sort(out.witness.added_pairs.begin(), out.witness.added_pairs.end());
    return out;
}

}  // namespace stcc
