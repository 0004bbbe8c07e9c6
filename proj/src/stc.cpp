#include "stcclust/stc.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "stcclust/rng.hpp"

namespace stcc {

namespace {

std::vector<Node> center_order(const Graph& g, std::uint64_t order_seed) {
    std::vector<Node> order = identity_order(g.node_count());
    if (order_seed != 0) {
        Rng rng(order_seed);
        rng.shuffle(order);
    }
    return order;
}

// Adjacency-by-stamp: marks the neighborhood of one node so that pair tests
// against it are O(1) array probes instead of binary searches. The stamp
// counter makes re-marking free. mark() returns the position of `back` in
// the marked adjacency list (the node is always present here: the matchers
// mark neighborhoods of the current center's neighbors).
class NeighborStamp {
public:
    explicit NeighborStamp(Node n) : stamp_(static_cast<std::size_t>(n), 0) {}

    std::size_t mark(const Graph& g, Node a, Node back) {
        if (++current_ == 0) {  // counter wrapped; clear and restart
            std::fill(stamp_.begin(), stamp_.end(), 0);
            current_ = 1;
        }
        auto nb = g.neighbors(a);
        std::size_t back_pos = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            stamp_[static_cast<std::size_t>(nb[i])] = current_;
            if (nb[i] == back) back_pos = i;
        }
        return back_pos;
    }

    bool marked(Node v) const { return stamp_[static_cast<std::size_t>(v)] == current_; }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t current_ = 0;
};

// Covered-edge bitmap indexed by adjacency slot; an edge owns one slot per
// direction and both are kept in sync, so every lookup stays inside the
// current center's contiguous slice.
class SlotCover {
public:
    explicit SlotCover(const Graph& g)
        : g_(g), covered_(static_cast<std::size_t>(2 * g.edge_count()), 0) {}

    bool covered(std::int64_t slot) const { return covered_[static_cast<std::size_t>(slot)]; }

    // Covers the edge (endpoint, center) given its slot on the center side
    // and the center's position inside the endpoint's adjacency.
    void cover(std::int64_t center_side_slot, Node endpoint, std::size_t center_pos) {
        covered_[static_cast<std::size_t>(center_side_slot)] = 1;
        covered_[static_cast<std::size_t>(g_.adjacency_offset(endpoint) +
                                          static_cast<std::int64_t>(center_pos))] = 1;
    }

    // Same, locating the center in the endpoint's sorted adjacency.
    void cover_via_search(std::int64_t center_side_slot, Node endpoint, Node center) {
        auto nb = g_.neighbors(endpoint);
        auto it = std::lower_bound(nb.begin(), nb.end(), center);
        cover(center_side_slot, endpoint, static_cast<std::size_t>(it - nb.begin()));
    }

    std::vector<Pair> covered_edges() const {
        std::vector<Pair> out;
        for (Node u = 0; u < g_.node_count(); ++u) {
            auto nb = g_.neighbors(u);
            std::int64_t base = g_.adjacency_offset(u);
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (nb[i] > u && covered_[static_cast<std::size_t>(base + static_cast<std::int64_t>(i))])
                    out.emplace_back(u, nb[i]);
        }
        return out;
    }

private:
    const Graph& g_;
    std::vector<char> covered_;
};

}  // namespace

StcLabeling match_cd(const Graph& g, std::uint64_t order_seed) {
    StcLabeling lab;
    lab.flavor = StcFlavor::stc;
    SlotCover cover(g);
    NeighborStamp adj_of_a(g.node_count());

    for (Node k : center_order(g, order_seed)) {
        auto nb = g.neighbors(k);
        const std::int64_t base = g.adjacency_offset(k);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            if (cover.covered(base + static_cast<std::int64_t>(a))) continue;
            std::size_t k_pos_in_a = adj_of_a.mark(g, nb[a], k);
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (cover.covered(base + static_cast<std::int64_t>(b))) continue;
                if (adj_of_a.marked(nb[b])) continue;  // closed by an edge, no wedge
                cover.cover(base + static_cast<std::int64_t>(a), nb[a], k_pos_in_a);
                cover.cover_via_search(base + static_cast<std::int64_t>(b), nb[b], k);
                lab.matched_wedges.push_back(OpenWedge{nb[a], nb[b], k});
                ++lab.matching_size;
                break;  // (a,k) is covered now
            }
        }
    }
    lab.weak_edges = cover.covered_edges();
    return lab;
}

StcLabeling match_ce(const Graph& g, std::uint64_t order_seed) {
    StcLabeling lab;
    lab.flavor = StcFlavor::stc_plus;
    SlotCover cover(g);
    std::unordered_set<PairKey> covered_nonedge;
    NeighborStamp adj_of_a(g.node_count());

    for (Node k : center_order(g, order_seed)) {
        auto nb = g.neighbors(k);
        const std::int64_t base = g.adjacency_offset(k);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            if (cover.covered(base + static_cast<std::int64_t>(a))) continue;
            std::size_t k_pos_in_a = adj_of_a.mark(g, nb[a], k);
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (cover.covered(base + static_cast<std::int64_t>(b))) continue;
                if (adj_of_a.marked(nb[b])) continue;
                if (covered_nonedge.contains(pair_key(nb[a], nb[b]))) continue;
                cover.cover(base + static_cast<std::int64_t>(a), nb[a], k_pos_in_a);
                cover.cover_via_search(base + static_cast<std::int64_t>(b), nb[b], k);
                covered_nonedge.insert(pair_key(nb[a], nb[b]));
                lab.matched_wedges.push_back(OpenWedge{nb[a], nb[b], k});
                ++lab.matching_size;
                break;
            }
        }
    }
    lab.weak_edges = cover.covered_edges();
    lab.added_pairs.reserve(covered_nonedge.size());
    for (PairKey k : covered_nonedge) lab.added_pairs.push_back(pair_from_key(k));
    std::sort(lab.added_pairs.begin(), lab.added_pairs.end());
    return lab;
}

bool check_stc_feasible(const Graph& g, const StcLabeling& lab) {
    std::unordered_set<PairKey> weak;
    weak.reserve(lab.weak_edges.size() * 2);
    for (const Pair& e : lab.weak_edges) weak.insert(pair_key(e));
    std::unordered_set<PairKey> added;
    if (lab.flavor == StcFlavor::stc_plus) {
        added.reserve(lab.added_pairs.size() * 2);
        for (const Pair& p : lab.added_pairs) added.insert(pair_key(p));
    }

    bool ok = true;
    for_each_wedge(g, [&](const OpenWedge& w) {
        if (!ok) return;
        if (weak.contains(pair_key(w.i, w.k)) || weak.contains(pair_key(w.j, w.k))) return;
        if (lab.flavor == StcFlavor::stc_plus && added.contains(pair_key(w.i, w.j))) return;
        ok = false;
    });
    return ok;
}

void write_labeling(const Graph& g, const StcLabeling& lab, std::ostream& out) {
    out << to_string(lab.flavor) << ' ' << lab.matching_size << '\n';
    for (const Pair& e : lab.weak_edges)
        out << "W " << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    for (const Pair& p : lab.added_pairs)
        out << "A " << g.label(p.u) << ' ' << g.label(p.v) << '\n';
}

void write_labeling(const Graph& g, const StcLabeling& lab, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError(path + ": cannot open for writing");
    write_labeling(g, lab, f);
}

}  // namespace stcc
