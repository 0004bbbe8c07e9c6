#include <doctest.h>

#include <set>
#include <sstream>

#include "stcclust/oracle.hpp"
#include "stcclust/stc.hpp"
#include "support.hpp"

using namespace stcc;
using namespace testsupport;

namespace {

std::set<PairKey> keys(const std::vector<Pair>& ps) {
    std::set<PairKey> out;
    for (const Pair& p : ps) out.insert(pair_key(p));
    return out;
}

}  // namespace

TEST_CASE("match_cd on the small graphs") {
    StcLabeling path = match_cd(path_graph(3));
    CHECK(path.matching_size == 1);
    CHECK(keys(path.weak_edges) == std::set<PairKey>{pair_key(0, 1), pair_key(1, 2)});
    CHECK(path.flavor == StcFlavor::stc);

    // The star's wedge graph is a triangle, so the maximum matching is 1.
    StcLabeling star = match_cd(star_graph(3));
    CHECK(star.matching_size == 1);
    CHECK(star.weak_edges.size() == 2);

    StcLabeling tri = match_cd(complete_graph(3));
    CHECK(tri.matching_size == 0);
    CHECK(tri.weak_edges.empty());
}

TEST_CASE("match_ce on the small graphs") {
    StcLabeling path = match_ce(path_graph(3));
    CHECK(path.matching_size == 1);
    CHECK(keys(path.weak_edges) == std::set<PairKey>{pair_key(0, 1), pair_key(1, 2)});
    CHECK(keys(path.added_pairs) == std::set<PairKey>{pair_key(0, 2)});
    CHECK(path.flavor == StcFlavor::stc_plus);

    // Any two star wedges share a star edge: only one can be matched.
    StcLabeling star = match_ce(star_graph(3));
    CHECK(star.matching_size == 1);
    CHECK(star.weak_edges.size() == 2);
    CHECK(star.added_pairs.size() == 1);

    CHECK(match_ce(complete_graph(3)).matching_size == 0);
}

TEST_CASE("check_stc_feasible direct cases") {
    Graph path = path_graph(3);
    StcLabeling lab;
    lab.flavor = StcFlavor::stc;
    lab.weak_edges = {{0, 1}};
    CHECK(check_stc_feasible(path, lab));

    lab.weak_edges.clear();
    CHECK_FALSE(check_stc_feasible(path, lab));

    Graph star = star_graph(3);
    lab.weak_edges = {{0, 1}};
    CHECK_FALSE(check_stc_feasible(star, lab));  // wedge (2,3;0) uncovered

    // The added pair covers the path wedge in the plus flavor.
    StcLabeling plus;
    plus.flavor = StcFlavor::stc_plus;
    plus.added_pairs = {{0, 2}};
    CHECK(check_stc_feasible(path, plus));
    plus.flavor = StcFlavor::stc;
    plus.weak_edges = {};
    CHECK_FALSE(check_stc_feasible(path, plus));
}

TEST_CASE("matching outputs are feasible, disjoint, and within cover bounds") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = er_graph(24, 0.25, seed);

        StcLabeling cd = match_cd(g);
        CHECK(check_stc_feasible(g, cd));
        CHECK(static_cast<std::int64_t>(cd.weak_edges.size()) <= 2 * cd.matching_size);
        CHECK(cd.added_pairs.empty());
        // Matched wedges are edge-disjoint.
        std::set<PairKey> used;
        for (const OpenWedge& w : cd.matched_wedges) {
            CHECK(used.insert(pair_key(w.i, w.k)).second);
            CHECK(used.insert(pair_key(w.j, w.k)).second);
        }

        StcLabeling ce = match_ce(g);
        CHECK(check_stc_feasible(g, ce));
        CHECK(ce.cover_size() <= 3 * ce.matching_size);
        // Matched wedges are node-pair disjoint.
        std::set<PairKey> used3;
        for (const OpenWedge& w : ce.matched_wedges) {
            CHECK(used3.insert(pair_key(w.i, w.k)).second);
            CHECK(used3.insert(pair_key(w.j, w.k)).second);
            CHECK(used3.insert(pair_key(w.i, w.j)).second);
        }
        // Weak edges are edges; added pairs are non-edges.
        for (const Pair& e : ce.weak_edges) CHECK(g.has_edge(e.u, e.v));
        for (const Pair& p : ce.added_pairs) CHECK_FALSE(g.has_edge(p.u, p.v));
    }
}

TEST_CASE("matching is deterministic per seed and varies the cover with seeds") {
    Graph g = er_graph(30, 0.2, 5);
    StcLabeling a = match_cd(g, 17);
    StcLabeling b = match_cd(g, 17);
    CHECK(a.matching_size == b.matching_size);
    CHECK(a.weak_edges == b.weak_edges);

    StcLabeling natural = match_cd(g, 0);
    StcLabeling shuffled = match_cd(g, 99);
    CHECK(check_stc_feasible(g, natural));
    CHECK(check_stc_feasible(g, shuffled));
}

TEST_CASE("lower bounds and cover approximation against the exact oracle") {
    OracleLimits lim;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = er_graph(7, 0.45, seed + 100);

        StcLabeling cd = match_cd(g);
        auto opt_cd = opt_clustering(g, ObjectiveKind::cluster_deletion, lim);
        auto opt_stc = opt_labeling(g, StcFlavor::stc, lim);
        CHECK(cd.matching_size <= opt_cd.opt);
        CHECK(cd.matching_size <= opt_stc.opt);
        CHECK(static_cast<std::int64_t>(cd.weak_edges.size()) <= 2 * opt_stc.opt);

        StcLabeling ce = match_ce(g);
        auto opt_ce = opt_clustering(g, ObjectiveKind::cluster_editing, lim);
        auto opt_plus = opt_labeling(g, StcFlavor::stc_plus, lim);
        CHECK(ce.matching_size <= opt_ce.opt);
        CHECK(ce.matching_size <= opt_plus.opt);
        CHECK(ce.cover_size() <= 3 * opt_plus.opt);
    }
}

namespace {

// Reference matchers working on the materialized structures, in the same
// stream order; the streaming implementations must reproduce them exactly.
StcLabeling reference_match_cd(const Graph& g) {
    StcLabeling lab;
    lab.flavor = StcFlavor::stc;
    std::vector<char> covered(static_cast<std::size_t>(g.edge_count()), 0);
    for_each_wedge(g, [&](const OpenWedge& w) {
        std::int64_t ea = g.edge_id(w.i, w.k);
        std::int64_t eb = g.edge_id(w.j, w.k);
        if (covered[static_cast<std::size_t>(ea)] || covered[static_cast<std::size_t>(eb)]) return;
        covered[static_cast<std::size_t>(ea)] = covered[static_cast<std::size_t>(eb)] = 1;
        lab.matched_wedges.push_back(w);
        ++lab.matching_size;
    });
    for (std::size_t e = 0; e < covered.size(); ++e)
        if (covered[e]) lab.weak_edges.push_back(g.edges()[e]);
    return lab;
}

StcLabeling reference_match_ce(const Graph& g) {
    StcLabeling lab;
    lab.flavor = StcFlavor::stc_plus;
    std::set<PairKey> covered;
    for_each_wedge(g, [&](const OpenWedge& w) {
        PairKey ij = pair_key(w.i, w.j), ik = pair_key(w.i, w.k), jk = pair_key(w.j, w.k);
        if (covered.contains(ij) || covered.contains(ik) || covered.contains(jk)) return;
        covered.insert(ij);
        covered.insert(ik);
        covered.insert(jk);
        lab.matched_wedges.push_back(w);
        ++lab.matching_size;
    });
    for (PairKey k : covered) {
        Pair p = pair_from_key(k);
        if (g.has_edge(p.u, p.v))
            lab.weak_edges.push_back(p);
        else
            lab.added_pairs.push_back(p);
    }
    return lab;
}

bool same_wedges(const std::vector<OpenWedge>& a, const std::vector<OpenWedge>& b) {
    return a == b;
}

}  // namespace

TEST_CASE("streaming matchers reproduce the reference greedy exactly") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = er_graph(22, 0.3, seed + 7000);

        StcLabeling fast_cd = match_cd(g);
        StcLabeling ref_cd = reference_match_cd(g);
        CHECK(fast_cd.matching_size == ref_cd.matching_size);
        CHECK(fast_cd.weak_edges == ref_cd.weak_edges);
        CHECK(same_wedges(fast_cd.matched_wedges, ref_cd.matched_wedges));

        StcLabeling fast_ce = match_ce(g);
        StcLabeling ref_ce = reference_match_ce(g);
        CHECK(fast_ce.matching_size == ref_ce.matching_size);
        CHECK(fast_ce.weak_edges == ref_ce.weak_edges);
        CHECK(fast_ce.added_pairs == ref_ce.added_pairs);
        CHECK(same_wedges(fast_ce.matched_wedges, ref_ce.matched_wedges));
    }
}

TEST_CASE("labeling export format") {
    Graph star = star_graph(3);
    StcLabeling ce = match_ce(star);
    std::ostringstream out;
    write_labeling(star, ce, out);
    std::istringstream in(out.str());
    std::string flavor;
    std::int64_t ms;
    in >> flavor >> ms;
    CHECK(flavor == "STC+");
    CHECK(ms == 1);
    std::string tag;
    int w_count = 0, a_count = 0;
    std::int64_t u, v;
    while (in >> tag >> u >> v) {
        if (tag == "W") ++w_count;
        if (tag == "A") ++a_count;
    }
    CHECK(w_count == 2);
    CHECK(a_count == 1);
}
