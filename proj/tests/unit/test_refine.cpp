#include <chrono>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tot/examples.hpp"
#include "tot/refine.hpp"
#include "tot/tk.hpp"

using namespace tot;

namespace {

std::vector<VSet> sorted_bags(const std::vector<VSet>& bags) {
    auto b = bags;
    std::sort(b.begin(), b.end());
    return b;
}

}  // namespace

TEST_CASE("graph refinement pipeline on K4 and K4+K4") {
    {
        auto s = enumerate_separations(complete_graph(4), 3);
        TkFamily f(s, true);
        auto ts = f_tangles(s, f);
        auto r = theorem_1_2(s, f, ts, {});
        CHECK(r.td.bags.size() == 1);
        CHECK(r.home == std::vector<int>{0});
    }
    auto s = enumerate_separations(examples::k4_bridge(), 3);
    TkFamily f(s, true);
    auto ts = f_tangles(s, f);
    auto tilde = build_efficient_nested_set(s, ts).members;
    auto r = theorem_1_2(s, f, ts, tilde);
    CHECK(refines<GraphUniverse>(r.n, tilde));
    std::vector<VSet> ess;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        if (r.home[i] >= 0)
            ess.push_back(r.td.bags[i]);
        else
            CHECK(in_family_up_to_small(s, f, r.nodes[i]));
    }
    CHECK(sorted_bags(ess) == sorted_bags({from_list({0, 1, 2, 3}), from_list({4, 5, 6, 7})}));
}

TEST_CASE("figure graph pipeline") {
    auto fg = examples::figure_graph();
    Caps caps;
    caps.max_vertices = 40;
    auto t0 = std::chrono::steady_clock::now();
    auto s = enumerate_separations(fg.g, 3, caps);
    TkFamily f(s, true);
    auto ts = f_tangles(s, f);
    REQUIRE(ts.size() == 4);
    auto tilde = build_efficient_nested_set(s, ts).members;
    auto r = theorem_1_2(s, f, ts, tilde);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE("figure pipeline seconds: " << secs << " nodes " << r.nodes.size());
    std::vector<VSet> ess;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        if (r.home[i] >= 0)
            ess.push_back(r.td.bags[i]);
        else {
            CHECK(popcount(r.td.bags[i]) <= 6);
            CHECK(in_family_up_to_small(s, f, r.nodes[i]));
        }
    }
    CHECK(sorted_bags(ess) == sorted_bags(fg.cliques));
}

TEST_CASE("essential interiors are minimal among exclusive stars") {
    std::mt19937_64 rng(23);
    int graphs = 0, essential = 0;
    for (int trial = 0; trial < 60 && graphs < 24; ++trial) {
        Graph g = trial % 2 ? oracle::clique_cluster(rng, 12) : random_connected_graph(6 + static_cast<int>(rng() % 5), 0.45, rng);
        int k = 2 + static_cast<int>(rng() % 3);
        auto s = enumerate_separations(g, k);
        TkFamily f(s, true);
        auto ts = f_tangles(s, f);
        if (ts.size() == 0) continue;
        ++graphs;
        auto tilde = build_efficient_nested_set(s, ts).members;
        auto r = theorem_1_2(s, f, ts, tilde);
        CHECK(refines<GraphUniverse>(r.n, tilde));
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            if (r.home[i] < 0) {
                CHECK(in_family_up_to_small(s, f, r.nodes[i]));
                continue;
            }
            ++essential;
            int want = oracle::min_exclusive_interior(s, r.home[i], ts);
            CHECK(popcount(r.td.bags[i]) == want);
            // small-side bound
            for (Id x : ids_of<GraphUniverse>(ts[r.home[i]])) CHECK(popcount(s.elem(x).a & r.td.bags[i]) < k);
        }
        auto rep = validate_td(s, r.td, ts);
        CHECK(rep.valid);
        CHECK(rep.distinguishes_all);
    }
    CHECK(graphs >= 20);
    MESSAGE("graphs " << graphs << " essential nodes " << essential);
}
