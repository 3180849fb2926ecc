#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tot/build.hpp"
#include "tot/examples.hpp"
#include "tot/tk.hpp"

using namespace tot;

namespace {

int member_of(const GraphSystem& s, std::vector<int> a, std::vector<int> b) {
    return s.member(s.id_of(Sep{from_list(a), from_list(b)}));
}

// Greedy random regular nested set.
NestedSet random_nested(const GraphSystem& s, std::mt19937_64& rng, std::size_t cap) {
    std::vector<int> order;
    for (std::size_t m = 0; m < s.member_count(); ++m) {
        Id r = s.rep(static_cast<int>(m));
        if (!s.is_small(r) && !s.is_cosmall(r) && !s.is_degenerate(r)) order.push_back(static_cast<int>(m));
    }
    std::shuffle(order.begin(), order.end(), rng);
    NestedSet n;
    for (int m : order) {
        if (n.size() >= cap) break;
        bool ok = true;
        for (int x : n)
            if (!s.nested(s.rep(m), s.rep(x))) ok = false;
        if (ok) n.push_back(m);
    }
    return n;
}

}  // namespace

TEST_CASE("nodes of tiny nested sets") {
    auto s = enumerate_separations(path_graph(5), 2);
    CHECK(nodes(s, {}).size() == 1);
    int s1 = member_of(s, {0, 1}, {1, 2, 3, 4});
    int s2 = member_of(s, {0, 1, 2}, {2, 3, 4});
    int s3 = member_of(s, {0, 1, 2, 3}, {3, 4});
    CHECK(nodes(s, {s1}).size() == 2);
    auto chain = to_stree(s, {s1, s2, s3});
    CHECK(chain.size() == 4);
    std::vector<int> deg(4, 0);
    for (auto e : chain.edges) deg[e.from]++, deg[e.to]++;
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<int>{1, 1, 2, 2});

    Graph star(4);
    for (int i = 1; i < 4; ++i) star.add_edge(0, i);
    auto t = enumerate_separations(star, 2);
    NestedSet hub;
    for (int i = 1; i < 4; ++i) {
        std::vector<int> rest{0};
        for (int j = 1; j < 4; ++j)
            if (j != i) rest.push_back(j);
        hub.push_back(member_of(t, {0, i}, rest));
    }
    auto ns = nodes(t, hub);
    CHECK(ns.size() == 4);
    std::size_t biggest = 0;
    for (auto& n : ns) biggest = std::max(biggest, n.size());
    CHECK(biggest == 3);

    int small = member_of(s, {0}, {0, 1, 2, 3, 4});
    CHECK_THROWS_AS(nodes(s, {small}), Error);
}

TEST_CASE("structural nodes agree with orientation enumeration; TD round trip") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_connected_graph(n, 0.35, rng);
        int k = 2 + static_cast<int>(rng() % 2);
        auto s = enumerate_separations(g, k);
        auto nset = random_nested(s, rng, 10);
        CHECK(nodes(s, nset) == nodes_by_orientations(s, nset));
        auto t = to_stree(s, nset);
        CHECK(t.size() == nset.size() + 1);
        CHECK(!stree_defect(s, t).has_value());
        auto td = to_tree_decomposition(s, nset);
        TkFamily tk(s, false);
        auto ts = f_tangles(s, tk);
        auto rep = validate_td(s, td, ts);
        CHECK(rep.valid);
        CHECK(rep.adhesion < k);
        // induced separations reproduce the nested set
        NestedSet induced;
        for (auto [a, b] : td.edges) induced.push_back(s.member(s.id_of(induced_separation(td, a, b))));
        CHECK(canonical(induced) == canonical(nset));
        // every tangle lives at exactly one node
        for (const auto& tau : ts.tangles) {
            int homes = 0;
            for (const auto& st : t.stars) {
                bool in = true;
                for (Id x : st)
                    if (!tau.test(x)) in = false;
                homes += in;
            }
            CHECK(homes == 1);
        }
        // permuted input gives the same labelled tree
        auto perm = nset;
        std::shuffle(perm.begin(), perm.end(), rng);
        auto t2 = to_stree(s, perm);
        CHECK(t2.stars == t.stars);
        CHECK(refines<GraphUniverse>(nset, {}));
        CHECK(refines<GraphUniverse>(nset, nset));
        if (!nset.empty()) CHECK(!refines<GraphUniverse>({}, nset));
        CHECK(td_from_json(td_to_json(td)) == td);
    }
}

TEST_CASE("tree-decomposition of K4+K4") {
    auto s = enumerate_separations(examples::k4_bridge(), 3);
    int bridge = member_of(s, {0, 1, 2, 3}, {3, 4, 5, 6, 7});
    auto td = to_tree_decomposition(s, {bridge});
    REQUIRE(td.bags.size() == 2);
    std::vector<VSet> bags = td.bags;
    std::sort(bags.begin(), bags.end());
    CHECK(bags == std::vector<VSet>{from_list({0, 1, 2, 3}), from_list({3, 4, 5, 6, 7})});
    TkFamily tk(s, false);
    auto ts = f_tangles(s, tk);
    auto rep = validate_td(s, td, ts);
    CHECK(rep.valid);
    CHECK(rep.adhesion == 1);
    CHECK(rep.parts[0].essential);
    CHECK(rep.parts[1].essential);
    CHECK(rep.distinguishes_all);
    CHECK(rep.edge_reports[0].efficient);

    TreeDecomposition trivial{{s.universe().all()}, {}};
    auto r2 = validate_td(s, trivial, ts);
    CHECK(r2.valid);
    CHECK(!r2.distinguishes_all);

    TreeDecomposition broken{{from_list({0, 1, 2, 3}), from_list({3, 4}), from_list({0, 4, 5, 6, 7})}, {{0, 1}, {1, 2}}};
    auto r3 = validate_td(s, broken, ts);
    CHECK(!r3.valid);
    CHECK(r3.witness.find("vertex 0") != std::string::npos);
    CHECK(td_dot(td).find("--") != std::string::npos);
}

TEST_CASE("efficient nested sets") {
    auto k4 = enumerate_separations(complete_graph(4), 3);
    TkFamily tk4(k4, false);
    CHECK(build_efficient_nested_set(k4, f_tangles(k4, tk4)).members.empty());

    auto s = enumerate_separations(examples::k4_bridge(), 3);
    TkFamily tk(s, false);
    auto ts = f_tangles(s, tk);
    auto built = build_efficient_nested_set(s, ts);
    REQUIRE(built.members.size() == 1);
    CHECK(s.order(s.rep(built.members[0])) == 1);

    EmptyFamily<GraphUniverse> none;
    TangleSet empty;
    CHECK_THROWS_AS(build_efficient_nested_set(s, empty), Error);

    auto rep = verify_premise(s, {}, ts);
    CHECK(!rep.distinguishes_all);
    // inject a non-efficient member: an order-2 separation distinguishing the two tangles
    for (std::size_t m = 0; m < s.member_count(); ++m) {
        Id r = s.rep(static_cast<int>(m));
        if (s.order(r) == 2 && ts[0].test(r) != ts[1].test(r)) {
            auto bad = verify_premise(s, {static_cast<int>(m)}, ts);
            CHECK(!bad.each_member_efficient);
            CHECK(!bad.witness.empty());
            break;
        }
    }
}

TEST_CASE("figure graph: three nested order-2 distinguishers") {
    auto fg = examples::figure_graph();
    Caps caps;
    caps.max_vertices = 40;
    auto s = enumerate_separations(fg.g, 3, caps);
    TkFamily tk(s, false);
    auto ts = f_tangles(s, tk);
    auto built = build_efficient_nested_set(s, ts);
    CHECK(built.members.size() == 3);
    for (int m : built.members) CHECK(s.order(s.rep(m)) == 2);
    auto rep = verify_premise(s, built.members, ts);
    CHECK(rep.nested);
    CHECK(rep.each_member_good);
    auto td = to_tree_decomposition(s, built.members);
    auto tr = validate_td(s, td, ts);
    CHECK(tr.valid);
    // the central part holds more than its K6
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        if (subset(fg.cliques[0], td.bags[i])) CHECK(popcount(td.bags[i]) > 6);
}

TEST_CASE("built sets are premise-valid on random graphs; table matches brute force") {
    std::mt19937_64 rng(19);
    int runs = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = random_connected_graph(n, 0.35, rng);
        int k = 2 + static_cast<int>(rng() % 3);
        auto s = enumerate_separations(g, k);
        ProfileFamily<GraphUniverse> pf(s);
        auto ts = f_tangles(s, pf);
        if (ts.size() < 2) continue;
        ++runs;
        auto table = distinguisher_table(s, ts);
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                int best = 1 << 20;
                for (Id x = 0; x < static_cast<Id>(s.size()); ++x)
                    if (ts[i].test(x) && ts[j].test(s.inv(x)) && !s.is_degenerate(x)) best = std::min(best, s.order(x));
                CHECK(table.min_order[i][j] == best);
            }
        auto built = build_efficient_nested_set(s, ts);
        auto rep = verify_premise(s, built.members, ts);
        CHECK(rep.nested);
        CHECK(rep.distinguishes_all);
        CHECK(rep.each_member_efficient);
        CHECK(rep.each_member_good);
    }
    CHECK(runs >= 10);
}
