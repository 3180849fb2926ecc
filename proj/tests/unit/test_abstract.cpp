#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tot/abstract.hpp"
#include "tot/examples.hpp"
#include "tot/tk.hpp"

using namespace tot;

namespace {

// Diamond M3 with an involution fixing the middle atoms pairwise.
TableUniverse diamond() {
    // 0 bottom, 1..3 atoms, 4 top
    int n = 5;
    std::vector<char> leq(n * n, 0);
    for (int i = 0; i < n; ++i) {
        leq[i * n + i] = 1;
        leq[0 * n + i] = 1;
        leq[i * n + 4] = 1;
    }
    std::vector<int> meet(n * n), join(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) meet[a * n + b] = join[a * n + b] = a;
            else if (leq[a * n + b]) meet[a * n + b] = a, join[a * n + b] = b;
            else if (leq[b * n + a]) meet[a * n + b] = b, join[a * n + b] = a;
            else meet[a * n + b] = 0, join[a * n + b] = 4;
        }
    return TableUniverse(n, leq, {4, 2, 1, 3, 0}, meet, join);
}

struct Instance {
    std::shared_ptr<const TableUniverse> u;
    TableSystem s;
    TangleSet ts;
    int k = 0;
};

// Smallest k with at least two tangles (or one, failing that).
std::optional<Instance> pick(std::mt19937_64& rng) {
    auto u = std::make_shared<const TableUniverse>(random_distributive_universe(rng, 40));
    int top = *std::max_element(u->orders().begin(), u->orders().end()) + 1;
    std::optional<Instance> one;
    for (int k = 1; k <= top; ++k) {
        auto s = table_system(u, k);
        CosmallJoinFamily<TableUniverse> f(s);
        auto ts = f_tangles(s, f);
        if (ts.size() >= 2) return Instance{u, s, ts, k};
        if (ts.size() == 1 && !one) one = Instance{u, s, ts, k};
    }
    return one;
}

template <class U>
void check_unscrambling(const SepSystem<U>& s, const Orientation& p, const std::vector<Id>& sigma, int& checked) {
    auto r = maximal_of(s, p_sigma(s, p, sigma));
    CHECK(set_closely_related(s, r, p));
    CHECK(star_profile_status(s, r, p).narrow);
    auto un = unscramble_set(s, r, sigma, p);
    CHECK(is_nested_set(s, un.set));
    CHECK(set_closely_related(s, un.set, p));
    for (Id x : un.set)
        for (Id y : sigma) CHECK(s.nested(x, y));
    int n = static_cast<int>(dedup<U>(r).size());
    CHECK(un.steps <= n * (n - 1) / 2);
    CHECK(un.identities_held);
    CHECK(star_profile_status(s, un.set, p).narrow);
    auto nm = near_max_star(s, sigma, p);
    auto st = star_profile_status(s, nm.star, p);
    CHECK(st.narrow);
    CHECK(st.near_maximal);
    CHECK(set_closely_related(s, nm.star, p));
    CHECK(star_leq(s, sigma, nm.star));
    CHECK(nm.narrow_kept);
    ++checked;
}

}  // namespace

TEST_CASE("universe checks") {
    auto b = bipartition_universe(3, std::vector<int>(8, 0));
    auto rb = check_universe(b);
    CHECK(rb.lattice);
    CHECK(rb.involution_order_reversing);
    CHECK(rb.distributive);
    auto d = check_universe(diamond());
    CHECK(d.lattice);
    CHECK_FALSE(d.distributive);
    CHECK(!d.witness.empty());
    // chain 0 < 1 < 2 with 1 fixed
    std::vector<char> leq{1, 1, 1, 0, 1, 1, 0, 0, 1};
    std::vector<int> meet{0, 0, 0, 0, 1, 1, 0, 1, 2}, join{0, 1, 2, 1, 1, 2, 2, 2, 2};
    auto c = check_universe(TableUniverse(3, leq, {2, 1, 0}, meet, join));
    CHECK(c.lattice);
    CHECK(c.involution_order_reversing);
    CHECK(c.distributive);
}

TEST_CASE("universe file round trip") {
    std::mt19937_64 rng(5);
    auto u = random_distributive_universe(rng, 40);
    auto v = TableUniverse::from_json(u.to_json());
    CHECK(v.to_json() == u.to_json());
    CHECK_THROWS_AS(TableUniverse::from_json("{\"elements\":[0,1],\"leq\":[],\"inv\":[1],\"meet\":[[0,0],[0,1]],\"join\":[[0,1],[1,1]]}"),
                    Error);
}

TEST_CASE("random distributive universes satisfy the lattice facts") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        auto u = random_distributive_universe(rng, 40);
        REQUIRE(u.size() <= 40);
        auto rep = check_universe(u);
        CHECK(rep.lattice);
        CHECK(rep.involution_order_reversing);
        CHECK(rep.distributive);
        // u, w co-small with u >= w*, w >= u* gives u ∧ w co-small
        for (int a = 0; a < u.size(); ++a)
            for (int b = 0; b < u.size(); ++b)
                if (u.is_cosmall(a) && u.is_cosmall(b) && u.leq(u.inv(b), a) && u.leq(u.inv(a), b))
                    CHECK(u.is_cosmall(u.meet(a, b)));
        // submodular order
        for (int a = 0; a < u.size(); ++a)
            for (int b = 0; b < u.size(); ++b)
                CHECK(u.order(u.join(a, b)) + u.order(u.meet(a, b)) <= u.order(a) + u.order(b));
    }
}

TEST_CASE("pairs with co-small join lie in the co-small join family") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto inst = pick(rng);
        if (!inst) continue;
        CosmallJoinFamily<TableUniverse> f(inst->s);
        for (const auto& pr : t_prime(inst->s)) CHECK(f.contains(pr));
    }
    auto g = std::make_shared<const Graph>(Graph(3));
    auto s = enumerate_separations(g, 1);
    CHECK(t_prime(s).empty());
}

TEST_CASE("unscrambling and near-maximal stars on distributive universes") {
    std::mt19937_64 rng(2024);
    int universes = 0, checked = 0, with_maximal_related = 0, profiles = 0;
    for (int trial = 0; trial < 200 && universes < 60; ++trial) {
        auto inst = pick(rng);
        if (!inst) continue;
        ++universes;
        const auto& s = inst->s;
        for (std::size_t i = 0; i < inst->ts.size(); ++i) {
            const auto& p = inst->ts[i];
            check_unscrambling(s, p, {}, checked);
            ++profiles;
            bool found = false;
            auto all = proper_stars_in(s, p);
            for (const auto& st : all) {
                bool maximal = !strictly_above(s, st, all);
                CHECK(maximal == is_maximal_in(s, st, p));
                if (maximal && set_closely_related(s, st, p)) found = true;
            }
            with_maximal_related += found;
        }
        if (inst->ts.size() >= 2) {
            auto tilde = build_efficient_nested_set(s, inst->ts).members;
            CHECK(verify_premise(s, tilde, inst->ts).each_member_good);
            for (const auto& node : nodes(s, tilde)) {
                auto st = star_status(s, node, inst->ts);
                if (st.owners.size() == 1) check_unscrambling(s, inst->ts[st.owners[0]], node, checked);
            }
        }
    }
    CHECK(universes >= 50);
    MESSAGE("universes " << universes << " star checks " << checked << " profiles " << profiles
                         << " with a maximal closely related star " << with_maximal_related);
}

TEST_CASE("unscramble_pair contracts") {
    std::mt19937_64 rng(77);
    int pairs = 0;
    for (int trial = 0; trial < 200 && pairs < 200; ++trial) {
        auto inst = pick(rng);
        if (!inst) continue;
        const auto& s = inst->s;
        for (std::size_t i = 0; i < inst->ts.size(); ++i) {
            const auto& p = inst->ts[i];
            std::vector<Id> cr;
            for (Id x : ids_of<TableUniverse>(p))
                if (closely_related(s, x, p)) cr.push_back(x);
            for (Id a : cr)
                for (Id b : cr) {
                    if (a >= b) continue;
                    auto res = unscramble_pair(s, a, b, {}, p);
                    if (!res.changed) {
                        CHECK(res.r == a);
                        continue;
                    }
                    ++pairs;
                    const auto& u = s.universe();
                    CHECK(u.leq(u.meet(s.elem(a), s.elem(s.inv(b))), s.elem(res.r)));
                    CHECK(s.leq(res.r, a));
                    CHECK(s.leq(res.s, b));
                    CHECK(s.nested(res.r, res.s));
                    CHECK(closely_related(s, res.r, p));
                    CHECK(closely_related(s, res.s, p));
                    CHECK(res.both_identities);
                }
        }
    }
    CHECK(pairs > 20);
}

TEST_CASE("non-distributive universe is rejected but unscrambling still runs") {
    auto u = std::make_shared<const TableUniverse>(diamond());
    auto s = table_system(u, 1);
    CosmallJoinFamily<TableUniverse> f(s);
    auto ts = f_tangles(s, f);
    CHECK_THROWS_AS(theorem_1_3(s, f, ts, {}), Error);
    MESSAGE("diamond tangles " << ts.size());
}

TEST_CASE("abstract refinement on distributive universes") {
    std::mt19937_64 rng(99);
    int runs = 0, essential = 0;
    for (int trial = 0; trial < 300 && runs < 50; ++trial) {
        auto inst = pick(rng);
        if (!inst) continue;
        const auto& s = inst->s;
        CosmallJoinFamily<TableUniverse> f(s);
        NestedSet tilde;
        if (inst->ts.size() >= 2) tilde = build_efficient_nested_set(s, inst->ts).members;
        auto r = theorem_1_3(s, f, inst->ts, tilde);
        ++runs;
        CHECK(refines<TableUniverse>(r.n, tilde));
        if (r.n.size() <= 16) CHECK(general_nodes(s, r.n) == general_nodes_by_orientations(s, r.n));
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            if (r.home[i] < 0) {
                CHECK(f.contains(r.nodes[i]));
            } else {
                ++essential;
                const auto& p = inst->ts[r.home[i]];
                CHECK(is_maximal_in(s, r.nodes[i], p));
                if (s.member_count() <= 12) CHECK(!strictly_above(s, r.nodes[i], proper_stars_in(s, p)));
            }
        }
    }
    CHECK(runs >= 50);
    MESSAGE("runs " << runs << " essential nodes " << essential);
}

TEST_CASE("abstract refinement on graph systems") {
    std::mt19937_64 rng(8);
    std::vector<Graph> graphs{examples::k4_bridge(), complete_graph(4)};
    for (int i = 0; i < 30; ++i) graphs.push_back(oracle::clique_cluster(rng, 10));
    int runs = 0;
    for (const auto& g : graphs) {
        if (runs >= 8) break;
        auto s = enumerate_separations(g, 3);
        TkFamily tk(s, true);
        ExplicitFamily<GraphUniverse> tp(s, t_prime(s), "pairs");
        UnionFamily<GraphUniverse> f({&tk, &tp}, "tk-stars+pairs");
        auto ts = f_tangles(s, f);
        if (ts.size() == 0) continue;
        NestedSet tilde;
        if (ts.size() >= 2) tilde = build_efficient_nested_set(s, ts).members;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            int checked = 0;
            check_unscrambling(s, ts[i], {}, checked);
        }
        auto r = theorem_1_3(s, f, ts, tilde);
        ++runs;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            if (r.home[i] < 0)
                CHECK(f.contains(r.nodes[i]));
            else
                CHECK(is_maximal_in(s, r.nodes[i], ts[r.home[i]]));
        }
    }
    CHECK(runs >= 8);
}
