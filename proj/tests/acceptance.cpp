// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tot/abstract.hpp"
#include "tot/blocks.hpp"
#include "tot/build.hpp"
#include "tot/examples.hpp"
#include "tot/io.hpp"
#include "tot/refine.hpp"
#include "tot/tk.hpp"

using namespace tot;

namespace {

struct Tally {
    int checks = 0, fails = 0;
    std::string first;
    void operator()(bool ok, const std::string& what) {
        ++checks;
        if (!ok && fails++ == 0) first = what;
    }
    bool pass() const { return fails == 0 && checks > 0; }
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int n, const Tally& t, const std::string& detail) {
    std::cout << (t.pass() ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << " (" << t.checks
              << " checks";
    if (t.fails) std::cout << ", " << t.fails << " failed, first: " << t.first;
    std::cout << ")" << std::endl;
}

std::vector<VSet> sorted(std::vector<VSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool c1_figure() {
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    auto fg = examples::figure_graph();
    Caps caps;
    caps.max_vertices = 40;
    auto s = enumerate_separations(fg.g, 3, caps);
    TkFamily tk(s, false), stars(s, true);
    auto ts = f_tangles(s, tk);
    t(ts.size() == 4, "four tangles");
    // independent count: the clique orientations are 3-tangles by the direct test, and
    // every enumerated tangle is one of them
    std::set<std::vector<char>> clique_keys;
    for (VSet c : fg.cliques) {
        auto o = block_orientation(s, c);
        t(is_k_tangle(s, o), "clique orientation is a tangle");
        clique_keys.insert(choice_key(s, o));
    }
    t(clique_keys.size() == 4, "distinct clique tangles");
    for (const auto& o : ts.tangles) t(clique_keys.count(choice_key(s, o)) == 1, "tangle is a clique tangle");
    auto sts = f_tangles(s, stars);
    auto tilde = build_efficient_nested_set(s, sts).members;
    auto r = theorem_1_2(s, stars, sts, tilde);
    std::vector<VSet> ess;
    int inessential = 0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        if (r.home[i] >= 0) {
            ess.push_back(r.td.bags[i]);
        } else {
            ++inessential;
            t(popcount(r.td.bags[i]) <= 6, "inessential bag of size <= 6");
        }
    }
    t(sorted(ess) == sorted(fg.cliques), "essential bags are the four K6");
    double secs = since(t0);
    t(secs < 60, "under 60 s");
    std::ostringstream d;
    d << "four-K6 graph k=3: " << ts.size() << " tangles, " << ess.size() << " essential bags, " << inessential
      << " inessential bags <= 6, " << static_cast<int>(secs * 1000) << " ms";
    report(1, t, d.str());
    return t.pass();
}

bool c2_minimal_interiors() {
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2);
    int graphs = 0, essential = 0;
    for (int trial = 0; trial < 200 && graphs < 24; ++trial) {
        Graph g = trial % 2 ? oracle::clique_cluster(rng, 12)
                            : random_connected_graph(6 + static_cast<int>(rng() % 7), 0.45, rng);
        if (g.n() > 12) continue;
        int k = 2 + static_cast<int>(rng() % 3);
        auto s = enumerate_separations(g, k);
        TkFamily f(s, true);
        auto ts = f_tangles(s, f);
        if (ts.size() == 0) continue;
        ++graphs;
        NestedSet tilde;
        if (ts.size() >= 2) tilde = build_efficient_nested_set(s, ts).members;
        auto r = theorem_1_2(s, f, ts, tilde);
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            if (r.home[i] < 0) continue;
            ++essential;
            t(popcount(r.td.bags[i]) == oracle::min_exclusive_interior(s, r.home[i], ts), "interior is minimal");
        }
    }
    t(graphs >= 20, "at least 20 graphs");
    double secs = since(t0);
    t(secs < 600, "under 10 min");
    std::ostringstream d;
    d << graphs << " graphs, " << essential << " essential nodes equal the brute-force minimum, "
      << static_cast<int>(secs * 1000) << " ms";
    report(2, t, d.str());
    return t.pass();
}

bool c3_hub() {
    Tally t;
    auto p = examples::kHubExample;
    const int k = examples::kHubExampleK;
    auto h = examples::hub_cliques(p);
    Caps caps;
    caps.max_vertices = 64;
    caps.max_system = std::size_t{1} << 22;
    auto s = enumerate_proper_separations(h.g, k, caps);
    auto r = hub_check(s, h.main, h.hub, k);
    t(r.has_value(), "main and hub orientations are distinct tangles");
    std::ostringstream d;
    d << "n=" << h.g.n() << " k=" << k << " paths lp=" << p.lp << " pq=" << p.pq << " qq=" << p.qq << " qt=" << p.qt
      << " qr=" << p.qr;
    if (r) {
        t(r->any.interior_size < r->exclusive.interior_size, "smallest star beats every exclusive star");
        t(r->star_in_hub, "smallest star lies in the hub tangle");
        d << ": smallest star interior " << r->any.interior_size << " (also in the hub tangle), exclusive minimum "
          << r->exclusive.interior_size;
    }
    report(3, t, d.str());
    return t.pass();
}

struct Pipeline {
    GraphSystem s;
    TangleSet profiles, tangles;
    Theorem12Result r;
};

Pipeline run_profiles(const Graph& g, int k) {
    auto s = enumerate_separations(g, k);
    ProfileFamily<GraphUniverse> pf(s);
    TkFamily tk(s, false);
    auto profiles = f_tangles(s, pf);
    auto tangles = f_tangles(s, tk);
    NestedSet tilde;
    if (profiles.size() >= 2) tilde = build_efficient_nested_set(s, profiles).members;
    RegularProfileStars f(s, profiles);
    auto r = theorem_1_2(s, f, profiles, tilde);
    return {s, profiles, tangles, r};
}

bool c4_audit() {
    Tally t;
    int audited = 0, large = 0, blocks = 0;
    {
        auto pl = run_profiles(examples::twin_k7(), 3);
        auto rep = verify_theorem_4_8(pl.s, 3, pl.r.td, pl.profiles, pl.tangles);
        t(rep.ok(), "twin K7 audit");
        large += rep.large_part_count;
        blocks += rep.separable_blocks;
    }
    std::mt19937_64 rng(57);
    for (int i = 0; i < 60 && audited < 12; ++i) {
        Graph g = oracle::clique_cluster(rng, 12);
        int k = 2 + static_cast<int>(rng() % 3);
        auto pl = run_profiles(g, k);
        if (pl.profiles.size() < 2) continue;
        auto rep = verify_theorem_4_8(pl.s, k, pl.r.td, pl.profiles, pl.tangles);
        t(rep.ok(), "audit of " + to_edge_list(g));
        large += rep.large_part_count;
        blocks += rep.separable_blocks;
        ++audited;
    }
    t(audited >= 10, "at least 10 generated graphs");
    std::ostringstream d;
    d << "twin K7 plus " << audited << " generated graphs; " << large << " parts above 3k-3, " << blocks
      << " separable blocks, all parts";
    report(4, t, d.str());
    return t.pass();
}

template <class U>
void unscramble_checks(const SepSystem<U>& s, const Orientation& p, const std::vector<Id>& sigma, Tally& t) {
    auto r = maximal_of(s, p_sigma(s, p, sigma));
    t(set_closely_related(s, r, p), "maximal elements closely related");
    t(star_profile_status(s, r, p).narrow, "maximal elements narrow");
    auto un = unscramble_set(s, r, sigma, p);
    t(is_nested_set(s, un.set), "unscrambled set nested");
    t(set_closely_related(s, un.set, p), "unscrambled set closely related");
    bool sigma_nested = true;
    for (Id x : un.set)
        for (Id y : sigma) sigma_nested = sigma_nested && s.nested(x, y);
    t(sigma_nested, "unscrambled set nested with sigma");
    int n = static_cast<int>(dedup<U>(r).size());
    t(un.steps <= n * (n - 1) / 2, "step budget");
    t(star_profile_status(s, un.set, p).narrow, "narrowness kept");
    auto nm = near_max_star(s, sigma, p);
    auto st = star_profile_status(s, nm.star, p);
    t(st.narrow && st.near_maximal, "near-maximal star certified");
    t(set_closely_related(s, nm.star, p), "near-maximal star closely related");
    t(star_leq(s, sigma, nm.star), "near-maximal star above sigma");
}

template <class U>
void abstract_run(const SepSystem<U>& s, const Family<U>& f, const TangleSet& ts, Tally& t, int& essential) {
    for (std::size_t i = 0; i < ts.size(); ++i) unscramble_checks(s, ts[i], {}, t);
    NestedSet tilde;
    if (ts.size() >= 2) {
        tilde = build_efficient_nested_set(s, ts).members;
        for (const auto& node : nodes(s, tilde)) {
            auto st = star_status(s, node, ts);
            if (st.owners.size() == 1) unscramble_checks(s, ts[st.owners[0]], node, t);
        }
    }
    auto r = theorem_1_3(s, f, ts, tilde);
    t(refines<U>(r.n, tilde), "refines the input");
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        if (r.home[i] < 0) continue;
        ++essential;
        const auto& p = ts[r.home[i]];
        t(is_maximal_in(s, r.nodes[i], p), "essential node maximal");
        if (s.member_count() <= 12) t(!strictly_above(s, r.nodes[i], proper_stars_in(s, p)), "maximal by full scan");
    }
}

bool c5_abstract() {
    Tally t;
    int universes = 0, graphs = 0, essential = 0;
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400 && universes < 60; ++trial) {
        auto u = std::make_shared<const TableUniverse>(random_distributive_universe(rng, 40));
        t(check_universe(*u).distributive, "generated universe distributive");
        int top = *std::max_element(u->orders().begin(), u->orders().end()) + 1;
        for (int k = 1; k <= top; ++k) {
            auto s = table_system(u, k);
            CosmallJoinFamily<TableUniverse> f(s);
            auto ts = f_tangles(s, f);
            if (ts.size() == 0) continue;
            abstract_run(s, f, ts, t, essential);
            ++universes;
            break;
        }
    }
    t(universes >= 50, "at least 50 universes");
    std::mt19937_64 grng(8);
    std::vector<Graph> gs{examples::k4_bridge(), complete_graph(4)};
    for (int i = 0; i < 30; ++i) gs.push_back(oracle::clique_cluster(grng, 10));
    for (const auto& g : gs) {
        if (graphs >= 8) break;
        auto s = enumerate_separations(g, 3);
        TkFamily tk(s, true);
        ExplicitFamily<GraphUniverse> tp(s, t_prime(s), "pairs");
        UnionFamily<GraphUniverse> f({&tk, &tp}, "tk-stars+pairs");
        auto ts = f_tangles(s, f);
        if (ts.size() == 0) continue;
        abstract_run(s, f, ts, t, essential);
        ++graphs;
    }
    t(graphs >= 8, "graph S_3 systems");
    std::ostringstream d;
    d << universes << " distributive universes and " << graphs << " graph S_3 systems, " << essential
      << " essential nodes maximal";
    report(5, t, d.str());
    return t.pass();
}

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
        for (int x : n) ok = ok && s.nested(s.rep(m), s.rep(x));
        if (ok) n.push_back(m);
    }
    return n;
}

bool c6_oracles() {
    Tally t;
    std::mt19937_64 rng(11);
    int systems = 0, sweeps = 0, node_sets = 0, good_checks = 0;
    for (int trial = 0; trial < 400 && systems < 60; ++trial) {
        Graph g = random_connected_graph(3 + static_cast<int>(rng() % 5), 0.5, rng);
        int k = 1 + static_cast<int>(rng() % 3);
        auto s = enumerate_separations(g, k);
        if (s.member_count() > 18) continue;
        TkFamily tk(s, false), tks(s, true);
        ProfileFamily<GraphUniverse> pf(s);
        t(oracle::keys(s, f_tangles(s, tk)) == oracle::tangles(s, tk), "Tk tangles");
        t(oracle::keys(s, f_tangles(s, tks)) == oracle::tangles(s, tks), "Tk star tangles");
        t(oracle::keys(s, f_tangles(s, pf)) == oracle::tangles(s, pf), "profiles");
        ++systems;
    }
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
        for (int k = 1; k <= 3; ++k) {
            std::set<std::pair<VSet, VSet>> want, got;
            for (auto x : oracle::all_separations(g, k)) want.insert(lex_less(x.b, x.a) ? std::pair{x.b, x.a} : std::pair{x.a, x.b});
            auto s = enumerate_separations(g, k);
            for (std::size_t m = 0; m < s.member_count(); ++m) {
                const Sep& e = s.elem(s.rep(static_cast<int>(m)));
                got.insert(lex_less(e.b, e.a) ? std::pair{e.b, e.a} : std::pair{e.a, e.b});
            }
            t(got == want, "separation sweep");
            ++sweeps;
        }
    }
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected_graph(4 + static_cast<int>(rng() % 5), 0.35, rng);
        auto s = enumerate_separations(g, 2 + static_cast<int>(rng() % 2));
        auto n = random_nested(s, rng, 10);
        t(nodes(s, n) == nodes_by_orientations(s, n), "nodes by structure and by orientations");
        ++node_sets;
    }
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected_graph(5 + static_cast<int>(rng() % 4), 0.4, rng);
        auto s = enumerate_separations(g, 2 + static_cast<int>(rng() % 2));
        ProfileFamily<GraphUniverse> pf(s);
        auto ts = f_tangles(s, pf);
        if (ts.size() < 2) continue;
        for (std::size_t m = 0; m < s.member_count(); ++m) {
            Id r = s.rep(static_cast<int>(m));
            bool efficient = false;
            for (std::size_t i = 0; i < ts.size(); ++i)
                for (std::size_t j = 0; j < ts.size(); ++j)
                    if (i != j && ts[i].test(r) && ts[j].test(s.inv(r)) &&
                        distinguishers(s, ts[i], ts[j]).min_order == s.order(r))
                        efficient = true;
            t(is_good(s, static_cast<int>(m), ts) == efficient, "good iff efficient");
            ++good_checks;
        }
    }
    std::ostringstream d;
    d << systems << " tangle filters, " << sweeps << " separation sweeps, " << node_sets << " node comparisons, "
      << good_checks << " good/efficient comparisons";
    report(6, t, d.str());
    return t.pass();
}

// Every artifact the command line writes, built from scratch.
std::vector<std::string> artifacts(std::uint64_t seed) {
    std::vector<std::string> out;
    std::mt19937_64 rng(seed);
    Graph g = random_connected_graph(9, 0.4, rng);
    auto s = enumerate_separations(g, 3);
    TkFamily f(s, true);
    auto ts = f_tangles(s, f);
    Header h{"acceptance", seed, 3, f.tag()};
    out.push_back(graph_to_json(g));
    out.push_back(system_to_json(s, h));
    out.push_back(tangles_to_json(s, ts, h));
    AnnotatedNestedSet tilde;
    if (ts.size() >= 2) tilde = build_efficient_nested_set(s, ts);
    out.push_back(nested_to_json(s, tilde.members, h, tilde.pair_of));
    auto r = theorem_1_2(s, f, ts, tilde.members);
    out.push_back(nested_to_json(s, r.n, h));
    out.push_back(td_file(r.td, h));
    out.push_back(td_dot(r.td));
    out.push_back(stree_dot(s, to_stree(s, r.n)));
    std::mt19937_64 urng(seed);
    out.push_back(random_distributive_universe(urng, 40).to_json());
    return out;
}

bool c7_determinism() {
    Tally t;
    int files = 0, trips = 0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto a = artifacts(seed), b = artifacts(seed);
        t(a == b, "repeated run identical");
        files += static_cast<int>(a.size());
        std::mt19937_64 rng(seed);
        Graph g = random_connected_graph(9, 0.4, rng);
        t(graph_to_json(graph_from_json(a[0])) == a[0], "graph round trip");
        auto s = enumerate_separations(g, 3);
        auto ts = tangles_from_json(s, a[2]);
        Header h{"acceptance", seed, 3, "Tkstars"};
        t(tangles_to_json(s, ts, h) == a[2], "tangle file round trip");
        t(nested_from_json(s, a[3]).size() <= s.member_count(), "annotated nested set reloads");
        t(nested_to_json(s, nested_from_json(s, a[4]), h) == a[4], "nested set round trip");
        t(td_file(td_from_json(a[5]), h) == a[5], "decomposition round trip");
        t(TableUniverse::from_json(a[8]).to_json() == a[8], "universe round trip");
        trips += 5;
    }
    std::ostringstream d;
    d << "6 seeds, " << files << " artifacts byte-identical across runs, " << trips << " round trips";
    report(7, t, d.str());
    return t.pass();
}

}  // namespace

int main() {
    bool ok = true;
    ok &= c1_figure();
    ok &= c2_minimal_interiors();
    ok &= c3_hub();
    ok &= c4_audit();
    ok &= c5_abstract();
    ok &= c6_oracles();
    ok &= c7_determinism();
    return ok ? 0 : 1;
}
