#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace tot;

namespace {

std::size_t brute_members(const Graph& g, int k) {
    std::set<std::pair<VSet, VSet>> m;
    for (auto s : oracle::all_separations(g, k)) {
        auto key = lex_less(s.b, s.a) ? std::make_pair(s.b, s.a) : std::make_pair(s.a, s.b);
        m.insert(key);
    }
    return m.size();
}

}  // namespace

TEST_CASE("separation counts on small graphs") {
    CHECK(enumerate_separations(complete_graph(3), 1).member_count() == 1);
    CHECK(enumerate_separations(path_graph(3), 2).member_count() == 5);
    CHECK(enumerate_separations(complete_graph(4), 3).member_count() == 11);
}

TEST_CASE("enumeration matches brute-force sweep") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.45, rng);
        for (int k = 1; k <= 3; ++k) {
            auto s = enumerate_separations(g, k);
            CHECK(s.member_count() == brute_members(g, k));
            for (Id x = 0; x < static_cast<Id>(s.size()); ++x) {
                CHECK(is_separation(g, s.elem(x).a, s.elem(x).b));
                CHECK(s.order(x) < k);
                CHECK(s.inv(s.inv(x)) == x);
            }
        }
    }
}

TEST_CASE("separation validation errors") {
    Graph g = path_graph(3);
    CHECK_THROWS_AS(separation(g, 0b001, 0b100), Error);
    try {
        separation(g, 0b011, 0b100);
        FAIL("expected crossing edge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CrossingEdge);
    }
    try {
        separation(g, 0b001, 0b010);
        FAIL("expected cover failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACover);
    }
}

TEST_CASE("size cap") {
    Caps caps;
    caps.max_vertices = 5;
    CHECK_THROWS_AS(enumerate_separations(complete_graph(6), 2, caps), Error);
    caps.max_vertices = 16;
    caps.max_system = 10;
    CHECK_THROWS_AS(enumerate_separations(complete_graph(6), 3, caps), Error);
}
