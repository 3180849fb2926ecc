#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tot/build.hpp"
#include "tot/examples.hpp"
#include "tot/io.hpp"
#include "tot/refine.hpp"
#include "tot/tk.hpp"

using namespace tot;

TEST_CASE("graph files round trip") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        auto g = random_graph(1 + static_cast<int>(rng() % 12), 0.3, rng);
        CHECK(to_edge_list(parse_edge_list(to_edge_list(g))) == to_edge_list(g));
        CHECK(graph_to_json(graph_from_json(graph_to_json(g))) == graph_to_json(g));
    }
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), Error);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2}"), Error);
}

TEST_CASE("tangle, nested set and decomposition files round trip") {
    std::mt19937_64 rng(17);
    int runs = 0;
    for (int i = 0; i < 30 && runs < 8; ++i) {
        auto g = oracle::clique_cluster(rng, 10);
        auto s = enumerate_separations(g, 3);
        TkFamily f(s, true);
        auto ts = f_tangles(s, f);
        if (ts.size() < 2) continue;
        Header h{"test", 7, 3, "Tkstars"};
        auto text = tangles_to_json(s, ts, h);
        auto back = tangles_from_json(s, text);
        REQUIRE(back.size() == ts.size());
        for (std::size_t t = 0; t < ts.size(); ++t) CHECK(back[t] == ts[t]);
        CHECK(tangles_to_json(s, back, h) == text);

        auto tilde = build_efficient_nested_set(s, ts);
        auto ntext = nested_to_json(s, tilde.members, h, tilde.pair_of);
        CHECK(nested_from_json(s, ntext) == canonical(tilde.members));

        auto r = theorem_1_2(s, f, ts, tilde.members);
        auto tdtext = td_file(r.td, h);
        CHECK(td_from_json(tdtext) == r.td);
        CHECK(td_file(td_from_json(tdtext), h) == tdtext);
        ++runs;
    }
    CHECK(runs >= 5);
}

TEST_CASE("star files round trip and reject non-stars") {
    auto s = enumerate_separations(examples::k4_bridge(), 3);
    TkFamily f(s, true);
    auto stars = list_members(s, f);
    REQUIRE(!stars.empty());
    Header h{"test", 1, 3, ""};
    auto text = stars_to_json(s, stars, h);
    auto back = stars_from_json(s, text);
    CHECK(back.size() == stars.size());
    CHECK(stars_to_json(s, back, h) == text);
    CHECK_THROWS_AS(stars_from_json(s, "{\"stars\": [[[[0],[0,1,2,3,4,5,6,7,8]]]]}"), Error);
    CHECK_THROWS_AS(tangles_from_json(s, "{\"members\": []}"), Error);
}

TEST_CASE("line format keeps key order and one array entry per line") {
    auto out = line_format("{\"b\":1,\"a\":[[1,2],[3]],\"c\":[]}");
    CHECK(out == "{\n  \"b\": 1,\n  \"a\": [\n    [1,2],\n    [3]\n  ],\n  \"c\": []\n}\n");
    CHECK_THROWS_AS(line_format("{"), Error);
}
