#include "tot/tree.hpp"

#include <functional>

#include "json.hpp"

namespace tot {

VSet interior(const GraphSystem& s, const std::vector<Id>& star) {
    VSet out = s.universe().all();
    for (Id x : star) out &= s.elem(x).b;
    return out;
}

TreeDecomposition to_tree_decomposition(const GraphSystem& s, const NestedSet& n) {
    STree t = to_stree(s, n);
    TreeDecomposition td;
    for (const auto& st : t.stars) td.bags.push_back(interior(s, st));
    for (const auto& e : t.edges) td.edges.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
    std::sort(td.edges.begin(), td.edges.end());
    return td;
}

namespace {

std::vector<std::vector<int>> adjacency(const TreeDecomposition& td) {
    std::vector<std::vector<int>> adj(td.bags.size());
    for (auto [a, b] : td.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

VSet side_union(const TreeDecomposition& td, const std::vector<std::vector<int>>& adj, int start, int blocked) {
    VSet u = 0;
    std::vector<int> stack{start};
    std::vector<char> seen(td.bags.size(), 0);
    seen[start] = 1;
    if (blocked >= 0) seen[blocked] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        u |= td.bags[x];
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return u;
}

}  // namespace

Sep induced_separation(const TreeDecomposition& td, int from, int to) {
    auto adj = adjacency(td);
    return {side_union(td, adj, from, to), side_union(td, adj, to, from)};
}

TdReport validate_td(const GraphSystem& s, const TreeDecomposition& td, const TangleSet& tangles) {
    TdReport rep;
    const Graph& g = s.universe().graph();
    auto fail = [&](const std::string& w) {
        if (rep.valid) rep.witness = w;
        rep.valid = false;
    };
    const int nb = static_cast<int>(td.bags.size());
    for (auto [a, b] : td.edges)
        if (a < 0 || b < 0 || a >= nb || b >= nb) {
            fail("edge endpoint out of range");
            return rep;
        }
    if (!is_tree(nb, td.edges)) {
        fail("underlying graph is not a tree");
        return rep;
    }
    VSet all = 0;
    for (VSet b : td.bags) all |= b;
    if (all != g.vertices()) fail("bags miss vertex " + set_str(g.vertices() & ~all));
    for (auto [u, v] : g.edges()) {
        bool hosted = false;
        for (VSet b : td.bags)
            if (has(b, u) && has(b, v)) hosted = true;
        if (!hosted) fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag");
    }
    auto adj = adjacency(td);
    for (int v = 0; v < g.n(); ++v) {
        int count = 0, start = -1;
        for (int i = 0; i < nb; ++i)
            if (has(td.bags[i], v)) {
                ++count;
                start = i;
            }
        if (count == 0) continue;
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++reached;
            for (int y : adj[x])
                if (!seen[y] && has(td.bags[y], v)) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        if (reached != count) fail("parts containing vertex " + std::to_string(v) + " are disconnected");
    }
    for (auto [a, b] : td.edges) rep.adhesion = std::max(rep.adhesion, popcount(td.bags[a] & td.bags[b]));

    const std::size_t nt = tangles.size();
    std::vector<std::vector<int>> min_order(nt, std::vector<int>(nt, -1));
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = i + 1; j < nt; ++j)
            min_order[i][j] = min_order[j][i] = distinguishers(s, tangles[i], tangles[j]).min_order;
    std::vector<std::vector<char>> dist(nt, std::vector<char>(nt, 0)), eff(nt, std::vector<char>(nt, 0));

    // incoming[t] = ids of induced separations pointing toward t (or -1 if not in S)
    std::vector<std::vector<std::optional<Id>>> incoming(nb);
    for (auto [a, b] : td.edges) {
        Sep ab{side_union(td, adj, a, b), side_union(td, adj, b, a)};
        EdgeReport er;
        er.sep = ab;
        er.order = ab.order();
        auto id = s.find(ab);
        incoming[b].push_back(id);
        incoming[a].push_back(id ? std::optional<Id>(s.inv(*id)) : std::nullopt);
        if (id) {
            for (std::size_t i = 0; i < nt; ++i)
                for (std::size_t j = 0; j < nt; ++j) {
                    if (i == j || !tangles[i].test(*id) || !tangles[j].test(s.inv(*id))) continue;
                    dist[i][j] = dist[j][i] = 1;
                    if (min_order[i][j] == er.order) {
                        er.efficient = true;
                        eff[i][j] = eff[j][i] = 1;
                    }
                }
        }
        rep.edge_reports.push_back(er);
    }
    rep.parts.resize(nb);
    for (int t = 0; t < nb; ++t)
        for (std::size_t i = 0; i < nt; ++i) {
            bool home = true;
            for (const auto& id : incoming[t])
                if (!id || !tangles[i].test(*id)) home = false;
            if (home) rep.parts[t].home.push_back(static_cast<int>(i));
        }
    for (auto& p : rep.parts) p.essential = !p.home.empty();
    rep.distinguishes_all = rep.distinguishes_all_efficiently = true;
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = i + 1; j < nt; ++j) {
            if (!dist[i][j]) rep.distinguishes_all = false;
            if (!eff[i][j]) rep.distinguishes_all_efficiently = false;
        }
    return rep;
}

std::string td_to_json(const TreeDecomposition& td) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        j["nodes"].push_back({{"id", i}, {"bag", to_list(td.bags[i])}});
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : td.edges) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

TreeDecomposition td_from_json(const std::string& text) {
    TreeDecomposition td;
    try {
        auto j = nlohmann::json::parse(text);
        const auto& nodes = j.at("nodes");
        td.bags.assign(nodes.size(), 0);
        for (const auto& n : nodes) {
            auto id = n.at("id").get<std::size_t>();
            if (id >= nodes.size()) throw Error(ErrorKind::ParseError, "node id out of range");
            td.bags[id] = from_list(n.at("bag").get<std::vector<int>>());
        }
        for (const auto& e : j.at("edges")) td.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return td;
}

std::string td_dot(const TreeDecomposition& td) {
    std::string out = "graph td {\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + set_str(td.bags[i]) + "\"];\n";
    for (auto [a, b] : td.edges)
        out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + " [label=\"" +
               std::to_string(popcount(td.bags[a] & td.bags[b])) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace tot
