#include "tot/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tot {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorKind::TooLarge, "graphs are limited to 64 vertices");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidInput, "self-loop");
    if (adjacent(u, v)) return;
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges_.begin(), edges_.end());
}

VSet Graph::boundary(VSet s) const {
    VSet out = 0;
    for_each_vertex(s, [&](int v) { out |= adj_[v]; });
    return out & ~s;
}

std::vector<VSet> Graph::components(VSet within) const {
    std::vector<VSet> out;
    VSet left = within;
    while (left) {
        VSet comp = left & (~left + 1);
        VSet frontier = comp;
        while (frontier) {
            VSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= adj_[v]; });
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool Graph::connected(VSet within) const { return components(within).size() <= 1; }

bool Graph::covers(VSet u, const std::vector<VSet>& sides) const {
    VSet all = 0;
    for (VSet s : sides) all |= s;
    if (!subset(u, all)) return false;
    bool ok = true;
    for_each_vertex(u, [&](int v) {
        if (!ok) return;
        VSet reach = 0;
        for (VSet s : sides)
            if (has(s, v)) reach |= s;
        if (!subset(adj_[v] & u, reach)) ok = false;
    });
    return ok;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.n(), v + a.n());
    return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j);
    return g;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j);
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> es;
    int n = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<long> nums;
        long x;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof()) throw Error(ErrorKind::ParseError, "bad token on line " + std::to_string(lineno));
        if (nums.empty()) continue;
        if (nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
            throw Error(ErrorKind::ParseError, "expected 'u v' on line " + std::to_string(lineno));
        es.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
        n = std::max<int>(n, static_cast<int>(std::max(nums[0], nums[1])) + 1);
    }
    if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "more than 64 vertices");
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return graph_from_json(text);
    return parse_edge_list(text);
}

}  // namespace tot
