#include "tot/examples.hpp"

namespace tot::examples {

namespace {

void add_clique(Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
}

}  // namespace

Graph k4_bridge() {
    Graph g = disjoint_union(complete_graph(4), complete_graph(4));
    g.add_edge(3, 4);
    return g;
}

Graph twin_k7() {
    Graph g = disjoint_union(complete_graph(7), complete_graph(7));
    g.add_edge(6, 7);
    return g;
}

FigureGraph figure_graph() {
    FigureGraph f;
    Graph g(32);
    add_clique(g, {0, 1, 2, 3, 4, 5});
    f.cliques.push_back(from_list({0, 1, 2, 3, 4, 5}));
    // Outer clique i occupies 6 + 7i .. 11 + 7i; its connector is 12 + 7i.
    for (int i = 0; i < 3; ++i) {
        int base = 6 + 7 * i;
        std::vector<int> o;
        for (int j = 0; j < 6; ++j) o.push_back(base + j);
        add_clique(g, o);
        f.cliques.push_back(from_list(o));
        int c0 = 2 * i, c1 = 2 * i + 1, m = base + 6;
        g.add_edge(o[0], c0);
        g.add_edge(o[1], c1);
        g.add_edge(m, o[0]);
        g.add_edge(m, c1);
    }
    // 27: pendant at 0; 28-29: path hanging from 1; 30-31: triangle through 3.
    g.add_edge(27, 0);
    g.add_edge(28, 1);
    g.add_edge(28, 29);
    add_clique(g, {30, 31, 3});
    f.appendages = from_list({27, 28, 29, 30, 31});
    f.g = g;
    return f;
}

int hub_vertex_count(const HubParams& p) {
    return 8 + p.lp + 2 * p.pq + p.qq + 2 * p.qt + 2 * p.qr + 2 * p.side + 2 * p.corner + p.main + p.hub;
}

HubGraph hub_cliques(const HubParams& p) {
    int n = hub_vertex_count(p);
    if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "hub graph needs " + std::to_string(n) + " vertices");
    HubGraph h;
    Graph g(n);
    int next = 0;
    auto fresh = [&](int count) {
        std::vector<int> out;
        for (int i = 0; i < count; ++i) out.push_back(next++);
        return out;
    };
    int L = next++, P = next++, Q1 = next++, Q2 = next++, T = next++, B = next++, R1 = next++, R2 = next++;
    auto lp = fresh(p.lp), pq1 = fresh(p.pq), pq2 = fresh(p.pq), qq = fresh(p.qq);
    auto qt = fresh(p.qt), qb = fresh(p.qt), qr1 = fresh(p.qr), qr2 = fresh(p.qr);
    auto cat = [](std::initializer_list<std::vector<int>> parts) {
        std::vector<int> out;
        for (const auto& v : parts) out.insert(out.end(), v.begin(), v.end());
        return out;
    };
    std::vector<std::vector<int>> cl;
    cl.push_back(cat({{L, P, Q1, T}, lp, pq1, qt, fresh(p.side)}));
    cl.push_back(cat({{L, P, Q2, B}, lp, pq2, qb, fresh(p.side)}));
    cl.push_back(cat({{T, Q1, R1}, qt, qr1, fresh(p.corner)}));
    cl.push_back(cat({{B, Q2, R2}, qb, qr2, fresh(p.corner)}));
    cl.push_back(cat({{Q1, Q2, R1, R2}, qq, qr1, qr2, fresh(p.main)}));
    cl.push_back(cat({{L, P, Q1, Q2}, lp, pq1, pq2, qq, fresh(p.hub)}));
    for (const auto& c : cl) {
        add_clique(g, c);
        h.cliques.push_back(from_list(c));
    }
    h.g = g;
    h.main = h.cliques[4];
    h.hub = h.cliques[5];
    return h;
}

}  // namespace tot::examples
