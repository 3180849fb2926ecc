#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tot/core.hpp"

namespace tot {

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    VSet vertices() const { return full_set(n_); }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return has(adj_[u], v); }
    VSet nbrs(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // N(S) minus S.
    VSet boundary(VSet s) const;
    std::vector<VSet> components(VSet within) const;
    bool connected(VSet within) const;

    // True iff G[U] is the union of the G[A_i ∩ U].
    bool covers(VSet u, const std::vector<VSet>& sides) const;
    bool covers(const std::vector<VSet>& sides) const { return covers(vertices(), sides); }
    bool covers(VSet a) const { return covers(std::vector<VSet>{a}); }
    bool covers(VSet a, VSet b) const { return covers(std::vector<VSet>{a, b}); }
    bool covers(VSet a, VSet b, VSet c) const { return covers(std::vector<VSet>{a, b, c}); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VSet> adj_;
    std::vector<std::pair<int, int>> edges_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Disjoint union; vertices of b are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph random_graph(int n, double p, std::mt19937_64& rng);
// Random connected graph built from a spanning tree plus extra edges.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
// Accepts either format, chosen by the first non-blank character.
Graph load_graph(const std::string& path);

}  // namespace tot
