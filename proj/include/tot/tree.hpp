#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tot/tangles.hpp"

namespace tot {

// Nested sets are stored as sorted lists of member indices.
using NestedSet = std::vector<int>;

inline NestedSet canonical(NestedSet n) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    return n;
}

template <class U>
void check_nested(const SepSystem<U>& s, const NestedSet& n) {
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j)
            if (!s.nested(s.rep(n[i]), s.rep(n[j])))
                throw Error(ErrorKind::NotNested, s.str(s.rep(n[i])) + " crosses " + s.str(s.rep(n[j])));
}

template <class U>
void check_regular(const SepSystem<U>& s, const NestedSet& n) {
    for (int m : n) {
        Id r = s.rep(m);
        if (s.is_degenerate(r) || s.is_small(r) || s.is_cosmall(r))
            throw Error(ErrorKind::Irregular, s.str(r) + " has a small orientation");
    }
}

template <class U>
std::vector<Id> oriented_members(const SepSystem<U>& s, const NestedSet& n) {
    std::vector<Id> out;
    for (int m : n) {
        out.push_back(s.rep(m));
        if (!s.is_degenerate(s.rep(m))) out.push_back(s.inv(s.rep(m)));
    }
    return out;
}

template <class U>
std::vector<Id> maximal_elements(const SepSystem<U>& s, const std::vector<Id>& o) {
    std::vector<Id> out;
    for (Id x : o) {
        bool maximal = true;
        for (Id y : o)
            if (s.less(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The orientation of n at the head of x: x itself, and every other member oriented toward it.
template <class U>
std::vector<Id> head_orientation(const SepSystem<U>& s, const NestedSet& n, Id x) {
    std::vector<Id> o{x};
    for (int m : n) {
        if (m == s.member(x)) continue;
        Id t = s.rep(m);
        Id xi = s.inv(x);
        if (s.leq(t, x) || s.leq(t, xi))
            o.push_back(t);
        else
            o.push_back(s.inv(t));
    }
    return o;
}

// Splitting stars of a regular nested set, computed from the heads of its oriented members.
template <class U>
std::vector<std::vector<Id>> nodes(const SepSystem<U>& s, NestedSet n) {
    n = canonical(std::move(n));
    check_nested(s, n);
    check_regular(s, n);
    if (n.empty()) return {{}};
    std::vector<std::vector<Id>> out;
    for (Id x : oriented_members(s, n)) out.push_back(maximal_elements(s, head_orientation(s, n, x)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Same, by enumerating all consistent orientations of n.
template <class U>
std::vector<std::vector<Id>> nodes_by_orientations(const SepSystem<U>& s, NestedSet n) {
    n = canonical(std::move(n));
    check_nested(s, n);
    check_regular(s, n);
    if (n.size() > 25) throw Error(ErrorKind::TooLarge, "too many members for orientation enumeration");
    std::vector<std::vector<Id>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n.size()); ++mask) {
        std::vector<Id> o;
        for (std::size_t i = 0; i < n.size(); ++i) o.push_back((mask >> i) & 1u ? s.inv(s.rep(n[i])) : s.rep(n[i]));
        bool ok = true;
        for (Id a : o)
            for (Id b : o)
                if (a != b && s.less(s.inv(a), b)) ok = false;
        if (ok) out.push_back(maximal_elements(s, o));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Tree with each oriented edge (from -> to) labelled by a separation in the star of `to`.
struct STree {
    struct Edge {
        int from = 0;
        int to = 0;
        Id label = 0;  // alpha(from, to); alpha(to, from) is its inverse
    };
    std::vector<std::vector<Id>> stars;
    std::vector<Edge> edges;
    std::size_t size() const { return stars.size(); }
};

inline bool is_tree(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return false;
    if (static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

// Checks tree shape and that the recorded star of every node equals its incoming labels.
template <class U>
std::optional<std::string> stree_defect(const SepSystem<U>& s, const STree& t) {
    std::vector<std::pair<int, int>> es;
    std::vector<std::vector<Id>> incoming(t.size());
    for (const auto& e : t.edges) {
        es.emplace_back(e.from, e.to);
        incoming[e.to].push_back(e.label);
        incoming[e.from].push_back(s.inv(e.label));
    }
    if (!is_tree(static_cast<int>(t.size()), es)) return "not a tree";
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto a = incoming[i], b = t.stars[i];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return "star of node " + std::to_string(i) + " differs from its incoming labels";
    }
    return std::nullopt;
}

// The S-tree of a regular tree set: one node per splitting star, one edge per member.
template <class U>
STree to_stree(const SepSystem<U>& s, const NestedSet& n) {
    STree t;
    t.stars = nodes(s, n);
    std::map<Id, int> home;
    for (std::size_t i = 0; i < t.stars.size(); ++i)
        for (Id x : t.stars[i]) home[x] = static_cast<int>(i);
    for (int m : canonical(n)) {
        Id r = s.rep(m);
        auto a = home.find(r), b = home.find(s.inv(r));
        if (a == home.end() || b == home.end()) throw Error(ErrorKind::Irregular, "member not in any node");
        t.edges.push_back({b->second, a->second, r});
    }
    if (auto d = stree_defect(s, t)) throw Error(ErrorKind::Irregular, *d);
    return t;
}

// The node of a regular tree set at which orientation o lives (its maximal elements on n).
template <class U>
std::vector<Id> home_node(const SepSystem<U>& s, const NestedSet& n, const Orientation& o) {
    std::vector<Id> part;
    for (int m : n) part.push_back(chosen(s, o, m));
    return maximal_elements(s, part);
}

template <class U>
bool refines(const NestedSet& n, const NestedSet& coarser) {
    auto a = canonical(n), b = canonical(coarser);
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

template <class U>
std::string stree_dot(const SepSystem<U>& s, const STree& t) {
    std::string out = "digraph stree {\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::string label;
        for (Id x : t.stars[i]) label += (label.empty() ? "" : "\\n") + s.str(x);
        out += "  n" + std::to_string(i) + " [label=\"" + (label.empty() ? "{}" : label) + "\"];\n";
    }
    for (const auto& e : t.edges)
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
               std::to_string(s.order(e.label)) + "\"];\n";
    out += "}\n";
    return out;
}

// ---------------------------------------------------------------------------
// Tree-decompositions of graphs

struct TreeDecomposition {
    std::vector<VSet> bags;
    std::vector<std::pair<int, int>> edges;
    bool operator==(const TreeDecomposition&) const = default;
};

VSet interior(const GraphSystem& s, const std::vector<Id>& star);

TreeDecomposition to_tree_decomposition(const GraphSystem& s, const NestedSet& n);

// Separation induced by the oriented edge (from -> to): (union of bags behind, union of bags ahead).
Sep induced_separation(const TreeDecomposition& td, int from, int to);

struct PartReport {
    std::vector<int> home;  // tangles living at this part
    bool essential = false;
};

struct EdgeReport {
    Sep sep;
    int order = 0;
    bool efficient = false;  // efficiently distinguishes some tangle pair
};

struct TdReport {
    bool valid = true;
    std::string witness;
    int adhesion = 0;
    std::vector<PartReport> parts;
    std::vector<EdgeReport> edge_reports;
    bool distinguishes_all = false;
    bool distinguishes_all_efficiently = false;
};

TdReport validate_td(const GraphSystem& s, const TreeDecomposition& td, const TangleSet& tangles);

std::string td_to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const std::string& text);
std::string td_dot(const TreeDecomposition& td);

}  // namespace tot
