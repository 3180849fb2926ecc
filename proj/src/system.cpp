#include "tot/system.hpp"

#include <cmath>

namespace tot {

namespace {

template <class F>
void for_each_subset_upto(int n, int maxsize, F&& f) {
    std::vector<int> idx;
    VSet cur = 0;
    auto rec = [&](auto&& self, int start) -> void {
        f(cur);
        if (static_cast<int>(idx.size()) == maxsize) return;
        for (int v = start; v < n; ++v) {
            idx.push_back(v);
            cur |= bit(v);
            self(self, v + 1);
            cur &= ~bit(v);
            idx.pop_back();
        }
    };
    if (maxsize >= 0) rec(rec, 0);
}

}  // namespace

namespace {

GraphSystem enumerate(std::shared_ptr<const Graph> g, int k, const Caps& caps, bool proper) {
    if (k < 0) throw Error(ErrorKind::InvalidInput, "k must be nonnegative");
    if (g->n() > caps.max_vertices)
        throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(g->n()) + " vertices; cap is " +
                                             std::to_string(caps.max_vertices));
    const VSet all = g->vertices();
    // Predict the output size first.
    double predicted = 0;
    for_each_subset_upto(g->n(), k - 1, [&](VSet x) {
        auto comps = g->components(all & ~x);
        if (proper)
            predicted += comps.size() < 2 ? 0.0 : std::ldexp(1.0, static_cast<int>(comps.size()) - 1) - 1;
        else
            predicted += comps.empty() ? 1.0 : std::ldexp(1.0, static_cast<int>(comps.size()) - 1);
    });
    if (predicted > static_cast<double>(caps.max_system))
        throw Error(ErrorKind::TooLarge, "predicted |S_k| exceeds the cap");

    std::vector<Sep> seps;
    for_each_subset_upto(g->n(), k - 1, [&](VSet x) {
        auto comps = g->components(all & ~x);
        std::size_t c = comps.size();
        if (c == 0) {
            if (!proper) seps.push_back({x, x});
            return;
        }
        // Fix the last component on the B side to halve the work; (A,B) and (B,A) are the same member.
        for (std::uint64_t mask = proper ? 1 : 0; mask < (std::uint64_t{1} << (c - 1)); ++mask) {
            VSet a = x, b = x | comps[c - 1];
            for (std::size_t i = 0; i + 1 < c; ++i) (((mask >> i) & 1u) ? a : b) |= comps[i];
            seps.push_back({a, b});
        }
    });
    // One-sided separations (A,V), emitted explicitly.
    if (!proper) for_each_subset_upto(g->n(), k - 1, [&](VSet a) { seps.push_back({a, all}); });
    auto u = std::make_shared<const GraphUniverse>(g);
    GraphSystem s(u, seps);
    if (s.member_count() > caps.max_system) throw Error(ErrorKind::TooLarge, "|S_k| exceeds the cap");
    return s;
}

}  // namespace

GraphSystem enumerate_separations(std::shared_ptr<const Graph> g, int k, const Caps& caps) {
    return enumerate(std::move(g), k, caps, false);
}

GraphSystem enumerate_proper_separations(const Graph& g, int k, const Caps& caps) {
    return enumerate(std::make_shared<const Graph>(g), k, caps, true);
}

GraphSystem enumerate_separations(const Graph& g, int k, const Caps& caps) {
    return enumerate_separations(std::make_shared<const Graph>(g), k, caps);
}

TableSystem table_system(std::shared_ptr<const TableUniverse> u, int k) {
    std::vector<int> elems;
    for (int x = 0; x < u->size(); ++x)
        if (!u->has_order() || u->order(x) < k) elems.push_back(x);
    return TableSystem(std::move(u), elems);
}

}  // namespace tot
