#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tot/build.hpp"

namespace tot {

template <class U>
STree shift_stree(const ShiftContext<U>& ctx, const STree& t) {
    STree out = t;
    for (auto& st : out.stars)
        for (Id& x : st) x = ctx.shift(x);
    for (auto& e : out.edges) e.label = ctx.shift(e.label);
    if (auto d = stree_defect(*ctx.sys, out)) throw Error(ErrorKind::VerificationFailed, "shifted tree: " + *d);
    return out;
}

struct RefineResult {
    STree tree;             // leaves {s_i*} plus F-stars; may contain small separations
    std::vector<Id> labels; // every edge label, oriented away from the root
    NestedSet added;        // new members that are neither small nor co-small
    int rounds = 0;
};

// An S-tree over F ∪ {{s_1*}, ..., {s_n*}} with each s_i as a leaf separation.
// Exact least-fixed-point search: y is closed when some F-star at its head has all other
// members z with z* closed, and the leaves ahead of y split exactly among them.
template <class U>
RefineResult refine_inessential(const SepSystem<U>& s, std::vector<Id> sigma, const Family<U>& f,
                                const TangleSet& ts) {
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    if (!is_star(s, sigma)) throw Error(ErrorKind::NotAStar, "refine_inessential needs a star");
    if (sigma.size() > 64) throw Error(ErrorKind::TooLarge, "star with more than 64 members");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool home = true;
        for (Id x : sigma)
            if (!ts[i].test(x)) home = false;
        if (home) throw Error(ErrorKind::HypothesisFailure, "star is home to tangle " + std::to_string(i));
    }
    for (Id x : sigma) {
        bool related = false;
        for (const auto& t : ts.tangles)
            if (closely_related(s, s.inv(x), t)) related = true;
        if (!related)
            throw Error(ErrorKind::HypothesisFailure, s.str(s.inv(x)) + " is not closely related to any tangle");
    }

    const Id n = static_cast<Id>(s.size());
    const std::size_t k = sigma.size();
    std::vector<char> in_dom(n, 0), closed(n, 0), leaf(n, 0);
    std::vector<std::uint64_t> req(n, 0);
    std::vector<std::vector<Id>> cert(n);
    std::vector<Id> dom;
    for (Id y = 0; y < n; ++y) {
        if (s.is_degenerate(y)) continue;
        if (k > 0 && !s.leq(sigma[0], y)) continue;
        bool ok = true;
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < k && ok; ++j) {
            bool ahead = s.leq(y, s.inv(sigma[j]));
            if (ahead) r |= std::uint64_t{1} << j;
            if (!ahead && !s.leq(sigma[j], y)) ok = false;
        }
        if (!ok) continue;
        in_dom[y] = 1;
        req[y] = r;
        dom.push_back(y);
    }
    for (std::size_t j = 0; j < k; ++j) {
        Id l = s.inv(sigma[j]);
        if (!in_dom[l]) continue;
        closed[l] = leaf[l] = 1;
        cert[l] = {l};
        req[l] = std::uint64_t{1} << j;
    }
    auto ok = [&](Id z) { return in_dom[s.inv(z)] && closed[s.inv(z)]; };
    auto try_close = [&](Id y) {
        bool found = false;
        f.stars_containing(y, ok, [&](const std::vector<Id>& st) {
            std::uint64_t acc = 0;
            for (Id z : st) {
                if (z == y) continue;
                std::uint64_t r = req[s.inv(z)];
                if (acc & r) return false;
                acc |= r;
            }
            if (acc != req[y]) return false;
            cert[y] = st;
            found = true;
            return true;
        });
        return found;
    };
    auto done = [&]() -> std::optional<Id> {
        if (k > 0) return closed[sigma[0]] ? std::optional<Id>(sigma[0]) : std::nullopt;
        for (Id y : dom)
            if (closed[y] && closed[s.inv(y)]) return y;
        return std::nullopt;
    };

    RefineResult res;
    if (k == 0 && f.contains({})) {
        res.tree.stars.push_back({});
        return res;
    }
    std::optional<Id> target;
    for (;;) {
        ++res.rounds;
        bool changed = false;
        for (Id y : dom) {
            if (closed[y]) continue;
            if (try_close(y)) closed[y] = changed = true;
        }
        target = done();
        if (target || !changed) break;
    }
    if (!target) throw Error(ErrorKind::SearchExhausted, "no S-tree over F with the required leaves");

    STree& t = res.tree;
    auto add_node = [&](const std::vector<Id>& st) {
        auto sorted = st;
        std::sort(sorted.begin(), sorted.end());
        t.stars.push_back(sorted);
        return static_cast<int>(t.stars.size()) - 1;
    };
    auto expand = [&](auto&& self, Id y, int parent) -> void {
        int node = add_node(cert[y]);
        t.edges.push_back({parent, node, y});
        res.labels.push_back(y);
        if (leaf[y]) return;
        for (Id z : cert[y])
            if (z != y) self(self, s.inv(z), node);
    };
    if (k > 0) {
        int root = add_node({s.inv(sigma[0])});
        expand(expand, sigma[0], root);
    } else {
        Id y = *target;
        int a = add_node(cert[y]);
        for (Id z : cert[y])
            if (z != y) expand(expand, s.inv(z), a);
        expand(expand, s.inv(y), a);
        res.labels.push_back(y);
    }
    if (auto d = stree_defect(s, t)) throw Error(ErrorKind::VerificationFailed, "refinement tree: " + *d);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& st = t.stars[i];
        bool is_leaf = st.size() == 1 && std::find_if(sigma.begin(), sigma.end(), [&](Id x) {
                                             return s.inv(x) == st[0];
                                         }) != sigma.end();
        if (!is_leaf && !f.contains(st)) throw Error(ErrorKind::VerificationFailed, "internal node outside F");
    }
    std::vector<int> sig_members;
    for (Id x : sigma) sig_members.push_back(s.member(x));
    for (Id y : res.labels) {
        int m = s.member(y);
        if (s.is_small(y) || s.is_cosmall(y)) continue;
        if (std::find(sig_members.begin(), sig_members.end(), m) != sig_members.end()) continue;
        res.added.push_back(m);
    }
    res.added = canonical(res.added);
    return res;
}

// Least-order s' in P with s <= s' (ties: first in canonical order).
template <class U>
Id min_order_extension(const SepSystem<U>& s, Id x, const Orientation& p) {
    if (!closely_related(s, x, p)) throw Error(ErrorKind::HypothesisFailure, s.str(x) + " is not closely related");
    std::optional<Id> best;
    for (Id y : ids_of<U>(p))
        if (s.leq(x, y) && (!best || s.order(y) < s.order(*best))) best = y;
    if (!closely_related(s, *best, p)) throw Error(ErrorKind::HypothesisFailure, "extension not closely related");
    return *best;
}

// The tangle pair that t distinguishes efficiently, oriented so that the first contains t*.
template <class U>
std::optional<std::pair<int, int>> efficient_pair(const SepSystem<U>& s, Id t, const TangleSet& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (i == j || !ts[i].test(s.inv(t)) || !ts[j].test(t)) continue;
            if (distinguishers(s, ts[i], ts[j]).min_order == s.order(t))
                return std::make_pair(static_cast<int>(i), static_cast<int>(j));
        }
    return std::nullopt;
}

// r' in P of order <= |r| nested with sigma (and above floor if given), by corner descent.
template <class U>
Id nested_replacement(const SepSystem<U>& s, Id r, const std::vector<Id>& sigma, const Orientation& p,
                      const TangleSet& ts, std::optional<Id> floor = std::nullopt) {
    if (!p.test(r)) throw Error(ErrorKind::HypothesisFailure, "r is not in P");
    auto crossings = [&](Id x) {
        int c = 0;
        for (Id t : sigma) c += !s.nested(x, t);
        return c;
    };
    Id cur = r;
    const int bound = s.order(r);
    while (crossings(cur) > 0) {
        std::optional<Id> next;
        for (Id t : sigma) {
            if (s.nested(cur, t)) continue;
            auto pr = efficient_pair(s, t, ts);
            if (!pr) throw Error(ErrorKind::HypothesisFailure, s.str(t) + " distinguishes no pair efficiently");
            const auto& q = ts[pr->first];  // q contains t*
            // the join on the other side distinguishes q from its partner, so this meet is no larger
            auto c = q.test(cur) ? s.meet(cur, s.inv(t)) : s.meet(cur, t);
            if (!c || !p.test(*c) || s.order(*c) > bound) continue;
            if (floor && !s.leq(*floor, *c)) continue;
            if (crossings(*c) >= crossings(cur)) continue;
            next = c;
            break;
        }
        if (!next) throw Error(ErrorKind::HypothesisFailure, "no corner reduces the crossing count");
        cur = *next;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Graph-specific: interiors and the refinement pipeline

struct MinStarResult {
    std::vector<Id> star;
    int interior_size = 0;
    std::size_t search_nodes = 0;
};

// Smallest interior among exclusive stars of non-small separations in tangle ti.
MinStarResult min_exclusive_interior(const GraphSystem& s, int ti, const TangleSet& ts);

// A min-interior exclusive star sigma' in tangle ti with sigma <= sigma', nested with sigma,
// every member closely related to the tangle.
MinStarResult min_interior_exclusive_star(const GraphSystem& s, int ti, const std::vector<Id>& sigma,
                                          const TangleSet& ts);

// True if sigma, possibly after adding small separations, is a member of F.
bool in_family_up_to_small(const GraphSystem& s, const Family<GraphUniverse>& f, const std::vector<Id>& sigma);

struct Theorem12Result {
    NestedSet n;
    TreeDecomposition td;
    std::vector<std::vector<Id>> nodes;
    std::vector<int> home;  // tangle index per node, -1 for inessential
    std::vector<std::string> warnings;
};

enum class RefineMode { Inessential, Essential, Both };

Theorem12Result theorem_1_2(const GraphSystem& s, const Family<GraphUniverse>& f, const TangleSet& ts,
                            const NestedSet& tilde, RefineMode mode = RefineMode::Both);

}  // namespace tot
