#include "tot/tk.hpp"

namespace tot {

TkFamily::TkFamily(const GraphSystem& s, bool stars_only)
    : s_(&s), g_(&s.universe().graph()), stars_(stars_only) {}

bool TkFamily::cover(VSet a, VSet b, VSet c) const {
    if ((a | b | c) != g_->vertices()) return false;
    bool ok = true;
    for_each_vertex(g_->vertices(), [&](int v) {
        if (!ok) return;
        VSet reach = 0;
        if (has(a, v)) reach |= a;
        if (has(b, v)) reach |= b;
        if (has(c, v)) reach |= c;
        if (!subset(g_->nbrs(v), reach)) ok = false;
    });
    return ok;
}

bool TkFamily::contains(std::vector<Id> set) const {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty() || set.size() > 3) return false;
    if (stars_ && !is_star(*s_, set)) return false;
    VSet x[3] = {0, 0, 0};
    for (std::size_t i = 0; i < set.size(); ++i) x[i] = side(set[i]);
    return cover(x[0], x[1], x[2]);
}

bool TkFamily::forbids(const Orientation&, const std::vector<Id>& list, Id x) const {
    const auto& s = *s_;
    VSet ax = side(x);
    if (cover(ax)) return true;
    std::vector<VSet> cand;
    if (!stars_) {
        // Only maximal small sides matter; x below a chosen element adds nothing new.
        for (Id y : list)
            if (s.leq(x, y)) return false;
        for (Id y : list) {
            VSet ay = side(y);
            bool dominated = false;
            for (VSet& c : cand) {
                if (subset(ay, c)) {
                    dominated = true;
                    break;
                }
                if (subset(c, ay)) c = 0;
            }
            if (!dominated) cand.push_back(ay);
            std::erase(cand, VSet{0});
        }
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (cover(ax, cand[i])) return true;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if ((ax | cand[i] | cand[j]) == g_->vertices() && cover(ax, cand[i], cand[j])) return true;
        }
        return false;
    }
    std::vector<Id> compat;
    for (Id y : list)
        if (s.member(y) != s.member(x) && !s.is_degenerate(y) && s.leq(x, s.inv(y))) compat.push_back(y);
    for (std::size_t i = 0; i < compat.size(); ++i) {
        VSet ai = side(compat[i]);
        if (cover(ax, ai)) return true;
        for (std::size_t j = i + 1; j < compat.size(); ++j) {
            VSet aj = side(compat[j]);
            if ((ax | ai | aj) != g_->vertices()) continue;
            if (s.member(compat[i]) == s.member(compat[j]) || !s.leq(compat[i], s.inv(compat[j]))) continue;
            if (cover(ax, ai, aj)) return true;
        }
    }
    return false;
}

void TkFamily::stars_containing(Id y, const std::function<bool(Id)>& ok,
                                const std::function<bool(const std::vector<Id>&)>& cb) const {
    const auto& s = *s_;
    if (s.is_degenerate(y)) return;
    const VSet all = g_->vertices();
    VSet ay = side(y), by = s.elem(y).b;
    if (cover(ay) && cb({y})) return;
    std::vector<Id> z, zp;
    for (Id t = 0; t < static_cast<Id>(s.size()); ++t) {
        if (s.member(t) == s.member(y) || s.is_degenerate(t) || !s.leq(y, s.inv(t)) || !ok(t)) continue;
        z.push_back(t);
        if (!s.is_small(t)) zp.push_back(t);
    }
    auto emit = [&](std::vector<Id> st) {
        std::sort(st.begin(), st.end());
        st.erase(std::unique(st.begin(), st.end()), st.end());
        return cb(st);
    };
    for (Id t : z)
        if (cover(ay, side(t)) && emit({y, t})) return;
    // Third element: either a proper separation, or the least small separation (Need, V) that fills the gap.
    for (std::size_t i = 0; i < z.size(); ++i) {
        Id t = z[i];
        VSet at = side(t), bt = s.elem(t).b;
        VSet missing = all & ~(ay | at);
        VSet need = missing;
        for_each_vertex(missing, [&](int v) { need |= g_->nbrs(v); });
        for_each_vertex(ay & ~at, [&](int v) {
            VSet cross = g_->nbrs(v) & at & ~ay;
            if (cross) need |= bit(v) | cross;
        });
        if (need && subset(need, by & bt)) {
            auto cap = s.find(Sep{need, all});
            if (cap && *cap != t && ok(*cap) && emit({y, t, *cap})) return;
        }
    }
    for (std::size_t i = 0; i < zp.size(); ++i)
        for (std::size_t j = i + 1; j < zp.size(); ++j) {
            Id t1 = zp[i], t2 = zp[j];
            VSet a1 = side(t1), a2 = side(t2);
            if ((ay | a1 | a2) != all) continue;
            if (s.member(t1) == s.member(t2) || !s.leq(t1, s.inv(t2))) continue;
            if (cover(ay, a1, a2) && emit({y, t1, t2})) return;
        }
}

namespace {

// Can the items (edges as vertex pairs, isolated vertices as singletons) be placed into
// j sets of at most cap vertices each? Returns the sets.
std::optional<std::vector<VSet>> tiny_cover(const std::vector<VSet>& items, int j, int cap) {
    VSet span = 0;
    for (VSet e : items) span |= e;
    if (!span) return std::vector<VSet>{};
    if (j == 0 || popcount(span) > j * cap) return std::nullopt;
    if (popcount(span) <= cap) return std::vector<VSet>{span};
    if (j == 1) return std::nullopt;
    // some set holds the lowest vertex; try every such set X
    int v0 = std::countr_zero(span);
    std::vector<int> others;
    for_each_vertex(span & ~bit(v0), [&](int v) { others.push_back(v); });
    std::optional<std::vector<VSet>> found;
    auto rec = [&](auto&& self, std::size_t from, VSet x) -> void {
        if (found) return;
        std::vector<VSet> left;
        for (VSet e : items)
            if (!subset(e, x)) left.push_back(e);
        if (auto sub = tiny_cover(left, j - 1, cap)) {
            sub->push_back(x);
            found = sub;
            return;
        }
        if (popcount(x) == cap) return;
        for (std::size_t i = from; i < others.size(); ++i) self(self, i + 1, x | bit(others[i]));
    };
    rec(rec, 0, bit(v0));
    return found;
}

}  // namespace

bool is_k_tangle(const GraphSystem& s, const Orientation& o, int implicit_k) {
    return !small_side_cover(s, o, implicit_k).has_value();
}

// Avoiding T_k already forces consistency: if (B,A) and (C,D) lie in o with (A,B) < (C,D),
// then G[B] and G[C] together give G. Every set X of fewer than k vertices is a small side
// (through (X,V)) unless V itself is one, so such sets are handled implicitly.
std::optional<std::vector<VSet>> small_side_cover(const GraphSystem& s, const Orientation& o, int implicit_k) {
    const Graph& g = s.universe().graph();
    const VSet all = g.vertices();
    const int k = implicit_k > 0 ? implicit_k : [&] {
        int mx = 0;
        for (std::size_t m = 0; m < s.member_count(); ++m) mx = std::max(mx, s.order(s.rep(static_cast<int>(m))));
        return mx + 1;
    }();
    // every set below k vertices is a side only if all one-sided members point that way
    bool tiny_ok = true;
    double one_sided = 0, expected = 0, binom = 1;
    for (int i = 0; i < k && i <= g.n(); ++i) {
        if (i < g.n()) expected += binom;
        binom = binom * (g.n() - i) / (i + 1);
    }
    for (std::size_t m = 0; m < s.member_count() && tiny_ok && implicit_k <= 0; ++m) {
        Id r = s.rep(static_cast<int>(m));
        const Sep& e = s.elem(r);
        if (e.a == all || e.b == all) {
            ++one_sided;
            Id small = e.b == all ? r : s.inv(r);
            if (!o.test(small)) tiny_ok = false;
        }
    }
    if (implicit_k <= 0 && one_sided < expected) tiny_ok = false;
    std::vector<VSet> sides;
    for (Id x : ids_of<GraphUniverse>(o)) {
        VSet a = s.elem(x).a;
        if (a == all) return std::vector<VSet>{all};
        if (!tiny_ok || popcount(a) >= k) sides.push_back(a);
    }
    std::sort(sides.begin(), sides.end(), [](VSet a, VSet b) { return popcount(a) > popcount(b); });
    sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
    std::vector<VSet> tops;
    for (VSet a : sides) {
        bool dominated = false;
        for (VSet t : tops)
            if (subset(a, t)) dominated = true;
        if (!dominated) tops.push_back(a);
    }
    const int cap = tiny_ok ? k - 1 : 0;

    std::vector<VSet> items;
    for (auto [u, v] : g.edges()) items.push_back(bit(u) | bit(v));
    for_each_vertex(all, [&](int v) {
        if (!g.nbrs(v)) items.push_back(bit(v));
    });
    std::vector<VSet> chosen, pool;
    std::optional<std::vector<VSet>> found;
    auto rec = [&](auto&& self) -> void {
        if (found) return;
        int j = 3 - static_cast<int>(chosen.size());
        VSet span = 0;
        for (VSet e : pool) span |= e;
        if (popcount(span) > j * cap) return;
        std::optional<VSet> pick;
        std::vector<std::size_t> holders;
        for (VSet e : items) {
            bool done = false;
            for (VSet a : chosen) done = done || subset(e, a);
            for (VSet p : pool) done = done || p == e;
            if (done) continue;
            std::vector<std::size_t> h;
            if (j > 0)
                for (std::size_t i = 0; i < tops.size(); ++i)
                    if (subset(e, tops[i])) h.push_back(i);
            if (!pick || h.size() < holders.size()) {
                pick = e;
                holders = std::move(h);
                if (holders.empty()) break;
            }
        }
        if (!pick) {
            if (auto t = tiny_cover(pool, j, cap)) {
                found = chosen;
                found->insert(found->end(), t->begin(), t->end());
            }
            return;
        }
        for (std::size_t i : holders) {
            chosen.push_back(tops[i]);
            self(self);
            chosen.pop_back();
            if (found) return;
        }
        if (cap > 0) {
            pool.push_back(*pick);
            self(self);
            pool.pop_back();
        }
    };
    rec(rec);
    return found;
}

}  // namespace tot
