#include "tot/blocks.hpp"

#include <queue>

namespace tot {

namespace {

bool separates(const Graph& g, int u, int v, VSet x) {
    VSet rest = g.vertices() & ~x;
    for (VSet c : g.components(rest))
        if (has(c, u)) return !has(c, v);
    return true;
}

}  // namespace

int min_vertex_cut_exhaustive(const Graph& g, int u, int v, int limit) {
    if (g.adjacent(u, v)) throw Error(ErrorKind::InvalidInput, "adjacent vertices have no vertex cut");
    std::vector<int> pool;
    for (int w = 0; w < g.n(); ++w)
        if (w != u && w != v) pool.push_back(w);
    for (int size = 0; size < limit; ++size) {
        bool found = false;
        std::vector<int> pick;
        auto rec = [&](auto&& self, std::size_t start, VSet x) -> void {
            if (found) return;
            if (static_cast<int>(pick.size()) == size) {
                found = separates(g, u, v, x);
                return;
            }
            for (std::size_t i = start; i < pool.size(); ++i) {
                pick.push_back(pool[i]);
                self(self, i + 1, x | bit(pool[i]));
                pick.pop_back();
            }
        };
        rec(rec, 0, 0);
        if (found) return size;
    }
    return limit;
}

int min_vertex_cut_flow(const Graph& g, int u, int v) {
    if (g.adjacent(u, v)) throw Error(ErrorKind::InvalidInput, "adjacent vertices have no vertex cut");
    // vertex w becomes w_in = 2w, w_out = 2w+1 with capacity 1 (infinite for u, v)
    const int n = 2 * g.n();
    const int inf = g.n() + 1;
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (int w = 0; w < g.n(); ++w) cap[2 * w][2 * w + 1] = (w == u || w == v) ? inf : 1;
    for (auto [a, b] : g.edges()) {
        cap[2 * a + 1][2 * b] = inf;
        cap[2 * b + 1][2 * a] = inf;
    }
    const int src = 2 * u + 1, dst = 2 * v;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(n, -1);
        prev[src] = src;
        std::queue<int> q;
        q.push(src);
        while (!q.empty() && prev[dst] < 0) {
            int x = q.front();
            q.pop();
            for (int y = 0; y < n; ++y)
                if (prev[y] < 0 && cap[x][y] > 0) {
                    prev[y] = x;
                    q.push(y);
                }
        }
        if (prev[dst] < 0) break;
        int push = inf;
        for (int y = dst; y != src; y = prev[y]) push = std::min(push, cap[prev[y]][y]);
        for (int y = dst; y != src; y = prev[y]) {
            cap[prev[y]][y] -= push;
            cap[y][prev[y]] += push;
        }
        flow += push;
    }
    return flow;
}

bool inseparable(const Graph& g, int u, int v, int k) {
    if (u == v || g.adjacent(u, v)) return true;
    if (g.n() <= 14) return min_vertex_cut_exhaustive(g, u, v, k) >= k;
    return min_vertex_cut_flow(g, u, v) >= k;
}

std::vector<Block> k_blocks(const GraphSystem& s, int k) {
    const Graph& g = s.universe().graph();
    const int n = g.n();
    std::vector<VSet> h(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (inseparable(g, a, b, k)) {
                h[a] |= bit(b);
                h[b] |= bit(a);
            }
    std::vector<VSet> cliques;
    auto bk = [&](auto&& self, VSet r, VSet p, VSet x) -> void {
        if (!p && !x) {
            cliques.push_back(r);
            return;
        }
        int pivot = std::countr_zero(p | x);
        VSet cand = p & ~h[pivot];
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, r | bit(v), p & h[v], x & h[v]);
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    bk(bk, 0, g.vertices(), 0);
    std::sort(cliques.begin(), cliques.end(), [](VSet a, VSet b) { return lex_less(a, b); });
    std::vector<Block> out;
    for (VSet c : cliques) {
        if (popcount(c) < k) continue;
        Block b;
        b.vertices = c;
        b.k = k;
        if (auto st = separable_star(s, c)) {
            b.separable = true;
            b.star = *st;
        }
        out.push_back(b);
    }
    return out;
}

std::optional<std::vector<Id>> separable_star(const GraphSystem& s, VSet b) {
    const Graph& g = s.universe().graph();
    std::vector<Id> star;
    for (VSet c : g.components(g.vertices() & ~b)) {
        Sep x{c | g.boundary(c), g.vertices() & ~c};
        auto id = s.find(x);
        if (!id) return std::nullopt;
        star.push_back(*id);
    }
    std::sort(star.begin(), star.end());
    if (interior(s, star) != b) return std::nullopt;
    return star;
}

Orientation block_orientation(const GraphSystem& s, VSet b) {
    std::vector<Id> ids;
    for (std::size_t m = 0; m < s.member_count(); ++m) {
        Id r = s.rep(static_cast<int>(m));
        const Sep& e = s.elem(r);
        bool both = subset(b, e.a) && subset(b, e.b);
        if (both ? subset(e.a, e.b) : subset(b, e.b))
            ids.push_back(r);
        else
            ids.push_back(s.inv(r));
    }
    return orientation_from(s, ids);
}

RegularProfileStars::RegularProfileStars(const GraphSystem& s, TangleSet profiles)
    : pf_(s), tk_(s, true), profiles_(std::move(profiles)) {}

bool RegularProfileStars::in_some_profile(const std::vector<Id>& set) const {
    for (std::size_t t = 0; t < profiles_.size(); ++t) {
        bool all = true;
        for (Id x : set) all = all && profiles_[t].test(x);
        if (all) return true;
    }
    return false;
}

bool RegularProfileStars::contains(std::vector<Id> set) const {
    if (pf_.contains(set)) return true;
    return tk_.contains(set) && !in_some_profile(set);
}

void RegularProfileStars::stars_containing(Id y, const std::function<bool(Id)>& ok,
                                           const std::function<bool(const std::vector<Id>&)>& cb) const {
    bool stop = false;
    pf_.stars_containing(y, ok, [&](const std::vector<Id>& st) { return stop = cb(st); });
    if (stop) return;
    tk_.stars_containing(y, ok, [&](const std::vector<Id>& st) { return !in_some_profile(st) && cb(st); });
}

Correspondence tangle_correspondence(const GraphSystem& s, VSet u, const Orientation& tau, int k) {
    const Graph& g = s.universe().graph();
    Correspondence c;
    std::vector<std::pair<VSet, Id>> traces;
    for (Id x : ids_of<GraphUniverse>(tau)) {
        const Sep& e = s.elem(x);
        int a = popcount(e.a & u), b = popcount(e.b & u);
        if (c.induces && a >= b) {
            c.induces = false;
            c.induces_witness = x;
        }
        if (c.small_side_bound && a >= k) {
            c.small_side_bound = false;
            c.small_side_witness = x;
        }
        traces.emplace_back(e.a & u, x);
    }
    // only maximal traces can matter for covering G[U]
    std::sort(traces.begin(), traces.end(), [](const auto& p, const auto& q) {
        if (popcount(p.first) != popcount(q.first)) return popcount(p.first) > popcount(q.first);
        return p.first != q.first ? lex_less(p.first, q.first) : p.second < q.second;
    });
    std::vector<std::pair<VSet, Id>> tops;
    for (const auto& t : traces) {
        bool dominated = false;
        for (const auto& o : tops)
            if (subset(t.first, o.first)) dominated = true;
        if (!dominated) tops.push_back(t);
    }
    const std::size_t m = tops.size();
    for (std::size_t i = 0; i < m && c.witnesses; ++i)
        for (std::size_t j = i; j < m && c.witnesses; ++j)
            for (std::size_t l = j; l < m && c.witnesses; ++l)
                if (g.covers(u, {tops[i].first, tops[j].first, tops[l].first})) {
                    c.witnesses = false;
                    c.witnesses_witness = {tops[i].second, tops[j].second, tops[l].second};
                }
    if (m == 0 && g.covers(u, {})) c.witnesses = false;
    return c;
}

AuditReport verify_theorem_4_8(const GraphSystem& s, int k, const TreeDecomposition& td, const TangleSet& profiles,
                               const TangleSet& tangles) {
    AuditReport rep;
    auto v = validate_td(s, td, profiles);
    rep.td_valid = v.valid;
    if (!v.valid) {
        rep.failures.push_back("invalid decomposition: " + v.witness);
        return rep;
    }
    if (v.adhesion >= k) {
        rep.td_valid = false;
        rep.failures.push_back("adhesion " + std::to_string(v.adhesion) + " is not below k");
    }
    rep.efficient = v.distinguishes_all_efficiently;
    if (!rep.efficient) rep.failures.push_back("some pair of regular profiles is not distinguished efficiently");

    for (std::size_t t = 0; t < td.bags.size(); ++t) {
        VSet bag = td.bags[t];
        if (popcount(bag) <= 3 * k - 3) {
            ++rep.small_parts;
            continue;
        }
        ++rep.large_part_count;
        const auto& home = v.parts[t].home;
        std::optional<std::size_t> tangle;
        for (int h : home)
            for (std::size_t j = 0; j < tangles.size(); ++j)
                if (tangles[j] == profiles[h]) tangle = j;
        if (!tangle) {
            rep.large_parts = false;
            rep.failures.push_back("large part " + set_str(bag) + " is home to no k-tangle");
            continue;
        }
        auto c = tangle_correspondence(s, bag, tangles[*tangle], k);
        if (!c.induces || !c.witnesses || !c.small_side_bound) {
            rep.large_parts = false;
            rep.failures.push_back("large part " + set_str(bag) + " fails" + (c.induces ? "" : " induces") +
                                   (c.witnesses ? "" : " witnesses") + (c.small_side_bound ? "" : " small-side bound"));
        }
    }
    for (const auto& b : k_blocks(s, k)) {
        if (!b.separable) {
            ++rep.nonseparable_blocks;
            continue;
        }
        ++rep.separable_blocks;
        if (std::find(td.bags.begin(), td.bags.end(), b.vertices) == td.bags.end()) {
            rep.blocks = false;
            rep.failures.push_back("separable block " + set_str(b.vertices) + " is not a part");
        }
    }
    return rep;
}

std::optional<HubCheck> hub_check(const GraphSystem& s, VSet main, VSet hub, int implicit_k) {
    auto tau = block_orientation(s, main);
    auto hub_tau = block_orientation(s, hub);
    if (tau == hub_tau || !is_k_tangle(s, tau, implicit_k) || !is_k_tangle(s, hub_tau, implicit_k)) return std::nullopt;
    TangleSet one, two;
    one.tangles = {tau};
    two.tangles = {tau, hub_tau};
    HubCheck out;
    out.any = min_exclusive_interior(s, 0, one);
    out.exclusive = min_exclusive_interior(s, 0, two);
    out.star_in_hub = true;
    for (Id x : out.any.star) out.star_in_hub = out.star_in_hub && hub_tau.test(x);
    return out;
}

}  // namespace tot
