#include "tot/refine.hpp"

#include <functional>

namespace tot {

namespace {

DynBits owners_of(Id x, const TangleSet& ts) {
    DynBits o(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i].test(x)) o.set(i);
    return o;
}

DynBits owners_of(const std::vector<Id>& star, const TangleSet& ts) {
    DynBits o(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool all = true;
        for (Id x : star)
            if (!ts[i].test(x)) all = false;
        if (all) o.set(i);
    }
    return o;
}

bool exclusive_for(const std::vector<Id>& star, int ti, const TangleSet& ts) {
    auto o = owners_of(star, ts);
    return o.count() == 1 && o.test(ti);
}

// Sorted star without small members and duplicates.
std::vector<Id> tidy(const GraphSystem& s, std::vector<Id> star) {
    std::erase_if(star, [&](Id x) { return s.is_small(x); });
    std::sort(star.begin(), star.end());
    star.erase(std::unique(star.begin(), star.end()), star.end());
    return star;
}

void check_candidate(const GraphSystem& s, const std::vector<Id>& star, int ti, const TangleSet& ts, int bound,
                     const char* step) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::VerificationFailed, std::string(step) + ": " + why);
    };
    if (!is_star(s, star)) fail("not a star");
    for (Id x : star)
        if (!ts[ti].test(x)) fail("member outside the tangle");
    if (!exclusive_for(star, ti, ts)) fail("not exclusive");
    if (popcount(interior(s, star)) > bound) fail("interior grew");
}

}  // namespace

MinStarResult min_exclusive_interior(const GraphSystem& s, int ti, const TangleSet& ts) {
    const auto& tau = ts[ti];
    std::vector<Id> e;
    for (Id x : ids_of<GraphUniverse>(tau))
        if (!s.is_small(x) && !s.is_degenerate(x)) e.push_back(x);
    std::stable_sort(e.begin(), e.end(), [&](Id a, Id b) { return popcount(s.elem(a).b) < popcount(s.elem(b).b); });
    const std::size_t n = e.size();
    std::vector<DynBits> compat(n, DynBits(n));
    std::vector<DynBits> own;
    std::vector<VSet> side;
    for (std::size_t i = 0; i < n; ++i) {
        own.push_back(owners_of(e[i], ts));
        side.push_back(s.elem(e[i]).b);
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && s.member(e[i]) != s.member(e[j]) && s.leq(e[i], s.inv(e[j]))) compat[i].set(j);
    }
    MinStarResult best;
    best.interior_size = s.universe().graph().n() + 1;
    std::vector<int> cur;
    DynBits everyone(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) everyone.set(i);

    auto rec = [&](auto&& self, VSet in, const DynBits& ow, std::vector<int> cands) -> void {
        ++best.search_nodes;
        if (ow.count() == 1 && popcount(in) < best.interior_size) {
            best.interior_size = popcount(in);
            best.star.clear();
            for (int i : cur) best.star.push_back(e[i]);
        }
        std::erase_if(cands, [&](int c) {
            DynBits o = ow;
            o &= own[c];
            return subset(in, side[c]) && o == ow;
        });
        if (cands.empty()) return;
        VSet lb = in;
        DynBits lo = ow;
        for (int c : cands) {
            lb &= side[c];
            lo &= own[c];
        }
        if (popcount(lb) >= best.interior_size || lo.count() > 1) return;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            int x = cands[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (compat[x].test(cands[j])) next.push_back(cands[j]);
            DynBits o = ow;
            o &= own[x];
            cur.push_back(x);
            self(self, in & side[x], o, std::move(next));
            cur.pop_back();
        }
    };
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    rec(rec, s.universe().all(), everyone, all);
    if (best.interior_size > s.universe().graph().n())
        throw Error(ErrorKind::NotExclusiveAnywhere, "no exclusive star in tangle " + std::to_string(ti));
    std::sort(best.star.begin(), best.star.end());
    return best;
}

MinStarResult min_interior_exclusive_star(const GraphSystem& s, int ti, const std::vector<Id>& sigma,
                                          const TangleSet& ts) {
    const auto& tau = ts[ti];
    for (Id x : sigma)
        if (!tau.test(x)) throw Error(ErrorKind::HypothesisFailure, "sigma is not inside the tangle");
    MinStarResult res = min_exclusive_interior(s, ti, ts);
    const int bound = res.interior_size;
    std::vector<Id> rho = res.star;

    // Corner moves until rho is nested with sigma.
    for (std::size_t guard = 0;; ++guard) {
        if (guard > sigma.size() + 1) throw Error(ErrorKind::VerificationFailed, "corner moves did not converge");
        std::optional<Id> t;
        for (Id c : sigma) {
            for (Id r : rho)
                if (!s.nested(r, c)) t = c;
            if (t) break;
        }
        if (!t) break;
        auto pr = efficient_pair(s, *t, ts);
        if (!pr) throw Error(ErrorKind::HypothesisFailure, s.str(*t) + " distinguishes no pair efficiently");
        const auto& q = ts[pr->first];  // contains t*
        std::optional<Id> x;
        for (Id r : rho)
            if (q.test(s.inv(r))) x = r;
        if (!x) throw Error(ErrorKind::VerificationFailed, "exclusive star contained in another tangle");
        std::vector<Id> next;
        auto j = s.join(*x, *t);
        if (!j) throw Error(ErrorKind::VerificationFailed, "corner outside S");
        next.push_back(*j);
        for (Id r : rho) {
            if (r == *x) continue;
            auto m = s.meet(r, s.inv(*t));
            if (!m) throw Error(ErrorKind::VerificationFailed, "corner outside S");
            next.push_back(*m);
        }
        rho = tidy(s, next);
        check_candidate(s, rho, ti, ts, bound, "corner move");
    }
    // Every member of sigma below some member of rho.
    for (Id c : sigma) {
        bool covered = false;
        for (Id r : rho)
            if (s.leq(c, r)) covered = true;
        if (covered || s.is_small(c)) continue;
        std::vector<Id> next{c};
        for (Id r : rho)
            if (!s.leq(r, c)) next.push_back(r);
        rho = tidy(s, next);
        check_candidate(s, rho, ti, ts, bound, "absorbing sigma");
    }
    // Replace members that are not closely related.
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 4 * (rho.size() + sigma.size()) + 8)
            throw Error(ErrorKind::VerificationFailed, "closeness repair did not converge");
        std::optional<Id> bad;
        for (Id r : rho)
            if (!closely_related(s, r, tau)) {
                bad = r;
                break;
            }
        if (!bad) break;
        std::optional<Id> best;
        int global = 1 << 20;
        for (Id y : ids_of<GraphUniverse>(tau)) {
            if (!s.leq(*bad, y)) continue;
            global = std::min(global, s.order(y));
            bool nested = true;
            for (Id c : sigma)
                if (!s.nested(y, c)) nested = false;
            if (nested && (!best || s.order(y) < s.order(*best))) best = y;
        }
        if (!best || s.order(*best) != global)
            throw Error(ErrorKind::VerificationFailed, "no minimal-order extension nested with sigma");
        std::vector<Id> next{*best};
        for (Id r : rho) {
            if (r == *bad) continue;
            auto m = s.meet(r, s.inv(*best));
            if (!m) throw Error(ErrorKind::VerificationFailed, "closeness repair left S");
            next.push_back(*m);
        }
        rho = tidy(s, next);
        check_candidate(s, rho, ti, ts, bound, "closeness repair");
    }
    if (!star_leq(s, tidy(s, sigma), rho)) throw Error(ErrorKind::VerificationFailed, "sigma not below result");
    for (Id c : sigma)
        for (Id r : rho)
            if (!s.nested(c, r)) throw Error(ErrorKind::VerificationFailed, "result crosses sigma");
    res.star = rho;
    res.interior_size = popcount(interior(s, rho));
    return res;
}

bool in_family_up_to_small(const GraphSystem& s, const Family<GraphUniverse>& f, const std::vector<Id>& sigma) {
    if (f.contains(sigma)) return true;
    if (sigma.size() >= static_cast<std::size_t>(f.max_member_size())) return false;
    std::vector<Id> caps;
    for (Id z = 0; z < static_cast<Id>(s.size()); ++z) {
        if (!s.is_small(z) || s.is_degenerate(z)) continue;
        bool ok = true;
        for (Id x : sigma)
            if (s.member(x) == s.member(z) || !s.leq(z, s.inv(x))) ok = false;
        if (ok) caps.push_back(z);
    }
    for (std::size_t i = 0; i < caps.size(); ++i) {
        auto one = sigma;
        one.push_back(caps[i]);
        if (f.contains(one)) return true;
        if (one.size() >= static_cast<std::size_t>(f.max_member_size())) continue;
        for (std::size_t j = i + 1; j < caps.size(); ++j) {
            if (s.member(caps[i]) == s.member(caps[j]) || !s.leq(caps[i], s.inv(caps[j]))) continue;
            auto two = one;
            two.push_back(caps[j]);
            if (f.contains(two)) return true;
        }
    }
    return false;
}

namespace {

std::vector<int> homes_of(const std::vector<Id>& star, const TangleSet& ts) {
    std::vector<int> out;
    auto o = owners_of(star, ts);
    for (auto i : o.ones()) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

Theorem12Result theorem_1_2(const GraphSystem& s, const Family<GraphUniverse>& f, const TangleSet& ts,
                            const NestedSet& tilde, RefineMode mode) {
    Theorem12Result out;
    NestedSet n = canonical(tilde);
    auto premise = verify_premise(s, n, ts);
    if (!premise.nested || !premise.distinguishes_all || !premise.each_member_efficient)
        throw Error(ErrorKind::HypothesisFailure, "premise: " + premise.witness);

    if (mode != RefineMode::Essential) {
        NestedSet grown = n;
        for (const auto& node : nodes(s, n)) {
            if (!homes_of(node, ts).empty()) continue;
            auto r = refine_inessential(s, node, f, ts);
            grown.insert(grown.end(), r.added.begin(), r.added.end());
        }
        n = canonical(grown);
        check_nested(s, n);
    }
    if (mode != RefineMode::Inessential) {
        NestedSet grown = n;
        for (const auto& node : nodes(s, n)) {
            auto homes = homes_of(node, ts);
            if (homes.empty()) continue;
            if (homes.size() > 1) throw Error(ErrorKind::HypothesisFailure, "node home to several tangles");
            int ti = homes[0];
            auto best = min_interior_exclusive_star(s, ti, node, ts);
            NestedSet local;
            for (Id x : node) local.push_back(s.member(x));
            for (Id x : best.star) local.push_back(s.member(x));
            local = canonical(local);
            for (Id x : best.star) grown.push_back(s.member(x));
            if (local.empty()) continue;
            auto target = best.star;
            for (const auto& rho : nodes(s, local)) {
                if (rho == target) continue;
                // keep only nodes on the inner side of every member of node
                std::vector<Id> head = rho.empty() ? std::vector<Id>{} : head_orientation(s, local, rho[0]);
                bool inside = true;
                for (Id x : node)
                    if (std::find(head.begin(), head.end(), x) == head.end()) inside = false;
                if (!inside) continue;
                auto r = refine_inessential(s, rho, f, ts);
                grown.insert(grown.end(), r.added.begin(), r.added.end());
            }
        }
        n = canonical(grown);
        check_nested(s, n);
    }
    out.n = n;
    out.td = to_tree_decomposition(s, n);
    out.nodes = nodes(s, n);
    // to_tree_decomposition uses the same node order
    for (const auto& node : out.nodes) {
        auto homes = homes_of(node, ts);
        out.home.push_back(homes.empty() ? -1 : homes[0]);
    }
    return out;
}

}  // namespace tot
