#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tot/refine.hpp"
#include "tot/universe.hpp"

namespace tot {

inline bool universe_distributive(const GraphUniverse&) { return true; }
inline bool universe_distributive(const TableUniverse& u) { return check_universe(u).distributive; }

// {r, s} with r <= s* and r v s co-small.
template <class U>
std::vector<std::vector<Id>> t_prime(const SepSystem<U>& s) {
    const auto& u = s.universe();
    std::vector<std::vector<Id>> out;
    const Id n = static_cast<Id>(s.size());
    for (Id a = 0; a < n; ++a)
        for (Id b = a + 1; b < n; ++b) {
            if (s.member(a) == s.member(b) || s.is_degenerate(a) || s.is_degenerate(b)) continue;
            if (!s.leq(a, s.inv(b))) continue;
            if (u.is_cosmall(u.join(s.elem(a), s.elem(b)))) out.push_back({a, b});
        }
    return out;
}

template <class U>
std::vector<Id> dedup(std::vector<Id> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// Elements of p nested with every member of sigma.
template <class U>
std::vector<Id> p_sigma(const SepSystem<U>& s, const Orientation& p, const std::vector<Id>& sigma) {
    std::vector<Id> out;
    for (Id x : ids_of<U>(p)) {
        if (s.is_degenerate(x)) continue;
        bool ok = true;
        for (Id y : sigma)
            if (!s.nested(x, y)) ok = false;
        if (ok) out.push_back(x);
    }
    return out;
}

struct NarrowStatus {
    bool narrow = true;
    std::optional<Id> narrow_witness;   // x in P with x* v (join of R) not co-small
    bool near_maximal = false;
    std::optional<Id> near_witness;     // x in P above two members
};

template <class U>
NarrowStatus star_profile_status(const SepSystem<U>& s, const std::vector<Id>& r, const Orientation& p) {
    const auto& u = s.universe();
    NarrowStatus st;
    for (Id x : r)
        if (!p.test(x)) throw Error(ErrorKind::NotInProfile, s.str(x) + " is not in the profile");
    for (Id x : ids_of<U>(p)) {
        auto j = s.elem(s.inv(x));
        for (Id y : r) j = u.join(j, s.elem(y));
        if (!u.is_cosmall(j)) {
            st.narrow = false;
            st.narrow_witness = x;
            break;
        }
    }
    if (!is_star(s, r)) return st;
    st.near_maximal = st.narrow;
    for (Id x : ids_of<U>(p)) {
        int below = 0;
        for (Id y : r) below += s.leq(y, x);
        if (below > 1) {
            st.near_maximal = false;
            st.near_witness = x;
            break;
        }
    }
    return st;
}

struct UnscrambledPair {
    Id r = -1;
    Id s = -1;
    bool changed = false;
    bool both_identities = false;  // r' = r ∧ s'* and s' = s ∧ r'*
};

// r' minimal in P_sigma, closely related to P, with r ∧ s* <= r' <= r (first such id); s' = s ∧ r'*.
template <class U>
UnscrambledPair unscramble_pair(const SepSystem<U>& s, Id r, Id t, const std::vector<Id>& sigma,
                                const Orientation& p) {
    UnscrambledPair out{r, t, false, true};
    if (s.nested(r, t)) return out;
    if (!closely_related(s, r, p) || !closely_related(s, t, p))
        throw Error(ErrorKind::HypothesisFailure, "unscrambling needs closely related separations");
    for (Id y : sigma)
        if (!p.test(y) || !s.nested(y, r) || !s.nested(y, t))
            throw Error(ErrorKind::HypothesisFailure, "sigma must lie in P and be nested with both");
    const auto& u = s.universe();
    auto low = u.meet(s.elem(r), s.elem(s.inv(t)));
    std::vector<Id> cand;
    for (Id x : p_sigma(s, p, sigma))
        if (u.leq(low, s.elem(x)) && s.leq(x, r) && closely_related(s, x, p)) cand.push_back(x);
    std::optional<Id> rp;
    for (Id x : cand) {
        bool minimal = true;
        for (Id y : cand)
            if (s.less(y, x)) minimal = false;
        if (minimal) {
            rp = x;
            break;
        }
    }
    if (!rp) throw Error(ErrorKind::HypothesisFailure, "no admissible r'");
    auto sp = s.meet(t, s.inv(*rp));
    if (!sp) throw Error(ErrorKind::VerificationFailed, "s ∧ r'* is not in S");
    if (!closely_related(s, *sp, p)) throw Error(ErrorKind::VerificationFailed, "s ∧ r'* is not closely related");
    for (Id y : sigma)
        if (!s.nested(*sp, y)) throw Error(ErrorKind::VerificationFailed, "s ∧ r'* crosses sigma");
    out.r = *rp;
    out.s = *sp;
    out.changed = true;
    out.both_identities = u.meet(s.elem(r), s.elem(s.inv(*sp))) == s.elem(*rp);
    return out;
}

struct UnscrambledSet {
    std::vector<Id> set;
    int steps = 0;
    bool identities_held = true;
};

template <class U>
UnscrambledSet unscramble_set(const SepSystem<U>& s, std::vector<Id> r, const std::vector<Id>& sigma,
                              const Orientation& p) {
    r = dedup<U>(std::move(r));
    const int n = static_cast<int>(r.size());
    const int budget = n * (n - 1) / 2;
    UnscrambledSet out;
    for (;;) {
        std::optional<std::pair<int, int>> pair;
        for (int i = 0; i < n && !pair; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!s.nested(r[i], r[j])) {
                    pair = std::make_pair(i, j);
                    break;
                }
        if (!pair) break;
        if (++out.steps > budget) throw Error(ErrorKind::StepBudgetExceeded, "unscrambling exceeded n(n-1)/2 steps");
        auto res = unscramble_pair(s, r[pair->first], r[pair->second], sigma, p);
        out.identities_held = out.identities_held && res.both_identities;
        r[pair->first] = res.r;
        r[pair->second] = res.s;
    }
    out.set = dedup<U>(r);
    return out;
}

// Members of xs with nothing strictly above them in xs.
template <class U>
std::vector<Id> maximal_of(const SepSystem<U>& s, const std::vector<Id>& xs) {
    return maximal_elements(s, dedup<U>(xs));
}

template <class U>
void check_moreover(const SepSystem<U>& s, const std::vector<Id>& before, const std::vector<Id>& after,
                    const std::vector<Id>& sigma) {
    for (Id y : sigma) {
        bool b = false, a = false;
        for (Id x : before) b = b || s.leq(y, x);
        for (Id x : after) a = a || s.leq(y, x);
        if (b && !a) throw Error(ErrorKind::VerificationFailed, "unscrambling lost the cover of " + s.str(y));
    }
}

struct NearMaxResult {
    std::vector<Id> star;
    std::vector<Id> initial;      // maximal elements of P_sigma
    bool initial_narrow = false;
    int merges = 0;
    int unscramble_steps = 0;
    bool identities_held = true;
    bool narrow_kept = true;      // every unscrambling of a narrow set stayed narrow
};

// A star sigma' >= sigma in P that is closely related to P and near-maximal in it.
template <class U>
NearMaxResult near_max_star(const SepSystem<U>& s, const std::vector<Id>& sigma, const Orientation& p) {
    NearMaxResult res;
    auto ps = p_sigma(s, p, sigma);
    res.initial = maximal_of(s, ps);
    res.initial_narrow = star_profile_status(s, res.initial, p).narrow;

    auto settle = [&](const std::vector<Id>& r) {
        bool was_narrow = star_profile_status(s, r, p).narrow;
        auto un = unscramble_set(s, r, sigma, p);
        check_moreover(s, r, un.set, sigma);
        res.unscramble_steps += un.steps;
        res.identities_held = res.identities_held && un.identities_held;
        auto star = maximal_of(s, un.set);
        if (was_narrow && !star_profile_status(s, un.set, p).narrow) res.narrow_kept = false;
        if (!is_star(s, star)) throw Error(ErrorKind::VerificationFailed, "unscrambled set is not a star");
        if (!star_leq(s, sigma, star)) throw Error(ErrorKind::VerificationFailed, "sigma not below the unscrambled star");
        return star;
    };
    auto cur = settle(res.initial);
    for (std::size_t guard = 0;; ++guard) {
        if (guard > ps.size() + 1) throw Error(ErrorKind::VerificationFailed, "near-maximal loop did not converge");
        auto above_two = [&](Id x) {
            int c = 0;
            for (Id y : cur) c += s.leq(y, x);
            return c > 1;
        };
        std::vector<Id> cand;
        for (Id x : ps)
            if (above_two(x)) cand.push_back(x);
        if (cand.empty()) break;
        auto tops = maximal_of(s, cand);
        Id x = tops.front();
        std::vector<Id> r{x};
        for (Id y : cur)
            if (!s.leq(y, x)) r.push_back(y);
        auto next = settle(r);
        if (next.size() >= cur.size()) throw Error(ErrorKind::VerificationFailed, "merge did not shrink the star");
        cur = next;
        ++res.merges;
    }
    res.star = cur;
    return res;
}

// All proper stars inside p (including the empty star); throws TooLarge past the cap.
template <class U>
std::vector<std::vector<Id>> proper_stars_in(const SepSystem<U>& s, const Orientation& p,
                                              std::size_t cap = std::size_t{1} << 20) {
    std::vector<Id> e;
    for (Id x : ids_of<U>(p))
        if (!s.is_degenerate(x)) e.push_back(x);
    const std::size_t n = e.size();
    std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) ok[i][j] = is_proper_star(s, std::vector<Id>{e[i], e[j]});
    std::vector<std::vector<Id>> out;
    std::vector<Id> cur;
    auto rec = [&](auto&& self, std::size_t start, const std::vector<std::size_t>& idx) -> void {
        out.push_back(cur);
        if (out.size() > cap) throw Error(ErrorKind::TooLarge, "too many stars");
        for (std::size_t a = start; a < n; ++a) {
            bool fits = true;
            for (std::size_t b : idx)
                if (!ok[a][b]) fits = false;
            if (!fits) continue;
            auto next = idx;
            next.push_back(a);
            cur.push_back(e[a]);
            self(self, a + 1, next);
            cur.pop_back();
        }
    };
    rec(rec, 0, {});
    for (auto& st : out) std::sort(st.begin(), st.end());
    return out;
}

// Proper star in a list strictly above sigma, if any.
template <class U>
std::optional<std::vector<Id>> strictly_above(const SepSystem<U>& s, const std::vector<Id>& sigma,
                                              const std::vector<std::vector<Id>>& stars) {
    auto a = dedup<U>(sigma);
    for (const auto& t : stars)
        if (t != a && star_leq(s, a, t)) return t;
    return std::nullopt;
}

// If some proper star in p lies strictly above sigma, then so does {y} ∪ {x in sigma : x not <= y}
// for any y of that star outside sigma; so trying every y decides maximality.
template <class U>
std::optional<std::vector<Id>> one_step_above(const SepSystem<U>& s, const std::vector<Id>& sigma,
                                              const Orientation& p) {
    auto a = dedup<U>(sigma);
    for (Id y : ids_of<U>(p)) {
        if (s.is_degenerate(y) || std::binary_search(a.begin(), a.end(), y)) continue;
        std::vector<Id> m{y};
        for (Id x : a)
            if (!s.leq(x, y)) m.push_back(x);
        if (is_proper_star(s, m)) return dedup<U>(m);
    }
    return std::nullopt;
}

template <class U>
bool is_maximal_in(const SepSystem<U>& s, const std::vector<Id>& sigma, const Orientation& p) {
    return is_proper_star(s, sigma) && !one_step_above(s, sigma, p).has_value();
}

// A maximal proper star in p above sigma, by climbing.
template <class U>
std::vector<Id> maximal_star_above(const SepSystem<U>& s, const std::vector<Id>& sigma, const Orientation& p) {
    if (!is_proper_star(s, sigma)) throw Error(ErrorKind::NotAStar, "maximal_star_above needs a proper star");
    auto cur = dedup<U>(sigma);
    for (std::size_t guard = 0; guard < (std::size_t{1} << 20); ++guard) {
        auto next = one_step_above(s, cur, p);
        if (!next) return cur;
        cur = *next;
    }
    throw Error(ErrorKind::VerificationFailed, "climbing did not stop");
}

// Splitting stars of a nested set that may contain small separations: maximal elements of
// each consistent head orientation.
template <class U>
std::vector<std::vector<Id>> general_nodes(const SepSystem<U>& s, NestedSet n) {
    n = canonical(std::move(n));
    check_nested(s, n);
    if (n.empty()) return {{}};
    std::vector<std::vector<Id>> out;
    for (Id x : oriented_members(s, n)) {
        auto o = head_orientation(s, n, x);
        bool consistent = true;
        for (Id a : o)
            for (Id b : o)
                if (a != b && s.member(a) != s.member(b) && s.less(s.inv(a), b)) consistent = false;
        if (consistent) out.push_back(maximal_elements(s, o));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Same by enumerating every consistent orientation.
template <class U>
std::vector<std::vector<Id>> general_nodes_by_orientations(const SepSystem<U>& s, NestedSet n) {
    n = canonical(std::move(n));
    check_nested(s, n);
    if (n.size() > 22) throw Error(ErrorKind::TooLarge, "too many members for orientation enumeration");
    std::vector<std::vector<Id>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n.size()); ++mask) {
        std::vector<Id> o;
        for (std::size_t i = 0; i < n.size(); ++i) {
            Id r = s.rep(n[i]);
            o.push_back(((mask >> i) & 1u) && !s.is_degenerate(r) ? s.inv(r) : r);
        }
        if (std::adjacent_find(o.begin(), o.end()) != o.end()) continue;
        bool ok = true;
        for (Id a : o)
            for (Id b : o)
                if (a != b && s.member(a) != s.member(b) && s.less(s.inv(a), b)) ok = false;
        if (ok) out.push_back(maximal_elements(s, o));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct EssentialRefinement {
    std::vector<Id> near_max;    // sigma'
    std::vector<Id> cap;         // sigma'', maximal in P
    NestedSet added;             // members beyond sigma
    NearMaxResult detail;
};

template <class U>
bool inside_region(const SepSystem<U>& s, const NestedSet& local, const std::vector<Id>& node,
                   const std::vector<Id>& sigma) {
    if (node.empty()) return sigma.empty();
    auto head = head_orientation(s, local, node[0]);
    for (Id x : sigma)
        if (std::find(head.begin(), head.end(), x) == head.end()) return false;
    return true;
}

// Refines the essential star sigma of tangle ti: near-maximal sigma', refinement of the
// inessential nodes in between, and a maximal cap sigma''.
template <class U>
EssentialRefinement refine_essential_abstract(const SepSystem<U>& s, const std::vector<Id>& sigma, int ti,
                                              const Family<U>& f, const TangleSet& ts) {
    const auto& p = ts[ti];
    auto st = star_status(s, sigma, ts);
    if (st.owners.size() != 1 || st.owners[0] != ti)
        throw Error(ErrorKind::HypothesisFailure, "sigma is not home to exactly this tangle");
    for (Id x : sigma)
        if (!is_good(s, s.member(x), ts)) throw Error(ErrorKind::HypothesisFailure, s.str(x) + " is not good");
    EssentialRefinement out;
    out.detail = near_max_star(s, sigma, p);
    out.near_max = out.detail.star;
    std::vector<int> base;
    for (Id x : sigma) base.push_back(s.member(x));
    NestedSet local = base;
    for (Id x : out.near_max) local.push_back(s.member(x));
    local = canonical(local);
    NestedSet added = local;
    for (const auto& rho : general_nodes(s, local)) {
        if (rho == dedup<U>(out.near_max) || !inside_region(s, local, rho, sigma)) continue;
        auto r = refine_inessential(s, rho, f, ts);
        for (Id y : r.labels) added.push_back(s.member(y));
    }
    out.cap = maximal_star_above(s, out.near_max, p);
    NestedSet capped = local;
    for (Id x : out.cap) capped.push_back(s.member(x));
    capped = canonical(capped);
    for (const auto& rho : general_nodes(s, capped)) {
        if (rho == out.cap || !inside_region(s, capped, rho, out.near_max)) continue;
        if (!f.contains(rho)) throw Error(ErrorKind::VerificationFailed, "node between sigma' and its cap is not in F");
    }
    for (Id x : out.cap) added.push_back(s.member(x));
    added = canonical(added);
    for (int m : base) std::erase(added, m);
    out.added = added;
    return out;
}

struct Theorem13Result {
    NestedSet n;
    std::vector<std::vector<Id>> nodes;
    std::vector<int> home;  // -1 for inessential nodes
    std::vector<std::string> warnings;
};

template <class U>
Theorem13Result theorem_1_3(const SepSystem<U>& s, const Family<U>& f, const TangleSet& ts, const NestedSet& tilde) {
    if (!universe_distributive(s.universe())) throw Error(ErrorKind::NonDistributive, "universe is not distributive");
    Theorem13Result out;
    NestedSet n = canonical(tilde);
    check_nested(s, n);
    check_regular(s, n);
    for (int m : n)
        if (!is_good(s, m, ts)) throw Error(ErrorKind::HypothesisFailure, s.str(s.rep(m)) + " is not good");
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            bool hit = false;
            for (int m : n) hit = hit || distinguishes(s, m, ts[i], ts[j]);
            if (!hit) throw Error(ErrorKind::HypothesisFailure, "nested set does not distinguish all tangles");
        }
    auto homes = [&](const std::vector<Id>& node) { return star_status(s, node, ts).owners; };

    NestedSet grown = n;
    for (const auto& node : nodes(s, n)) {
        if (!homes(node).empty()) continue;
        auto r = refine_inessential(s, node, f, ts);
        for (Id y : r.labels) grown.push_back(s.member(y));
    }
    grown = canonical(grown);
    NestedSet first = grown;
    for (const auto& node : general_nodes(s, first)) {
        auto h = homes(node);
        if (h.empty()) continue;
        if (h.size() > 1) throw Error(ErrorKind::HypothesisFailure, "node home to several tangles");
        auto e = refine_essential_abstract(s, node, h[0], f, ts);
        grown.insert(grown.end(), e.added.begin(), e.added.end());
    }
    out.n = canonical(grown);
    check_nested(s, out.n);
    out.nodes = general_nodes(s, out.n);
    for (const auto& node : out.nodes) {
        auto h = homes(node);
        out.home.push_back(h.empty() ? -1 : h[0]);
    }
    return out;
}

}  // namespace tot
