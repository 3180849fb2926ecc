#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tot/system.hpp"

namespace tot {

// An orientation is a set of oriented ids (one per non-degenerate member, all degenerate members).
using Orientation = DynBits;

template <class U>
std::vector<Id> ids_of(const Orientation& o) {
    std::vector<Id> out;
    for (auto i : o.ones()) out.push_back(static_cast<Id>(i));
    return out;
}

template <class U>
Orientation orientation_from(const SepSystem<U>& s, const std::vector<Id>& ids) {
    Orientation o(s.size());
    for (Id x : ids) o.set(x);
    for (std::size_t m = 0; m < s.member_count(); ++m) {
        Id r = s.rep(static_cast<int>(m));
        if (s.is_degenerate(r)) o.set(r);
        if (o.test(r) == o.test(s.inv(r)) && !s.is_degenerate(r))
            throw Error(ErrorKind::InvalidInput, "not an orientation: member " + s.str(r));
    }
    return o;
}

// Which orientation of member m the orientation o picks.
template <class U>
Id chosen(const SepSystem<U>& s, const Orientation& o, int m) {
    Id r = s.rep(m);
    return o.test(r) ? r : s.inv(r);
}

template <class U>
bool is_star(const SepSystem<U>& s, const std::vector<Id>& sigma) {
    for (Id a : sigma)
        if (s.is_degenerate(a)) return false;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = 0; j < sigma.size(); ++j)
            if (i != j && !s.leq(sigma[i], s.inv(sigma[j]))) return false;
    return true;
}

// Proper star: distinct members satisfy r <= s* and no other relation.
template <class U>
bool is_proper_star(const SepSystem<U>& s, const std::vector<Id>& sigma) {
    if (!is_star(s, sigma)) return false;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            if (i == j) continue;
            Id r = sigma[i], t = sigma[j];
            if (s.leq(r, t) || s.leq(s.inv(t), r)) return false;
        }
    return true;
}

// sigma <= tau: every member of sigma lies below some member of tau.
template <class U>
bool star_leq(const SepSystem<U>& s, const std::vector<Id>& sigma, const std::vector<Id>& tau) {
    for (Id a : sigma) {
        bool found = false;
        for (Id b : tau)
            if (s.leq(a, b)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

template <class U>
bool is_nested_set(const SepSystem<U>& s, const std::vector<Id>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!s.nested(xs[i], xs[j])) return false;
    return true;
}

// Pair (r*, s) in o with r < s for distinct members, if any.
template <class U>
std::optional<std::pair<Id, Id>> consistency_witness(const SepSystem<U>& s, const Orientation& o) {
    auto ids = ids_of<U>(o);
    for (Id y : ids)
        for (Id x : ids)
            if (s.member(x) != s.member(y) && s.less(s.inv(y), x)) return std::make_pair(y, x);
    return std::nullopt;
}

template <class U>
bool is_consistent(const SepSystem<U>& s, const Orientation& o) {
    return !consistency_witness(s, o).has_value();
}

// Pair r,s in o with r v s in S and (r v s)* in o, if any.
template <class U>
std::optional<std::pair<Id, Id>> profile_witness(const SepSystem<U>& s, const Orientation& o) {
    auto ids = ids_of<U>(o);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            auto jn = s.join(ids[i], ids[j]);
            if (jn && o.test(s.inv(*jn))) return std::make_pair(ids[i], ids[j]);
        }
    return std::nullopt;
}

template <class U>
bool is_profile(const SepSystem<U>& s, const Orientation& o) {
    return is_consistent(s, o) && !profile_witness(s, o).has_value();
}

template <class U>
std::optional<Id> cosmall_member(const SepSystem<U>& s, const Orientation& o) {
    for (Id x : ids_of<U>(o))
        if (s.is_cosmall(x)) return x;
    return std::nullopt;
}

template <class U>
bool is_regular(const SepSystem<U>& s, const Orientation& o) {
    return !cosmall_member(s, o).has_value();
}

// ---------------------------------------------------------------------------
// Star families

template <class U>
class Family {
public:
    virtual ~Family() = default;
    virtual std::string tag() const = 0;
    // Membership of a set of oriented ids.
    virtual bool contains(std::vector<Id> set) const = 0;
    // Does chosen + {x} contain a member of F that contains x?
    virtual bool forbids(const Orientation& chosen, const std::vector<Id>& chosen_list, Id x) const = 0;
    // Enumerate star members of F that contain y and whose other elements z satisfy ok(z).
    // The callback returns true to stop.
    virtual void stars_containing(Id y, const std::function<bool(Id)>& ok,
                                  const std::function<bool(const std::vector<Id>&)>& cb) const = 0;
    // Upper bound on member size, used by brute-force member listings.
    virtual int max_member_size() const = 0;
};

template <class U>
class ExplicitFamily : public Family<U> {
public:
    ExplicitFamily(const SepSystem<U>& s, std::vector<std::vector<Id>> sets, std::string tag = "user")
        : s_(&s), tag_(std::move(tag)), by_elem_(s.size()) {
        for (auto& st : sets) {
            std::sort(st.begin(), st.end());
            st.erase(std::unique(st.begin(), st.end()), st.end());
        }
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        sets_ = std::move(sets);
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            max_ = std::max<int>(max_, static_cast<int>(sets_[i].size()));
            for (Id x : sets_[i]) by_elem_[x].push_back(static_cast<int>(i));
            lookup_.insert(sets_[i]);
        }
    }
    std::string tag() const override { return tag_; }
    const std::vector<std::vector<Id>>& sets() const { return sets_; }
    bool contains(std::vector<Id> set) const override {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        return lookup_.count(set) > 0;
    }
    bool forbids(const Orientation& chosen, const std::vector<Id>&, Id x) const override {
        for (int i : by_elem_[x]) {
            bool all = true;
            for (Id z : sets_[i])
                if (z != x && !chosen.test(z)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    }
    void stars_containing(Id y, const std::function<bool(Id)>& ok,
                          const std::function<bool(const std::vector<Id>&)>& cb) const override {
        std::vector<int> idx = by_elem_[y];
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return sets_[a].size() < sets_[b].size(); });
        for (int i : idx) {
            const auto& st = sets_[i];
            if (!is_star(*s_, st)) continue;
            bool good = true;
            for (Id z : st)
                if (z != y && !ok(z)) {
                    good = false;
                    break;
                }
            if (good && cb(st)) return;
        }
    }
    int max_member_size() const override { return max_; }

private:
    const SepSystem<U>* s_;
    std::string tag_;
    std::vector<std::vector<Id>> sets_;
    std::vector<std::vector<int>> by_elem_;
    std::set<std::vector<Id>> lookup_;
    int max_ = 0;
};

// P_S = {{r, s, (r v s)*}} together with the singletons {x} for co-small x.
// Its tangles are the regular profiles.
template <class U>
class ProfileFamily : public Family<U> {
public:
    explicit ProfileFamily(const SepSystem<U>& s) : s_(&s) {}
    std::string tag() const override { return "profiles"; }
    int max_member_size() const override { return 3; }

    bool contains(std::vector<Id> set) const override {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        const auto& s = *s_;
        if (set.size() == 1) return s.is_cosmall(set[0]);
        // {r, s, (r v s)*} with possibly coinciding entries
        for (Id r : set)
            for (Id t : set) {
                auto j = s.join(r, t);
                if (!j) continue;
                std::vector<Id> cand{r, t, s.inv(*j)};
                std::sort(cand.begin(), cand.end());
                cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
                if (cand == set) return true;
            }
        return false;
    }

    bool forbids(const Orientation& chosen, const std::vector<Id>& list, Id x) const override {
        const auto& s = *s_;
        if (s.is_cosmall(x)) return true;
        for (Id y : list) {
            auto j = s.join(x, y);
            if (j && (chosen.test(s.inv(*j)) || s.inv(*j) == x)) return true;
        }
        Id xi = s.inv(x);
        std::vector<Id> below;
        for (Id y : list)
            if (s.leq(y, xi)) below.push_back(y);
        for (std::size_t i = 0; i < below.size(); ++i)
            for (std::size_t j = i + 1; j < below.size(); ++j) {
                auto jn = s.join(below[i], below[j]);
                if (jn && *jn == xi) return true;
            }
        return false;
    }

    void stars_containing(Id y, const std::function<bool(Id)>& ok,
                          const std::function<bool(const std::vector<Id>&)>& cb) const override {
        const auto& s = *s_;
        if (s.is_cosmall(y) && cb({y})) return;
        std::vector<Id> cand;
        for (Id z = 0; z < static_cast<Id>(s.size()); ++z)
            if (z != y && s.member(z) != s.member(y) && !s.is_degenerate(z) && s.leq(y, s.inv(z)) && ok(z))
                cand.push_back(z);
        // y as r: {y, z, (y v z)*}
        for (Id z : cand) {
            auto j = s.join(y, z);
            if (!j) continue;
            Id t = s.inv(*j);
            if (t == y || t == z || !ok(t)) continue;
            std::vector<Id> st{y, z, t};
            std::sort(st.begin(), st.end());
            if (is_star(s, st) && cb(st)) return;
        }
        // y as (r v z)*
        Id yi = s.inv(y);
        std::vector<Id> below;
        for (Id z : cand)
            if (s.leq(z, yi)) below.push_back(z);
        for (std::size_t i = 0; i < below.size(); ++i)
            for (std::size_t j = i + 1; j < below.size(); ++j) {
                auto jn = s.join(below[i], below[j]);
                if (!jn || *jn != yi) continue;
                std::vector<Id> st{y, below[i], below[j]};
                std::sort(st.begin(), st.end());
                if (is_star(s, st) && cb(st)) return;
            }
    }

private:
    const SepSystem<U>* s_;
};

// Stars of size at most three whose join is co-small (the abstract analogue of T_k).
template <class U>
class CosmallJoinFamily : public Family<U> {
public:
    explicit CosmallJoinFamily(const SepSystem<U>& s) : s_(&s) {}
    std::string tag() const override { return "cosmall-join-stars"; }
    int max_member_size() const override { return 3; }

    bool contains(std::vector<Id> set) const override {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        if (set.empty() || set.size() > 3 || !is_star(*s_, set)) return false;
        return cosmall_join(set);
    }
    bool forbids(const Orientation& chosen, const std::vector<Id>& list, Id x) const override {
        bool stop = false;
        stars_containing(x, [&](Id z) { return chosen.test(z); },
                         [&](const std::vector<Id>&) { return stop = true; });
        (void)list;
        return stop;
    }
    void stars_containing(Id y, const std::function<bool(Id)>& ok,
                          const std::function<bool(const std::vector<Id>&)>& cb) const override {
        const auto& s = *s_;
        if (s.is_degenerate(y)) return;
        if (cosmall_join({y}) && cb({y})) return;
        std::vector<Id> cand;
        for (Id z = 0; z < static_cast<Id>(s.size()); ++z)
            if (s.member(z) != s.member(y) && !s.is_degenerate(z) && s.leq(y, s.inv(z)) && ok(z)) cand.push_back(z);
        for (Id z : cand) {
            std::vector<Id> st{y, z};
            std::sort(st.begin(), st.end());
            if (cosmall_join(st) && cb(st)) return;
        }
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (s.member(cand[i]) == s.member(cand[j]) || !s.leq(cand[i], s.inv(cand[j]))) continue;
                std::vector<Id> st{y, cand[i], cand[j]};
                std::sort(st.begin(), st.end());
                if (cosmall_join(st) && cb(st)) return;
            }
    }

private:
    bool cosmall_join(const std::vector<Id>& set) const {
        const auto& u = s_->universe();
        auto j = s_->elem(set[0]);
        for (std::size_t i = 1; i < set.size(); ++i) j = u.join(j, s_->elem(set[i]));
        return u.is_cosmall(j);
    }
    const SepSystem<U>* s_;
};

template <class U>
class UnionFamily : public Family<U> {
public:
    UnionFamily(std::vector<const Family<U>*> parts, std::string tag) : parts_(std::move(parts)), tag_(std::move(tag)) {}
    std::string tag() const override { return tag_; }
    int max_member_size() const override {
        int m = 0;
        for (auto* p : parts_) m = std::max(m, p->max_member_size());
        return m;
    }
    bool contains(std::vector<Id> set) const override {
        for (auto* p : parts_)
            if (p->contains(set)) return true;
        return false;
    }
    bool forbids(const Orientation& chosen, const std::vector<Id>& list, Id x) const override {
        for (auto* p : parts_)
            if (p->forbids(chosen, list, x)) return true;
        return false;
    }
    void stars_containing(Id y, const std::function<bool(Id)>& ok,
                          const std::function<bool(const std::vector<Id>&)>& cb) const override {
        bool stop = false;
        for (auto* p : parts_) {
            p->stars_containing(y, ok, [&](const std::vector<Id>& st) { return stop = cb(st); });
            if (stop) return;
        }
    }

private:
    std::vector<const Family<U>*> parts_;
    std::string tag_;
};

// The empty family: every consistent orientation is a tangle.
template <class U>
class EmptyFamily : public Family<U> {
public:
    std::string tag() const override { return "empty"; }
    int max_member_size() const override { return 0; }
    bool contains(std::vector<Id>) const override { return false; }
    bool forbids(const Orientation&, const std::vector<Id>&, Id) const override { return false; }
    void stars_containing(Id, const std::function<bool(Id)>&,
                          const std::function<bool(const std::vector<Id>&)>&) const override {}
};

// Lists all members of a family by checking every set of size at most max_member_size().
template <class U>
std::vector<std::vector<Id>> list_members(const SepSystem<U>& s, const Family<U>& f) {
    std::vector<std::vector<Id>> out;
    Id n = static_cast<Id>(s.size());
    int mx = f.max_member_size();
    std::vector<Id> cur;
    auto rec = [&](auto&& self, Id start) -> void {
        if (!cur.empty() && f.contains(cur)) out.push_back(cur);
        if (static_cast<int>(cur.size()) == mx) return;
        for (Id x = start; x < n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Tangle enumeration

struct TangleFlags {
    bool consistent = false;
    bool profile = false;
    bool regular = false;
    bool f_avoiding = false;
};

struct TangleSet {
    std::vector<Orientation> tangles;
    std::vector<TangleFlags> flags;
    std::size_t size() const { return tangles.size(); }
    const Orientation& operator[](std::size_t i) const { return tangles[i]; }
};

struct EnumOptions {
    std::size_t max_tangles = std::size_t{1} << 16;
};

// Choice vector used for canonical tangle order: 0 if the canonical orientation is chosen.
template <class U>
std::vector<char> choice_key(const SepSystem<U>& s, const Orientation& o) {
    std::vector<char> key(s.member_count());
    for (std::size_t m = 0; m < s.member_count(); ++m) key[m] = o.test(s.rep(static_cast<int>(m))) ? 0 : 1;
    return key;
}

template <class U>
void sort_tangles(const SepSystem<U>& s, std::vector<Orientation>& ts) {
    std::sort(ts.begin(), ts.end(), [&](const Orientation& a, const Orientation& b) {
        return choice_key(s, a) < choice_key(s, b);
    });
}

template <class U>
TangleFlags compute_flags(const SepSystem<U>& s, const Orientation& o, const Family<U>* f) {
    TangleFlags fl;
    fl.consistent = is_consistent(s, o);
    fl.profile = fl.consistent && !profile_witness(s, o).has_value();
    fl.regular = is_regular(s, o);
    fl.f_avoiding = true;
    if (f) {
        Orientation part(s.size());
        std::vector<Id> list;
        for (Id x : ids_of<U>(o)) {
            if (f->forbids(part, list, x)) {
                fl.f_avoiding = false;
                break;
            }
            part.set(x);
            list.push_back(x);
        }
    }
    return fl;
}

template <class U>
TangleSet make_tangle_set(const SepSystem<U>& s, std::vector<Orientation> ts, const Family<U>* f) {
    sort_tangles(s, ts);
    TangleSet out;
    for (auto& t : ts) {
        out.flags.push_back(compute_flags(s, t, f));
        out.tangles.push_back(std::move(t));
    }
    return out;
}

// All F-tangles, by backtracking with consistency and F-subset pruning.
template <class U>
TangleSet f_tangles(const SepSystem<U>& s, const Family<U>& f, const EnumOptions& opt = {}) {
    const int mcount = static_cast<int>(s.member_count());
    // Members with a small orientation first; then by (order, encoding).
    std::vector<int> seq(mcount);
    for (int m = 0; m < mcount; ++m) seq[m] = m;
    std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) {
        Id ra = s.rep(a), rb = s.rep(b);
        bool sa = s.is_small(ra) || s.is_cosmall(ra);
        bool sb = s.is_small(rb) || s.is_cosmall(rb);
        return sa && !sb;
    });
    Orientation cur(s.size());
    std::vector<Id> list;
    std::vector<Orientation> found;

    auto consistent_with = [&](Id x) {
        for (Id y : list) {
            if (s.member(y) == s.member(x)) continue;
            if (s.less(s.inv(y), x) || s.less(s.inv(x), y)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == mcount) {
            found.push_back(cur);
            if (found.size() > opt.max_tangles) throw Error(ErrorKind::TooLarge, "too many tangles");
            return;
        }
        Id r = s.rep(seq[i]);
        Id opts[2] = {r, s.inv(r)};
        if (s.is_cosmall(r) && !s.is_small(r)) std::swap(opts[0], opts[1]);
        int nopts = s.is_degenerate(r) ? 1 : 2;
        for (int t = 0; t < nopts; ++t) {
            Id x = opts[t];
            if (!consistent_with(x) || f.forbids(cur, list, x)) continue;
            cur.set(x);
            list.push_back(x);
            self(self, i + 1);
            list.pop_back();
            cur.reset(x);
        }
    };
    rec(rec, 0);
    return make_tangle_set(s, std::move(found), &f);
}

// ---------------------------------------------------------------------------
// Closely related and good separations

// r in P with r ∧ x not in S, if any.
template <class U>
std::optional<Id> closeness_witness(const SepSystem<U>& s, Id x, const Orientation& p) {
    if (!p.test(x)) throw Error(ErrorKind::NotInProfile, s.str(x) + " is not in the profile");
    for (Id r : ids_of<U>(p))
        if (!s.meet(r, x)) return r;
    return std::nullopt;
}

template <class U>
bool closely_related(const SepSystem<U>& s, Id x, const Orientation& p) {
    return p.test(x) && !closeness_witness(s, x, p).has_value();
}

template <class U>
bool set_closely_related(const SepSystem<U>& s, const std::vector<Id>& xs, const Orientation& p) {
    for (Id x : xs)
        if (!closely_related(s, x, p)) return false;
    return true;
}

// A pair (i, j) of tangles witnessing that member m is good: the orientation in tangle i
// is closely related to it, and likewise for j.
template <class U>
std::optional<std::pair<int, int>> good_witness(const SepSystem<U>& s, int m, const TangleSet& ts) {
    Id r = s.rep(m);
    if (s.is_degenerate(r)) return std::nullopt;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (!ts[i].test(r) || !ts[j].test(s.inv(r))) continue;
            if (closely_related(s, r, ts[i]) && closely_related(s, s.inv(r), ts[j]))
                return std::make_pair(static_cast<int>(i), static_cast<int>(j));
        }
    return std::nullopt;
}

template <class U>
bool is_good(const SepSystem<U>& s, int m, const TangleSet& ts) {
    return good_witness(s, m, ts).has_value();
}

struct Distinguishers {
    std::vector<int> all;        // members
    std::vector<int> efficient;  // members of minimum order among all
    int min_order = -1;
};

template <class U>
Distinguishers distinguishers(const SepSystem<U>& s, const Orientation& p1, const Orientation& p2) {
    if (p1 == p2) throw Error(ErrorKind::Indistinct, "orientations are equal");
    Distinguishers d;
    for (std::size_t m = 0; m < s.member_count(); ++m) {
        Id r = s.rep(static_cast<int>(m));
        if (s.is_degenerate(r)) continue;
        if (p1.test(r) != p2.test(r)) d.all.push_back(static_cast<int>(m));
    }
    for (int m : d.all) {
        int o = s.order(s.rep(m));
        if (d.min_order < 0 || o < d.min_order) d.min_order = o;
    }
    for (int m : d.all)
        if (s.order(s.rep(m)) == d.min_order) d.efficient.push_back(m);
    return d;
}

struct StarStatus {
    std::vector<int> owners;
    bool essential = false;
    bool exclusive = false;
};

template <class U>
StarStatus star_status(const SepSystem<U>& s, const std::vector<Id>& sigma, const TangleSet& ts) {
    if (!is_star(s, sigma)) throw Error(ErrorKind::NotAStar, "not a star");
    StarStatus st;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool all = true;
        for (Id x : sigma)
            if (!ts[i].test(x)) {
                all = false;
                break;
            }
        if (all) st.owners.push_back(static_cast<int>(i));
    }
    st.essential = !st.owners.empty();
    st.exclusive = st.owners.size() == 1;
    return st;
}

// Infimum s ∧ (meet of M), checked to lie in S and to be closely related to p when s is.
template <class U>
Id guarded_infimum(const SepSystem<U>& s, Id x, const std::vector<Id>& m_set, const Orientation& p,
                   const std::vector<const Orientation*>& m_profiles) {
    if (m_profiles.size() != m_set.size()) throw Error(ErrorKind::HypothesisFailure, "one profile per element of M required");
    for (std::size_t i = 0; i < m_set.size(); ++i) {
        const auto& q = *m_profiles[i];
        if (!q.test(x) || !closely_related(s, m_set[i], q))
            throw Error(ErrorKind::HypothesisFailure, "element of M not closely related to a profile containing s");
    }
    auto e = s.elem(x);
    for (Id m : m_set) e = s.universe().meet(e, s.elem(m));
    auto id = s.find(e);
    if (!id) throw Error(ErrorKind::HypothesisFailure, "infimum not in S");
    if (closely_related(s, x, p) && !closely_related(s, *id, p))
        throw Error(ErrorKind::HypothesisFailure, "infimum lost closeness");
    return *id;
}

// ---------------------------------------------------------------------------
// Shifting

template <class U>
bool emulates(const SepSystem<U>& s, Id sx, Id r) {
    if (!s.leq(r, sx)) return false;
    for (Id x = 0; x < static_cast<Id>(s.size()); ++x)
        if (s.leq(r, x) && !s.join(sx, x)) return false;
    return true;
}

template <class U>
struct ShiftContext {
    const SepSystem<U>* sys = nullptr;
    Id r = -1;
    Id s = -1;

    ShiftContext(const SepSystem<U>& system, Id base, Id target) : sys(&system), r(base), s(target) {
        if (!emulates(system, target, base)) throw Error(ErrorKind::EmulationFailure, "target does not emulate base");
    }
    bool in_domain(Id x) const {
        if (x == sys->inv(r)) return false;
        return sys->leq(r, x) || sys->leq(r, sys->inv(x));
    }
    Id shift(Id x) const {
        if (!in_domain(x)) throw Error(ErrorKind::OutOfDomain, sys->str(x) + " outside the shift domain");
        if (sys->leq(r, x)) return *sys->join(x, s);
        Id xi = sys->inv(x);
        return sys->inv(*sys->join(xi, s));
    }
};

// ---------------------------------------------------------------------------
// Friendliness report

struct FamilyReport {
    bool standard = true;
    bool all_stars = true;
    bool contains_small_inverses = true;
    bool profile_respecting = true;
    bool shift_closed_sampled = true;
    int shift_samples = 0;
    std::string witness;
};

template <class U>
FamilyReport check_star_family(const SepSystem<U>& s, const Family<U>& f, std::uint64_t seed, int samples = 200,
                               bool list_all = true) {
    FamilyReport rep;
    auto note = [&](bool& flag, const std::string& w) {
        if (flag) {
            flag = false;
            if (rep.witness.empty()) rep.witness = w;
        }
    };
    for (Id x = 0; x < static_cast<Id>(s.size()); ++x) {
        if (trivial_witness(s, x) && !f.contains({s.inv(x)})) note(rep.standard, "missing {r*} for trivial " + s.str(x));
        if (s.is_small(x) && !s.is_degenerate(x) && !f.contains({s.inv(x)}))
            note(rep.contains_small_inverses, "missing {r*} for small " + s.str(x));
    }
    if (list_all) {
        for (const auto& m : list_members(s, f))
            if (!is_star(s, m)) {
                note(rep.all_stars, "non-star member");
                break;
            }
    }
    auto ts = f_tangles(s, f);
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (!ts.flags[i].profile) note(rep.profile_respecting, "tangle " + std::to_string(i) + " is not a profile");

    std::mt19937_64 rng(seed);
    std::vector<std::pair<Id, Id>> pairs;
    for (Id r = 0; r < static_cast<Id>(s.size()); ++r) {
        if (s.is_degenerate(r) || trivial_witness(s, r)) continue;
        for (Id t = 0; t < static_cast<Id>(s.size()); ++t)
            if (t != r && emulates(s, t, r)) pairs.emplace_back(r, t);
    }
    for (int i = 0; i < samples && !pairs.empty(); ++i) {
        auto [r, t] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        ShiftContext<U> ctx(s, r, t);
        std::vector<Id> above;
        for (Id x = 0; x < static_cast<Id>(s.size()); ++x)
            if (s.leq(r, x) && x != s.inv(r)) above.push_back(x);
        Id y = above[std::uniform_int_distribution<std::size_t>(0, above.size() - 1)(rng)];
        std::vector<std::vector<Id>> stars;
        f.stars_containing(y, [&](Id z) { return ctx.in_domain(z); }, [&](const std::vector<Id>& st) {
            stars.push_back(st);
            return stars.size() >= 16;
        });
        if (stars.empty()) continue;
        const auto& st = stars[std::uniform_int_distribution<std::size_t>(0, stars.size() - 1)(rng)];
        std::vector<Id> img;
        for (Id z : st) img.push_back(ctx.shift(z));
        ++rep.shift_samples;
        if (!f.contains(img)) note(rep.shift_closed_sampled, "shift image not in F");
    }
    return rep;
}

}  // namespace tot
