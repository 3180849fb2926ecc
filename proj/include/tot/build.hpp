#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tot/tree.hpp"

namespace tot {

struct DistinguisherTable {
    std::vector<std::vector<int>> min_order;                  // -1 on the diagonal
    std::vector<std::vector<std::vector<int>>> efficient;     // member indices
};

template <class U>
DistinguisherTable distinguisher_table(const SepSystem<U>& s, const TangleSet& ts) {
    const std::size_t n = ts.size();
    DistinguisherTable t;
    t.min_order.assign(n, std::vector<int>(n, -1));
    t.efficient.assign(n, std::vector<std::vector<int>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto d = distinguishers(s, ts[i], ts[j]);
            t.min_order[i][j] = t.min_order[j][i] = d.min_order;
            t.efficient[i][j] = t.efficient[j][i] = d.efficient;
        }
    return t;
}

// A nested set together with, for each member, the tangle pair it efficiently distinguishes.
struct AnnotatedNestedSet {
    NestedSet members;
    std::map<int, std::pair<int, int>> pair_of;
};

template <class U>
bool distinguishes(const SepSystem<U>& s, int m, const Orientation& a, const Orientation& b) {
    Id r = s.rep(m);
    return a.test(r) != b.test(r);
}

struct PremiseReport {
    bool nested = true;
    bool distinguishes_all = true;
    bool each_member_efficient = true;
    bool each_member_good = true;
    std::string witness;
};

template <class U>
PremiseReport verify_premise(const SepSystem<U>& s, const NestedSet& n, const TangleSet& ts) {
    PremiseReport rep;
    auto note = [&](bool& flag, const std::string& w) {
        if (flag && rep.witness.empty()) rep.witness = w;
        flag = false;
    };
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j)
            if (!s.nested(s.rep(n[i]), s.rep(n[j]))) note(rep.nested, "crossing " + s.str(s.rep(n[i])));
    auto table = distinguisher_table(s, ts);
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            bool hit = false;
            for (int m : n)
                if (distinguishes(s, m, ts[i], ts[j])) hit = true;
            if (!hit) note(rep.distinguishes_all, "pair " + std::to_string(i) + "," + std::to_string(j) + " undistinguished");
        }
    for (int m : n) {
        bool eff = false;
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j)
                if (distinguishes(s, m, ts[i], ts[j]) && table.min_order[i][j] == s.order(s.rep(m))) eff = true;
        if (!eff) note(rep.each_member_efficient, s.str(s.rep(m)) + " is not efficient");
        if (!is_good(s, m, ts)) note(rep.each_member_good, s.str(s.rep(m)) + " is not good");
    }
    return rep;
}

// Greedy nested set of efficient distinguishers. Pairs are handled by increasing minimum
// order; a fresh distinguisher is uncrossed against every chosen member it crosses.
template <class U>
AnnotatedNestedSet build_efficient_nested_set(const SepSystem<U>& s, const TangleSet& ts) {
    if (ts.size() == 0) throw Error(ErrorKind::NoTangles, "no tangles to distinguish");
    AnnotatedNestedSet out;
    auto table = distinguisher_table(s, ts);
    std::vector<std::tuple<int, int, int>> pairs;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            pairs.emplace_back(table.min_order[i][j], static_cast<int>(i), static_cast<int>(j));
    std::sort(pairs.begin(), pairs.end());
    const std::size_t budget = s.size() * s.size() + 16;
    std::size_t steps = 0;

    for (auto [ord, pi, qi] : pairs) {
        const auto& p = ts[pi];
        const auto& q = ts[qi];
        bool done = false;
        for (int m : out.members)
            if (distinguishes(s, m, p, q)) done = true;
        if (done) continue;
        Id x = chosen(s, p, table.efficient[pi][qi].front());
        for (;;) {
            if (++steps > budget) throw Error(ErrorKind::VerificationFailed, "uncrossing did not terminate");
            std::optional<int> crossing;
            for (int m : out.members)
                if (!s.nested(x, s.rep(m))) {
                    crossing = m;
                    break;
                }
            if (!crossing) break;
            Id t = chosen(s, p, *crossing);  // p and q agree on t
            auto [ri, rj] = out.pair_of.at(*crossing);
            const auto& r = ts[ri].test(s.inv(t)) ? ts[ri] : ts[rj];
            std::optional<Id> y = r.test(x) ? s.meet(x, s.inv(t)) : s.join(x, t);
            if (!y || s.order(*y) > ord || !p.test(*y) || !q.test(s.inv(*y)))
                throw Error(ErrorKind::VerificationFailed, "corner replacement lost efficiency");
            x = *y;
        }
        int m = s.member(x);
        out.members.push_back(m);
        out.pair_of[m] = {pi, qi};
    }
    out.members = canonical(out.members);
    auto rep = verify_premise(s, out.members, ts);
    if (!rep.nested || !rep.distinguishes_all || !rep.each_member_efficient)
        throw Error(ErrorKind::VerificationFailed, rep.witness);
    return out;
}

}  // namespace tot
