#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tot/core.hpp"
#include "tot/separation.hpp"
#include "tot/universe.hpp"

namespace tot {

// A finite separation system inside a universe U, closed under involution.
// Oriented members are addressed by dense ids; each unoriented member has one or two ids.
template <class U>
class SepSystem {
public:
    using Universe = U;
    using Elem = typename U::Elem;

    SepSystem() = default;
    SepSystem(std::shared_ptr<const U> u, const std::vector<Elem>& elems) : u_(std::move(u)) {
        std::vector<Elem> reps;
        for (const auto& e : elems) reps.push_back(u_->canonical_first(e) ? e : u_->inv(e));
        std::sort(reps.begin(), reps.end(), [&](const Elem& x, const Elem& y) { return u_->key_less(x, y); });
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        for (const auto& e : reps) {
            Id id = static_cast<Id>(elems_.size());
            int m = static_cast<int>(reps_.size());
            reps_.push_back(id);
            elems_.push_back(e);
            member_.push_back(m);
            index_.emplace(e, id);
            Elem f = u_->inv(e);
            if (f == e) {
                inv_.push_back(id);
            } else {
                inv_.push_back(id + 1);
                inv_.push_back(id);
                elems_.push_back(f);
                member_.push_back(m);
                index_.emplace(f, id + 1);
            }
        }
    }

    const U& universe() const { return *u_; }
    std::shared_ptr<const U> universe_ptr() const { return u_; }

    std::size_t size() const { return elems_.size(); }
    std::size_t member_count() const { return reps_.size(); }
    const Elem& elem(Id i) const { return elems_[i]; }
    Id inv(Id i) const { return inv_[i]; }
    int member(Id i) const { return member_[i]; }
    Id rep(int m) const { return reps_[m]; }

    std::optional<Id> find(const Elem& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Elem& e) const { return index_.count(e) > 0; }
    Id id_of(const Elem& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw Error(ErrorKind::NotInSystem, u_->str(e) + " is not a member");
        return it->second;
    }

    bool leq(Id a, Id b) const { return u_->leq(elems_[a], elems_[b]); }
    bool less(Id a, Id b) const { return a != b && leq(a, b); }
    bool is_degenerate(Id a) const { return inv_[a] == a; }
    bool is_small(Id a) const { return u_->is_small(elems_[a]); }
    bool is_cosmall(Id a) const { return u_->is_small(elems_[inv_[a]]); }
    int order(Id a) const { return u_->order(elems_[a]); }
    bool has_order() const { return u_->has_order(); }
    std::optional<Id> join(Id a, Id b) const { return find(u_->join(elems_[a], elems_[b])); }
    std::optional<Id> meet(Id a, Id b) const { return find(u_->meet(elems_[a], elems_[b])); }
    bool nested(Id a, Id b) const {
        return leq(a, b) || leq(a, inv_[b]) || leq(inv_[a], b) || leq(inv_[a], inv_[b]);
    }
    std::string str(Id a) const { return u_->str(elems_[a]); }

private:
    std::shared_ptr<const U> u_;
    std::vector<Elem> elems_;
    std::vector<Id> inv_;
    std::vector<int> member_;
    std::vector<Id> reps_;
    std::unordered_map<Elem, Id, typename U::Hash> index_;
};

using GraphSystem = SepSystem<GraphUniverse>;
using TableSystem = SepSystem<TableUniverse>;

struct Caps {
    int max_vertices = 16;
    std::size_t max_system = std::size_t{1} << 20;
};

// All separations of order < k, canonical and sorted by (order, encoding).
GraphSystem enumerate_separations(std::shared_ptr<const Graph> g, int k, const Caps& caps = {});
GraphSystem enumerate_separations(const Graph& g, int k, const Caps& caps = {});
// Only separations with both sides proper; the one-sided (X,V) are left implicit.
GraphSystem enumerate_proper_separations(const Graph& g, int k, const Caps& caps = {});

// The members of a table universe with order < k (or all, if the universe has no order).
TableSystem table_system(std::shared_ptr<const TableUniverse> u, int k);

struct Classification {
    bool small = false;
    bool cosmall = false;
    bool degenerate = false;
    bool trivial = false;
    bool proper = false;
    std::optional<Id> trivial_witness;
};

template <class U>
std::optional<Id> trivial_witness(const SepSystem<U>& s, Id x) {
    for (Id r = 0; r < static_cast<Id>(s.size()); ++r) {
        if (s.member(r) == s.member(x)) continue;
        if (s.less(x, r) && s.less(x, s.inv(r))) return r;
    }
    return std::nullopt;
}

template <class U>
Classification classify(const SepSystem<U>& s, Id x) {
    Classification c;
    c.small = s.is_small(x);
    c.cosmall = s.is_cosmall(x);
    c.degenerate = s.is_degenerate(x);
    c.trivial_witness = trivial_witness(s, x);
    c.trivial = c.trivial_witness.has_value();
    c.proper = !c.small && !c.cosmall;
    return c;
}

}  // namespace tot
