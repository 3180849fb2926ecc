#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tot/core.hpp"

namespace tot {

// Finite lattice with an order-reversing involution, given by explicit tables.
class TableUniverse {
public:
    using Elem = int;
    using Hash = std::hash<int>;

    TableUniverse() = default;
    // leq is an n*n row-major relation; meet/join are n*n tables.
    TableUniverse(int n, std::vector<char> leq, std::vector<int> inv, std::vector<int> meet,
                  std::vector<int> join, std::vector<int> order = {});

    int size() const { return n_; }
    bool leq(int x, int y) const { return leq_[x * n_ + y]; }
    int inv(int x) const { return inv_[x]; }
    int join(int x, int y) const { return join_[x * n_ + y]; }
    int meet(int x, int y) const { return meet_[x * n_ + y]; }
    bool is_small(int x) const { return leq(x, inv(x)); }
    bool is_cosmall(int x) const { return leq(inv(x), x); }
    bool has_order() const { return !order_.empty(); }
    int order(int x) const { return order_.empty() ? 0 : order_[x]; }
    bool canonical_first(int x) const { return x <= inv(x); }
    bool key_less(int x, int y) const {
        if (has_order() && order(x) != order(y)) return order(x) < order(y);
        return x < y;
    }
    std::string str(int x) const { return "e" + std::to_string(x); }

    const std::vector<int>& orders() const { return order_; }

    std::string to_json() const;
    static TableUniverse from_json(const std::string& text);

private:
    int n_ = 0;
    std::vector<char> leq_;
    std::vector<int> inv_, meet_, join_, order_;
};

struct UniverseReport {
    bool lattice = true;
    bool involution_order_reversing = true;
    bool distributive = true;
    std::string witness;
};

UniverseReport check_universe(const TableUniverse& u);

// Subsets of a ground set of size m, complement as involution; order given per subset.
TableUniverse bipartition_universe(int m, const std::vector<int>& order);

// Down-sets of a poset q (q_leq row-major m*m) with an order-reversing involution phi on q.
// The universe involution is D -> q minus phi(D).
TableUniverse downset_universe(int m, const std::vector<char>& q_leq, const std::vector<int>& phi,
                               const std::vector<std::vector<int>>& weights);

// Random distributive universe with at most max_elems elements and a symmetric submodular
// order function (cut function of a phi-invariant weighted graph on the poset).
TableUniverse random_distributive_universe(std::mt19937_64& rng, int max_elems);

}  // namespace tot
