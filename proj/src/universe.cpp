#include "tot/universe.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace tot {

TableUniverse::TableUniverse(int n, std::vector<char> leq, std::vector<int> inv, std::vector<int> meet,
                             std::vector<int> join, std::vector<int> order)
    : n_(n), leq_(std::move(leq)), inv_(std::move(inv)), meet_(std::move(meet)), join_(std::move(join)),
      order_(std::move(order)) {
    auto nn = static_cast<std::size_t>(n) * n;
    if (leq_.size() != nn || meet_.size() != nn || join_.size() != nn || inv_.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::InvalidInput, "universe tables have the wrong size");
    if (!order_.empty() && order_.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::InvalidInput, "order table has the wrong size");
    for (int x : inv_)
        if (x < 0 || x >= n) throw Error(ErrorKind::InvalidInput, "involution table out of range");
    for (std::size_t i = 0; i < nn; ++i)
        if (meet_[i] < 0 || meet_[i] >= n || join_[i] < 0 || join_[i] >= n)
            throw Error(ErrorKind::InvalidInput, "meet/join table out of range");
}

std::string TableUniverse::to_json() const {
    nlohmann::json j;
    j["elements"] = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) j["elements"].push_back(i);
    j["leq"] = nlohmann::json::array();
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (leq(a, b)) j["leq"].push_back({a, b});
    j["inv"] = inv_;
    nlohmann::json mt = nlohmann::json::array(), jt = nlohmann::json::array();
    for (int a = 0; a < n_; ++a) {
        std::vector<int> mr, jr;
        for (int b = 0; b < n_; ++b) {
            mr.push_back(meet(a, b));
            jr.push_back(join(a, b));
        }
        mt.push_back(mr);
        jt.push_back(jr);
    }
    j["meet"] = mt;
    j["join"] = jt;
    if (has_order()) j["order"] = order_;
    return j.dump();
}

TableUniverse TableUniverse::from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        std::vector<long> ids = j.at("elements").get<std::vector<long>>();
        int n = static_cast<int>(ids.size());
        std::map<long, int> idx;
        for (int i = 0; i < n; ++i) {
            if (!idx.emplace(ids[i], i).second) throw Error(ErrorKind::ParseError, "duplicate element id");
        }
        auto at = [&](long id) {
            auto it = idx.find(id);
            if (it == idx.end()) throw Error(ErrorKind::ParseError, "unknown element id " + std::to_string(id));
            return it->second;
        };
        std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
        for (const auto& p : j.at("leq")) leq[at(p.at(0).get<long>()) * n + at(p.at(1).get<long>())] = 1;
        std::vector<int> inv(n, -1);
        const auto& ji = j.at("inv");
        if (ji.is_array()) {
            if (ji.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::ParseError, "inv table not total");
            for (int i = 0; i < n; ++i) inv[i] = at(ji.at(i).get<long>());
        } else {
            for (auto it = ji.begin(); it != ji.end(); ++it) inv[at(std::stol(it.key()))] = at(it.value().get<long>());
        }
        for (int x : inv)
            if (x < 0) throw Error(ErrorKind::ParseError, "inv table not total");
        auto table = [&](const char* key) {
            const auto& t = j.at(key);
            if (t.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::ParseError, std::string(key) + " table not total");
            std::vector<int> out(static_cast<std::size_t>(n) * n);
            for (int a = 0; a < n; ++a) {
                if (t.at(a).size() != static_cast<std::size_t>(n))
                    throw Error(ErrorKind::ParseError, std::string(key) + " table not total");
                for (int b = 0; b < n; ++b) out[a * n + b] = at(t.at(a).at(b).get<long>());
            }
            return out;
        };
        std::vector<int> order;
        if (j.contains("order")) {
            const auto& jo = j.at("order");
            order.assign(n, 0);
            if (jo.is_array()) {
                if (jo.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::ParseError, "order table not total");
                for (int i = 0; i < n; ++i) order[i] = jo.at(i).get<int>();
            } else {
                std::vector<char> seen(n, 0);
                for (auto it = jo.begin(); it != jo.end(); ++it) {
                    int i = at(std::stol(it.key()));
                    order[i] = it.value().get<int>();
                    seen[i] = 1;
                }
                for (char c : seen)
                    if (!c) throw Error(ErrorKind::ParseError, "order table not total");
            }
        }
        return TableUniverse(n, std::move(leq), std::move(inv), table("meet"), table("join"), std::move(order));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

UniverseReport check_universe(const TableUniverse& u) {
    UniverseReport r;
    int n = u.size();
    auto fail = [&](bool& flag, const std::string& w) {
        if (flag) {
            flag = false;
            if (r.witness.empty()) r.witness = w;
        }
    };
    auto s = [](int x) { return std::to_string(x); };
    for (int a = 0; a < n; ++a) {
        if (!u.leq(a, a)) fail(r.lattice, "leq not reflexive at " + s(a));
        for (int b = 0; b < n; ++b) {
            if (a != b && u.leq(a, b) && u.leq(b, a)) fail(r.lattice, "leq not antisymmetric at " + s(a) + "," + s(b));
            for (int c = 0; c < n; ++c)
                if (u.leq(a, b) && u.leq(b, c) && !u.leq(a, c)) fail(r.lattice, "leq not transitive at " + s(a) + "," + s(b) + "," + s(c));
        }
    }
    for (int a = 0; a < n && r.lattice; ++a)
        for (int b = 0; b < n; ++b) {
            int j = u.join(a, b), m = u.meet(a, b);
            if (!u.leq(a, j) || !u.leq(b, j)) fail(r.lattice, "join not an upper bound at " + s(a) + "," + s(b));
            if (!u.leq(m, a) || !u.leq(m, b)) fail(r.lattice, "meet not a lower bound at " + s(a) + "," + s(b));
            for (int c = 0; c < n; ++c) {
                if (u.leq(a, c) && u.leq(b, c) && !u.leq(j, c)) fail(r.lattice, "join not least at " + s(a) + "," + s(b));
                if (u.leq(c, a) && u.leq(c, b) && !u.leq(c, m)) fail(r.lattice, "meet not greatest at " + s(a) + "," + s(b));
            }
        }
    for (int a = 0; a < n; ++a) {
        if (u.inv(u.inv(a)) != a) fail(r.involution_order_reversing, "inv not an involution at " + s(a));
        for (int b = 0; b < n; ++b)
            if (u.leq(a, b) && !u.leq(u.inv(b), u.inv(a)))
                fail(r.involution_order_reversing, "inv not order-reversing at " + s(a) + "," + s(b));
    }
    if (r.lattice) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (u.join(a, u.meet(b, c)) != u.meet(u.join(a, b), u.join(a, c)))
                        fail(r.distributive, "distributivity fails at " + s(a) + "," + s(b) + "," + s(c));
    } else {
        r.distributive = false;
    }
    return r;
}

namespace {

TableUniverse from_sets(const std::vector<std::uint32_t>& sets, std::uint32_t ground,
                        const std::vector<int>& invmap, std::vector<int> order) {
    int n = static_cast<int>(sets.size());
    std::map<std::uint32_t, int> idx;
    for (int i = 0; i < n; ++i) idx[sets[i]] = i;
    std::vector<char> leq(static_cast<std::size_t>(n) * n);
    std::vector<int> meet(static_cast<std::size_t>(n) * n), join(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            leq[a * n + b] = (sets[a] & ~sets[b]) == 0;
            meet[a * n + b] = idx.at(sets[a] & sets[b]);
            join[a * n + b] = idx.at(sets[a] | sets[b]);
        }
    (void)ground;
    return TableUniverse(n, std::move(leq), invmap, std::move(meet), std::move(join), std::move(order));
}

}  // namespace

TableUniverse bipartition_universe(int m, const std::vector<int>& order) {
    if (m < 0 || m > 12) throw Error(ErrorKind::TooLarge, "bipartition universe limited to 12 ground elements");
    std::uint32_t ground = (1u << m) - 1;
    int n = 1 << m;
    if (!order.empty() && order.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::InvalidInput, "order function needs one value per subset");
    std::vector<std::uint32_t> sets(n);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) {
        sets[i] = static_cast<std::uint32_t>(i);
        inv[i] = static_cast<int>(ground & ~static_cast<std::uint32_t>(i));
    }
    return from_sets(sets, ground, inv, order);
}

TableUniverse downset_universe(int m, const std::vector<char>& q_leq, const std::vector<int>& phi,
                               const std::vector<std::vector<int>>& weights) {
    if (m > 16) throw Error(ErrorKind::TooLarge, "poset too large");
    std::uint32_t ground = (m == 32) ? ~0u : ((1u << m) - 1);
    std::vector<std::uint32_t> sets;
    for (std::uint32_t d = 0; d <= ground; ++d) {
        bool down = true;
        for (int b = 0; b < m && down; ++b) {
            if (!((d >> b) & 1u)) continue;
            for (int a = 0; a < m; ++a)
                if (q_leq[a * m + b] && !((d >> a) & 1u)) {
                    down = false;
                    break;
                }
        }
        if (down) sets.push_back(d);
        if (d == ground) break;
    }
    std::sort(sets.begin(), sets.end(), [](std::uint32_t x, std::uint32_t y) {
        int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    std::map<std::uint32_t, int> idx;
    for (std::size_t i = 0; i < sets.size(); ++i) idx[sets[i]] = static_cast<int>(i);
    std::vector<int> inv(sets.size());
    std::vector<int> order(sets.size(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::uint32_t img = 0;
        for (int a = 0; a < m; ++a)
            if ((sets[i] >> a) & 1u) img |= 1u << phi[a];
        auto it = idx.find(ground & ~img);
        if (it == idx.end()) throw Error(ErrorKind::InvalidInput, "phi is not order-reversing");
        inv[i] = it->second;
        int cut = 0;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (((sets[i] >> a) & 1u) && !((sets[i] >> b) & 1u)) cut += weights[a][b];
        order[i] = cut;
    }
    return from_sets(sets, ground, inv, order);
}

TableUniverse random_distributive_universe(std::mt19937_64& rng, int max_elems) {
    std::uniform_int_distribution<int> coin(0, 99);
    for (int attempt = 0;; ++attempt) {
        int fixed = std::uniform_int_distribution<int>(0, 4)(rng);
        int p = std::uniform_int_distribution<int>(0, 3)(rng);
        int m = fixed + 2 * p;
        if (m == 0) continue;
        // points: fixed antichain, then P, then its mirrored copy
        std::vector<char> leq(static_cast<std::size_t>(m) * m, 0);
        std::vector<int> phi(m);
        for (int a = 0; a < m; ++a) leq[a * m + a] = 1;
        for (int a = 0; a < fixed; ++a) phi[a] = a;
        for (int i = 0; i < p; ++i) {
            phi[fixed + i] = fixed + p + i;
            phi[fixed + p + i] = fixed + i;
        }
        auto add = [&](int a, int b) { leq[a * m + b] = 1; };
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (coin(rng) < 40) {
                    add(fixed + i, fixed + j);
                    add(fixed + p + j, fixed + p + i);
                }
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (coin(rng) < 15) {
                    add(fixed + i, fixed + p + j);
                    add(fixed + j, fixed + p + i);
                }
        for (int c = 0; c < m; ++c)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (leq[a * m + c] && leq[c * m + b]) leq[a * m + b] = 1;
        bool antisym = true;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b && leq[a * m + b] && leq[b * m + a]) antisym = false;
        if (!antisym) continue;
        std::vector<std::vector<int>> w(m, std::vector<int>(m, 0));
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                if (w[a][b]) continue;
                int val = std::uniform_int_distribution<int>(0, 2)(rng);
                for (auto [x, y] : {std::pair{a, b}, std::pair{phi[a], phi[b]}}) {
                    w[x][y] = val;
                    w[y][x] = val;
                }
            }
        TableUniverse u;
        try {
            u = downset_universe(m, leq, phi, w);
        } catch (const Error&) {
            continue;
        }
        if (u.size() < 4 || u.size() > max_elems) continue;
        return u;
    }
}

}  // namespace tot
