#pragma once

#include <compare>
#include <memory>
#include <string>

#include "tot/core.hpp"
#include "tot/graph.hpp"

namespace tot {

// Oriented separation (A,B) of a graph.
struct Sep {
    VSet a = 0;
    VSet b = 0;

    Sep inv() const { return {b, a}; }
    int order() const { return popcount(a & b); }
    bool operator==(const Sep&) const = default;
};

inline bool sep_leq(const Sep& x, const Sep& y) { return subset(x.a, y.a) && subset(y.b, x.b); }
inline Sep sep_join(const Sep& x, const Sep& y) { return {x.a | y.a, x.b & y.b}; }
inline Sep sep_meet(const Sep& x, const Sep& y) { return {x.a & y.a, x.b | y.b}; }

struct SepHash {
    std::size_t operator()(const Sep& s) const {
        std::uint64_t h = s.a * 0x9E3779B97F4A7C15ull;
        h ^= s.b + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::string sep_str(const Sep& s);

// Validates (A,B) against g.
Sep separation(const Graph& g, VSet a, VSet b);
bool is_separation(const Graph& g, VSet a, VSet b);

enum class Relation { Equal, Leq, Geq, NestedOther, Crossing };
const char* relation_name(Relation r);
Relation compare(const Sep& x, const Sep& y);

enum class Corner { Join, Meet, JoinInverse, MeetInverse };
Sep corner(const Sep& x, const Sep& y, Corner which);

// Universe of all separations of a fixed graph.
class GraphUniverse {
public:
    using Elem = Sep;
    using Hash = SepHash;

    explicit GraphUniverse(std::shared_ptr<const Graph> g) : g_(std::move(g)) {}

    const Graph& graph() const { return *g_; }
    std::shared_ptr<const Graph> graph_ptr() const { return g_; }
    VSet all() const { return g_->vertices(); }

    bool leq(const Sep& x, const Sep& y) const { return sep_leq(x, y); }
    Sep inv(const Sep& x) const { return x.inv(); }
    Sep join(const Sep& x, const Sep& y) const { return sep_join(x, y); }
    Sep meet(const Sep& x, const Sep& y) const { return sep_meet(x, y); }
    bool is_small(const Sep& x) const { return x.b == all(); }
    bool is_cosmall(const Sep& x) const { return x.a == all(); }
    bool has_order() const { return true; }
    int order(const Sep& x) const { return x.order(); }
    // The member orientation stored first: lexicographically smaller side first.
    bool canonical_first(const Sep& x) const { return !lex_less(x.b, x.a); }
    // Total order used to sort members: (order, encoding).
    bool key_less(const Sep& x, const Sep& y) const {
        if (x.order() != y.order()) return x.order() < y.order();
        if (x.a != y.a) return lex_less(x.a, y.a);
        return lex_less(x.b, y.b);
    }
    std::string str(const Sep& x) const { return sep_str(x); }

private:
    std::shared_ptr<const Graph> g_;
};

}  // namespace tot
