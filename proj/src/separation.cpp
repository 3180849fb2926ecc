#include "tot/separation.hpp"

namespace tot {

std::string sep_str(const Sep& s) { return "(" + set_str(s.a) + "," + set_str(s.b) + ")"; }

bool is_separation(const Graph& g, VSet a, VSet b) {
    if ((a | b) != g.vertices()) return false;
    if ((a | b) & ~g.vertices()) return false;
    VSet only_a = a & ~b;
    VSet only_b = b & ~a;
    bool ok = true;
    for_each_vertex(only_a, [&](int v) {
        if (g.nbrs(v) & only_b) ok = false;
    });
    return ok;
}

Sep separation(const Graph& g, VSet a, VSet b) {
    if ((a | b) != g.vertices()) throw Error(ErrorKind::NotACover, sep_str({a, b}) + " does not cover V");
    if (!is_separation(g, a, b)) throw Error(ErrorKind::CrossingEdge, sep_str({a, b}) + " has an edge between A\\B and B\\A");
    return {a, b};
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Equal: return "equal";
        case Relation::Leq: return "leq";
        case Relation::Geq: return "geq";
        case Relation::NestedOther: return "nested-other";
        case Relation::Crossing: return "crossing";
    }
    return "?";
}

Relation compare(const Sep& x, const Sep& y) {
    if (x == y) return Relation::Equal;
    if (sep_leq(x, y)) return Relation::Leq;
    if (sep_leq(y, x)) return Relation::Geq;
    if (sep_leq(x, y.inv()) || sep_leq(x.inv(), y)) return Relation::NestedOther;
    return Relation::Crossing;
}

Sep corner(const Sep& x, const Sep& y, Corner which) {
    switch (which) {
        case Corner::Join: return sep_join(x, y);
        case Corner::Meet: return sep_meet(x, y);
        case Corner::JoinInverse: return sep_join(x, y).inv();
        case Corner::MeetInverse: return sep_meet(x, y).inv();
    }
    return x;
}

}  // namespace tot
