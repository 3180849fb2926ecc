#pragma once

#include "tot/tangles.hpp"

namespace tot {

// T_k: sets of at most three separations whose small sides cover the graph.
// With stars_only, only the stars among them (T_k*).
class TkFamily : public Family<GraphUniverse> {
public:
    TkFamily(const GraphSystem& s, bool stars_only);
    std::string tag() const override { return stars_ ? "Tkstars" : "Tk"; }
    int max_member_size() const override { return 3; }
    bool contains(std::vector<Id> set) const override;
    bool forbids(const Orientation& chosen, const std::vector<Id>& list, Id x) const override;
    void stars_containing(Id y, const std::function<bool(Id)>& ok,
                          const std::function<bool(const std::vector<Id>&)>& cb) const override;

private:
    bool cover(VSet a, VSet b = 0, VSet c = 0) const;
    VSet side(Id x) const { return s_->elem(x).a; }
    const GraphSystem* s_;
    const Graph* g_;
    bool stars_;
};

// Direct test of one orientation: consistent, and no three small sides cover G.
// Only the inclusion-maximal small sides are tried, so it scales to large systems.
// With implicit_k > 0, s holds only proper separations of S_k and every (X,V) in S_k
// counts as oriented towards V.
bool is_k_tangle(const GraphSystem& s, const Orientation& o, int implicit_k = 0);
// At most three small sides of o whose induced subgraphs together give G.
std::optional<std::vector<VSet>> small_side_cover(const GraphSystem& s, const Orientation& o, int implicit_k = 0);

}  // namespace tot
