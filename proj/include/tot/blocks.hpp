#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tot/refine.hpp"
#include "tot/tk.hpp"

namespace tot {

// Fewest vertices (other than u, v) meeting every u-v path; u, v non-adjacent.
// Exhaustive over separators of size < limit; returns limit when none is smaller.
int min_vertex_cut_exhaustive(const Graph& g, int u, int v, int limit);
// Same value via unit-capacity max-flow on the split graph (not capped).
int min_vertex_cut_flow(const Graph& g, int u, int v);

struct Block {
    VSet vertices = 0;
    int k = 0;
    bool separable = false;
    std::vector<Id> star;  // witnessing star in S_k when separable
};

// Pairs joined by an edge or not separable by fewer than k vertices.
bool inseparable(const Graph& g, int u, int v, int k);

std::vector<Block> k_blocks(const GraphSystem& s, int k);

// Star {(C ∪ N(C), V - C) : C component of G - b}, if all its members lie in S.
std::optional<std::vector<Id>> separable_star(const GraphSystem& s, VSet b);

// The orientation choosing (A,B) whenever b ⊆ B; if b lies in both sides, the small one.
Orientation block_orientation(const GraphSystem& s, VSet b);

// P_S together with the T_k* stars that lie in none of the given regular profiles.
// Its tangles are still the regular profiles; the extra stars let the region between
// two nested stars be refined where P_S alone has no 2-stars at all.
class RegularProfileStars : public Family<GraphUniverse> {
public:
    RegularProfileStars(const GraphSystem& s, TangleSet profiles);
    std::string tag() const override { return "profiles+free-Tkstars"; }
    int max_member_size() const override { return 3; }
    bool contains(std::vector<Id> set) const override;
    // Only P_S can forbid: the extra stars are never inside a regular profile.
    bool forbids(const Orientation& chosen, const std::vector<Id>& list, Id x) const override {
        return pf_.forbids(chosen, list, x);
    }
    void stars_containing(Id y, const std::function<bool(Id)>& ok,
                          const std::function<bool(const std::vector<Id>&)>& cb) const override;

private:
    bool in_some_profile(const std::vector<Id>& set) const;
    ProfileFamily<GraphUniverse> pf_;
    TkFamily tk_;
    TangleSet profiles_;
};

struct Correspondence {
    bool induces = true;
    std::optional<Id> induces_witness;
    bool witnesses = true;
    std::vector<Id> witnesses_witness;  // up to three members covering G[U]
    bool small_side_bound = true;
    std::optional<Id> small_side_witness;
};

Correspondence tangle_correspondence(const GraphSystem& s, VSet u, const Orientation& tau, int k);

struct AuditReport {
    bool td_valid = false;
    bool efficient = false;       // all regular profiles distinguished efficiently
    bool large_parts = true;      // parts above 3k-3 carry a matching tangle
    bool blocks = true;           // separable blocks are parts
    int large_part_count = 0;
    int separable_blocks = 0;
    // checks that do not apply: parts of at most 3k-3 vertices, blocks without a star
    int small_parts = 0;
    int nonseparable_blocks = 0;
    std::vector<std::string> failures;
    bool ok() const { return td_valid && efficient && large_parts && blocks; }
};

// profiles: all regular k-profiles; tangles: all k-tangles.
AuditReport verify_theorem_4_8(const GraphSystem& s, int k, const TreeDecomposition& td, const TangleSet& profiles,
                               const TangleSet& tangles);

// Main-clique tangle against the hub tangle: both orientations are built directly and
// tested as k-tangles; then the smallest star interior in the main tangle is compared
// with the smallest interior of a star there that the hub tangle does not contain.
struct HubCheck {
    MinStarResult any, exclusive;
    bool star_in_hub = false;  // the smallest star lies in the hub tangle too
};
// implicit_k > 0: s comes from enumerate_proper_separations(g, implicit_k). One-sided
// separations are small, so they change neither interiors nor exclusivity.
std::optional<HubCheck> hub_check(const GraphSystem& s, VSet main, VSet hub, int implicit_k = 0);

}  // namespace tot
