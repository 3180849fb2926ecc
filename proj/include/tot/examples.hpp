#pragma once

#include <vector>

#include "tot/graph.hpp"

namespace tot::examples {

// Two K4 on {0..3} and {4..7} joined by the edge 3-4.
Graph k4_bridge();

// Two K7 joined by one edge.
Graph twin_k7();

// Central K6 with three outer K6 attached through order-2 separators, plus a pendant
// vertex, a pendant path and a pendant triangle on the central clique.
struct FigureGraph {
    Graph g;
    std::vector<VSet> cliques;  // central first
    VSet appendages = 0;
};
FigureGraph figure_graph();

// Five cliques around a hub clique. Corners L, P, Q1, Q2, T, B, R1, R2 are joined by
// paths with the given numbers of inner vertices (mirrored top/bottom):
//   L-P lp, P-Qi pq, Q1-Q2 qq, Qi-T/B qt, Qi-Ri qr; L-T, L-B, T-R1, B-R2, R1-R2 are edges.
// Cliques, each on its face boundary plus extra private vertices:
//   side (L,P,Qi,T/B), corner (T/B,Qi,Ri), main (Q1,R1,R2,Q2 and the Q1-Q2 path),
//   hub (L,P,Q1,Q2 and the paths between them).
struct HubParams {
    int lp = 0, pq = 0, qq = 0, qt = 0, qr = 0;
    int side = 0, corner = 0, main = 0, hub = 0;
};
struct HubGraph {
    Graph g;
    VSet main = 0, hub = 0;
    std::vector<VSet> cliques;  // side top, side bottom, corner top, corner bottom, main, hub
};
HubGraph hub_cliques(const HubParams& p);
int hub_vertex_count(const HubParams& p);
// 22 vertices, to be read at k = 10: the smallest star of the main-clique tangle has
// interior 16 and lies in the hub tangle too; exclusive stars need 17.
inline constexpr HubParams kHubExample{1, 1, 1, 2, 3, 0, 0, 0, 0};
inline constexpr int kHubExampleK = 10;

}  // namespace tot::examples
