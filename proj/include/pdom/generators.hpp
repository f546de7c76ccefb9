// Standard graph families and the fixed example graphs.
#pragma once

#include "pdom/graph.hpp"

namespace pdom {

/// P_n with vertex v_i stored at index i-1.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{m,n}: the m-side is 0..m-1, the n-side is m..m+n-1.
Graph complete_bipartite(int m, int n);
/// K_{1,k}: center 0, leaves 1..k.
Graph star(int k);
/// Star with k legs, each subdivided once: center 0, inner vertices 1..k,
/// outer vertex k+i hanging off inner vertex i.
Graph subdivided_star(int k);
/// P_m □ P_n.
Graph grid(int m, int n);

// Example graphs from the partial-domination locating examples. Index
// maps are documented in generators.cpp.

/// Apex of degree 4, two hubs each reached through two middle vertices,
/// one pendant leaf per hub. 9 vertices.
Graph figure2_graph();
/// Hub whose 4 neighbors form a 4-cycle, one pendant per neighbor. 9 vertices.
Graph figure3_graph();
/// Tree: root with 4 children, two of which carry 3 leaves each. 11 vertices.
Graph figure4_tree();

namespace fig2 {
inline constexpr Vertex kApex = 0;
inline constexpr Vertex kHubLeft = 5;
inline constexpr Vertex kHubRight = 6;
}  // namespace fig2

namespace fig3 {
inline constexpr Vertex kHub = 0;
}  // namespace fig3

namespace fig4 {
inline constexpr Vertex kRoot = 0;
inline constexpr Vertex kLeftParent = 2;
inline constexpr Vertex kRightParent = 3;
}  // namespace fig4

/// Builds a graph from a generator spec such as "path:6",
/// "complete-bipartite:4,2", "subdivided-star:8", "grid:3,4" or "fig2".
/// Throws std::invalid_argument on unknown names or bad arguments.
Graph generate(const std::string& spec);

}  // namespace pdom
