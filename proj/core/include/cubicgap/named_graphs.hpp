#pragma once

#include "cubicgap/graph.hpp"

namespace cubicgap {

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Cycle 0-1-...-(n-1)-0; n >= 3.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Outer cycle u_i = i, spokes u_i v_i with v_i = n + i, inner edges
/// v_i v_{i+k mod n}. Requires n >= 3 and 1 <= k with 2k < n.
Graph generalized_petersen(std::size_t n, std::size_t k);
inline Graph petersen_graph() { return generalized_petersen(5, 2); }
inline Graph dodecahedron_graph() { return generalized_petersen(10, 2); }
inline Graph prism_graph() { return generalized_petersen(3, 1); }

/// Tutte's 8-cage with the numbering u_0..u_7 = 0..7, v_0..v_7 = 8..15,
/// w_0..w_7 = 16..23, hubs v04, v26, v15, v37 = 24..27, a = 28, b = 29.
Graph tutte_eight_cage();

/// C_g with a pendant on every cycle vertex: u_i = i, v_i = g + i.
Graph corona_product_cycle(std::size_t g);

}  // namespace cubicgap
