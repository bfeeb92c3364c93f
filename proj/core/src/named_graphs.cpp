#include "cubicgap/named_graphs.hpp"

#include <stdexcept>
#include <tuple>

#include "cubicgap/errors.hpp"

namespace cubicgap {

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs at least 3 vertices");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw std::invalid_argument("generalized_petersen(" + std::to_string(n) + ", " + std::to_string(k) +
                                "): need n >= 3 and 1 <= k < n/2");
  }
  Graph g(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + k) % n);
  }
  return g;
}

Graph tutte_eight_cage() {
  constexpr Vertex u = 0, v = 8, w = 16;
  constexpr Vertex v04 = 24, v26 = 25, v15 = 26, v37 = 27, a = 28, b = 29;
  Graph g(30);
  for (Vertex i = 0; i < 8; ++i) {
    g.add_edge(u + i, u + (i + 1) % 8);
    g.add_edge(u + i, v + i);
    g.add_edge(v + i, w + i);
    g.add_edge(w + i, w + (i + 3) % 8);
  }
  for (auto [hub, x, y] : {std::tuple{v04, 0, 4}, std::tuple{v26, 2, 6}}) {
    g.add_edge(hub, v + x);
    g.add_edge(hub, v + y);
    g.add_edge(hub, a);
  }
  for (auto [hub, x, y] : {std::tuple{v15, 1, 5}, std::tuple{v37, 3, 7}}) {
    g.add_edge(hub, v + x);
    g.add_edge(hub, v + y);
    g.add_edge(hub, b);
  }
  g.add_edge(a, b);
  if (!is_cubic(g) || g.edge_count() != 45) throw ContractViolation("Tutte 8-cage construction is not cubic");
  return g;
}

Graph corona_product_cycle(std::size_t g) {
  if (g < 3) throw std::invalid_argument("corona_product_cycle needs a cycle of length >= 3");
  Graph out(2 * g);
  for (Vertex i = 0; i < g; ++i) {
    out.add_edge(i, (i + 1) % g);
    out.add_edge(i, g + i);
  }
  return out;
}

}  // namespace cubicgap
