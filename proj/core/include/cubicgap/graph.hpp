#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubicgap {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Hard cap on vertex count for any Graph built by this library.
inline constexpr std::size_t kMaxVertices = 1024;

/// Ordered list of distinct vertex labels of some host graph. The order is
/// significant wherever a submatrix is extracted (rows follow this order).
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1, adjacency kept as one bitset
/// row per vertex. Rows are always symmetric with an empty diagonal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept;

  bool adjacent(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Raw bitset row; word w holds vertices 64w..64w+63.
  const std::uint64_t* row(Vertex v) const { return bits_.data() + v * words_; }
  std::size_t words_per_row() const noexcept { return words_; }

  /// Graph on the listed vertices, relabelled 0..k-1 in the given order.
  Graph induced(const VertexSet& vertices) const;
  /// Same graph with vertex v renamed perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Length of a shortest cycle; forests have infinite girth, which compares
/// greater than every finite value.
class Girth {
 public:
  static constexpr Girth infinite() noexcept { return Girth(); }
  constexpr explicit Girth(std::size_t length) noexcept : length_(length) {}

  constexpr bool is_infinite() const noexcept { return length_ == kInfinite; }
  std::size_t length() const;

  constexpr auto operator<=>(const Girth&) const = default;
  friend constexpr bool operator>=(Girth g, std::size_t bound) noexcept { return g.length_ >= bound; }
  friend constexpr bool operator<(Girth g, std::size_t bound) noexcept { return g.length_ < bound; }

  std::string to_string() const;

 private:
  static constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
  constexpr Girth() noexcept : length_(kInfinite) {}
  std::size_t length_;
};

std::size_t degree(const Graph& g, Vertex v);
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);
Girth girth(const Graph& g);
bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);
/// Breadth-first distances from source; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);

/// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are accepted. Throws Graph6Error on malformed input.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace cubicgap
