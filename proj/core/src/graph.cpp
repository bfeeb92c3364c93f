#include "cubicgap/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "cubicgap/errors.hpp"

namespace cubicgap {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
  if (n > kMaxVertices) {
    throw std::length_error("graph order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxVertices));
  }
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n_));
  }
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u)[v / 64] >> (v % 64)) & 1U;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(r[w]));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const VertexSet& vertices) const {
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("relabeling permutation has wrong length");
  Graph h(n_);
  for (const auto& [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

std::size_t Girth::length() const {
  if (is_infinite()) throw std::logic_error("girth is infinite");
  return length_;
}

std::string Girth::to_string() const { return is_infinite() ? "inf" : std::to_string(length_); }

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("common_neighbors requires two distinct vertices");
  if (u >= g.order() || v >= g.order()) throw std::out_of_range("common_neighbors: vertex out of range");
  VertexSet out;
  const auto* ru = g.row(u);
  const auto* rv = g.row(v);
  for (std::size_t w = 0; w < g.words_per_row(); ++w) {
    for (auto bits = ru[w] & rv[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Girth girth(const Graph& g) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.order();
  std::size_t best = kUnreached;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    parent[s] = s;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      // Nothing shorter can be found once the BFS layer passes best/2.
      if (best != kUnreached && 2 * dist[x] >= best) break;
      for (Vertex y : adj[x]) {
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best == kUnreached ? Girth::infinite() : Girth(best);
}

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

// graph6: N(n) header, then the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed six bits per byte (big-endian within the group), each byte offset by 63.

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text) {
    const auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126) {
      throw Graph6Error("graph6: byte " + std::to_string(byte) + " outside 63..126");
    }
  }

  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - 63); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && value(1) < 63) {
    if (text.size() < 4) throw Graph6Error("graph6: truncated 18-bit length header");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n < 63) throw Graph6Error("graph6: non-minimal length header");
    pos = 4;
  } else {
    if (text.size() < 8) throw Graph6Error("graph6: truncated 36-bit length header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    if (n < 258048) throw Graph6Error("graph6: non-minimal length header");
    pos = 8;
  }
  if (n > kMaxVertices) {
    throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds supported cap " +
                      std::to_string(kMaxVertices));
  }

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw Graph6Error("graph6: expected " + std::to_string(byte_count) + " data bytes for n=" +
                      std::to_string(n) + ", found " + std::to_string(text.size() - pos));
  }

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  for (; k < byte_count * 6; ++k) {
    if ((value(pos + k / 6) >> (5 - k % 6)) & 1U) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  unsigned group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

}  // namespace cubicgap
