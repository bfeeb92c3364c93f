#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cubicgap/graph.hpp"

namespace cubicgap {

/// Per-vertex colour; isomorphisms must preserve it exactly.
using Coloring = std::vector<int>;

/// Isomorphism-invariant encoding of a (coloured) graph: equal forms mean
/// isomorphic graphs and vice versa.
struct CanonicalForm {
  std::size_t n = 0;
  /// Colours listed by canonical label.
  std::vector<int> colors;
  /// Adjacency rows of the canonically relabelled graph.
  std::vector<std::uint64_t> rows;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalResult {
  /// labeling[v] is the canonical label of vertex v.
  std::vector<Vertex> labeling;
  CanonicalForm form;
};

/// Individualisation-refinement search for the minimum certificate.
/// `colors` may be empty (all vertices alike).
CanonicalResult canonical_labeling(const Graph& g, const Coloring& colors = {});
CanonicalForm canonical_form(const Graph& g, const Coloring& colors = {});
/// The canonically relabelled graph.
Graph canonical_graph(const Graph& g, const Coloring& colors = {});

bool isomorphic(const Graph& a, const Graph& b);
bool isomorphic(const Graph& a, const Coloring& ca, const Graph& b, const Coloring& cb);

}  // namespace cubicgap
