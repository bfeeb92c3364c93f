#pragma once

#include <string>
#include <vector>

#include "cubicgap/canonical.hpp"
#include "cubicgap/graph.hpp"
#include "cubicgap/matrix.hpp"

namespace cubicgap {

/// A shortest cycle u_0..u_{g-1} of a cubic graph together with the third
/// neighbour v_i of each u_i.
struct Corona {
  Graph host;
  VertexSet cycle;
  VertexSet pendants;

  /// Cycle vertices then pendants, without repeats.
  VertexSet vertices() const;
  /// Cycle edges followed by the spokes u_i v_i.
  std::vector<Edge> edges() const;
};

/// A subgraph with its vertices split into the set S (core) and vertices
/// added outside it (external).
struct MarkedGraph {
  Graph graph;
  VertexSet core;
  VertexSet external;

  /// 0 for core vertices, 1 for external ones.
  Coloring coloring() const;
  /// '1' at each core label, '0' elsewhere.
  std::string core_mask() const;
};

/// Vertices outside s with at least two neighbours in s, ascending.
VertexSet strong_open_neighbourhood(const Graph& g, const VertexSet& s);

/// S together with its strong open neighbourhood, keeping only edges with an
/// end in S. Vertices are relabelled: s in the given order, then the
/// neighbourhood in ascending order.
MarkedGraph tilde_subgraph(const Graph& g, const VertexSet& s);

/// Throws std::invalid_argument if g is not cubic, if `cycle` is not a cycle
/// of g, or if its length differs from the girth.
Corona corona_of_cycle(const Graph& g, const VertexSet& cycle);

/// Every cycle of length k once, as a vertex sequence starting at its least
/// vertex and oriented so the second vertex is below the last. Sorted.
std::vector<VertexSet> cycles_of_length(const Graph& g, std::size_t k);

/// All realisations of C_5 o K_1 plus pendant-pendant edges and external
/// vertices on 2 or 3 pendants that keep degree <= 3 and girth >= 5, one per
/// coloured isomorphism class. Core is 0..9 (u_i = i, v_i = 5 + i).
std::vector<MarkedGraph> girth5_candidates();

/// The candidates whose M_SS is positive semidefinite, sorted by coloured
/// canonical form.
std::vector<MarkedGraph> enumerate_girth5_extensions();

/// Isomorphism mapping core to core and external to external.
bool colored_isomorphic(const MarkedGraph& a, const MarkedGraph& b);
CanonicalForm colored_canonical_form(const MarkedGraph& mg);

/// M restricted to the core, in core order, with diagonal 3.
IntMatrix m_ss_from_marked(const MarkedGraph& mg);

enum class Girth5Endgame { Petersen, Dodecahedron, Inconsistent };
std::string to_string(Girth5Endgame tag);

/// Checks that the subgraph around every 5-cycle is one of the two
/// configurations that survive in gap graphs, then names g. Throws
/// std::invalid_argument unless g is cubic of girth 5 with no eigenvalue in (-2, 0).
Girth5Endgame verify_girth5_endgame(const Graph& g);

}  // namespace cubicgap
