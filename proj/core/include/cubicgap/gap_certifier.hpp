#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicgap/graph.hpp"
#include "cubicgap/matrix.hpp"
#include "cubicgap/rational.hpp"

namespace cubicgap {

/// The interval (-2, 0).
Interval open_gap();

/// A(A + 2I) by matrix multiplication.
IntMatrix m_matrix_product(const Graph& g);
/// Entries from the neighbourhood formula: deg(u) on the diagonal,
/// |N(u) & N(v)| + 2[u ~ v] off it.
IntMatrix m_matrix_combinatorial(const Graph& g);
/// For cubic g both forms are computed and compared (ContractViolation on a
/// mismatch); otherwise the product form is returned.
IntMatrix m_matrix(const Graph& g);

/// Rows and columns of M(g) for the listed vertices, in that order. Labels
/// must be valid and distinct.
IntMatrix m_submatrix(const Graph& g, const VertexSet& t);

/// Submatrix of M for a partial configuration inside an unseen cubic host:
/// the diagonal is 3 whatever the degrees in `config`, off-diagonal entries
/// come from adjacency and common neighbours present in `config`.
IntMatrix configuration_submatrix(const Graph& config, const VertexSet& t);

struct GapVerdict {
  std::string graph6;
  Interval interval;
  std::size_t eigenvalue_count;
  bool has_gap;
};

/// Eigenvalues of A(g) in iv counted with multiplicity, exactly.
GapVerdict gap_check(const Graph& g, const Interval& iv);

/// All eigenvalues >= 0, decided from the signs of the characteristic
/// polynomial's coefficients. Throws std::invalid_argument when m is not symmetric.
bool is_psd(const IntMatrix& m);

struct MinorWitness {
  VertexSet subset;
  Integer determinant;
  IntMatrix submatrix;
  std::optional<Interval> implied_interval;
};

/// First subset T (by size, then lexicographically) with det(M_TT) < 0 and
/// |T| <= max_size. Subsets whose rows of M split into independent blocks are
/// skipped, since their determinant is a product of smaller principal minors,
/// all of which are already known to be nonnegative.
std::optional<MinorWitness> find_negative_witness(const Graph& g, std::size_t max_size);
/// Same search over the principal submatrices of an arbitrary symmetric matrix.
std::optional<MinorWitness> find_negative_witness(const IntMatrix& m, std::size_t max_size);

/// For a principal submatrix of some A(A+2I) with least eigenvalue tau >= -1,
/// returns rational outer bounds of [-1 - sqrt(1+tau), -1 + sqrt(1+tau)],
/// each bound within about `precision` of the exact value. Throws
/// ContractViolation if tau < -1 and std::invalid_argument if msub is not symmetric.
Interval implied_interval_from_submatrix(const IntMatrix& msub, const Rational& precision);

struct LemmaCase {
  std::string id;
  Integer expected_det;
  /// The matrix as printed.
  IntMatrix literal;
  /// A configuration realising it and the subset T in printed order.
  Graph host;
  VertexSet subset;
};

struct ReplayRow {
  std::string id;
  Integer expected_det;
  Integer computed_det;
  Integer host_det;
  bool match;
};

std::vector<LemmaCase> lemma_cases();
std::vector<ReplayRow> lemma_replay();

}  // namespace cubicgap
