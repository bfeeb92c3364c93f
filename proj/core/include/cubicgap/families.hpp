#pragma once

#include <string>
#include <vector>

#include "cubicgap/graph.hpp"
#include "cubicgap/polynomial.hpp"
#include "cubicgap/rational.hpp"

namespace cubicgap {

/// n copies of the 6-vertex gadget joined in a ring; gadget k uses labels
/// 6k..6k+5. Throws std::invalid_argument for n < 2.
Graph build_xn(std::size_t n);

/// x^n (x - 1)^n (x + 2)^n.
IntPolynomial xn_linear_factors(std::size_t n);
/// 2^(n+1) (T_n((x^3 - x^2 - 6x + 4) / 4) - 1), the remaining factor of the
/// characteristic polynomial of X(n).
IntPolynomial xn_cubic_product(std::size_t n);

/// Exact check that char_poly(A(X(n))) = xn_linear_factors(n) * xn_cubic_product(n).
bool xn_charpoly_identity_check(std::size_t n);

/// Checks the closed form against direct characteristic polynomials for
/// n = 2..12 once per process; throws ContractViolation on a mismatch.
void validate_xn_closed_form();

struct GapIntervalCount {
  /// e.g. "(-2, 0)" or "(-3, (-1-sqrt17)/2)".
  std::string label;
  /// Rational interval actually counted; open ends lie within 1e-9 of an
  /// irrational endpoint and no root lies between them.
  Interval counted;
  std::size_t eigenvalues;
};

struct XnGapReport {
  std::size_t n;
  std::vector<GapIntervalCount> intervals;
  bool all_clear;
};

/// Counts eigenvalues of X(n) in (-2, 0), (-3, (-1-sqrt17)/2) and
/// ((-1+sqrt17)/2, 2) exactly, using the validated closed form.
XnGapReport xn_gap_report(std::size_t n);
bool xn_gap_check(std::size_t n);

enum class Sporadic { Prism, K33, Petersen, Dodecahedron, Tutte8 };
std::string to_string(Sporadic s);
/// Accepts "PRISM", "K33", "PETERSEN", "DODECAHEDRON", "TUTTE8" in any case.
Sporadic parse_sporadic(const std::string& name);
std::vector<Sporadic> all_sporadics();

/// a for kind Integer, a * sqrt(b) for kind Sqrt.
struct Eigenvalue {
  enum class Kind { Integer, Sqrt } kind;
  long a;
  long b;

  std::string to_string() const;
  bool operator==(const Eigenvalue&) const = default;
};

struct SpectrumEntry {
  Eigenvalue value;
  unsigned multiplicity;
};

struct SpectrumRecord {
  std::string name;
  std::vector<SpectrumEntry> entries;

  std::size_t total_multiplicity() const;
  /// Product of (x - a)^m over integer values and (x^2 - a^2 b)^m over each
  /// +-a sqrt(b) pair. Throws ContractViolation for an unpaired square root.
  IntPolynomial polynomial() const;
};

struct SporadicGraph {
  Graph graph;
  SpectrumRecord spectrum;
};

/// The graph and its spectrum; the spectrum is checked against the exact
/// characteristic polynomial on first use (ContractViolation on mismatch).
const SporadicGraph& sporadic(Sporadic s);

struct Classification {
  enum class Kind { Sporadic, XN, NotInList } kind;
  Sporadic sporadic;
  std::size_t n;

  /// "PETERSEN", "XN(7)", "NOT_IN_LIST".
  std::string to_string() const;
};

/// Identifies g against the five sporadic graphs and X(n). Throws
/// std::invalid_argument unless g is cubic and connected.
Classification classify(const Graph& g);

}  // namespace cubicgap
