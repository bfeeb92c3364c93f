#pragma once

#include <utility>
#include <vector>

#include "cubicgap/polynomial.hpp"
#include "cubicgap/rational.hpp"

namespace cubicgap {

struct SquareFreeFactor {
  IntPolynomial factor;
  unsigned multiplicity;
};

/// Yun's algorithm: p = c * prod factor_i^mult_i with pairwise coprime,
/// square-free, primitive factors of positive leading coefficient, ordered by
/// increasing multiplicity. Throws std::domain_error for the zero polynomial.
std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Signed remainder sequence of a square-free polynomial and its derivative,
/// each term divided by its positive content.
class SturmChain {
 public:
  /// The square-free part of p is taken first. Throws std::domain_error for p = 0.
  explicit SturmChain(const IntPolynomial& p);

  const std::vector<IntPolynomial>& terms() const noexcept { return chain_; }
  const IntPolynomial& base() const { return chain_.front(); }

  /// Sign changes of the chain evaluated at x (zeros skipped).
  std::size_t variations(const Rational& x) const;
  /// Distinct roots in the half-open interval (a, b]; requires a <= b.
  std::size_t count_half_open(const Rational& a, const Rational& b) const;
  /// Distinct roots in iv, honouring its open/closed ends.
  std::size_t count(const Interval& iv) const;

 private:
  std::vector<IntPolynomial> chain_;
};

enum class Multiplicity { Distinct, Counted };

/// Counts real roots of a fixed polynomial in many intervals; the
/// square-free decomposition and Sturm chains are built once.
class RootCounter {
 public:
  explicit RootCounter(const IntPolynomial& p);
  std::size_t count(const Interval& iv, Multiplicity mode) const;

 private:
  SturmChain distinct_;
  std::vector<std::pair<SturmChain, unsigned>> factors_;
};

std::size_t count_roots_in(const IntPolynomial& p, const Interval& iv, bool with_multiplicity);

/// Power of two strictly above every root's absolute value.
Rational root_bound(const IntPolynomial& p);

/// Interval of width <= width holding the smallest real root and no other
/// root. When bisection lands exactly on that root the result is the
/// degenerate [r, r]. Throws std::domain_error if p has no real root.
Interval smallest_root_bracket(const IntPolynomial& p, const Rational& width);

/// Rational bounds lo <= sqrt(x) <= hi with hi - lo <= precision; both equal
/// the exact root when x is the square of a rational. Requires x >= 0.
std::pair<Rational, Rational> sqrt_bounds(const Rational& x, const Rational& precision);

}  // namespace cubicgap
