#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cubicgap/rational.hpp"

namespace cubicgap {

/// Dense polynomial with arbitrary-precision integer coefficients, lowest
/// degree first. Trailing zero coefficients are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  /// x - r for integer r.
  static IntPolynomial linear_root(const Integer& r);
  /// den*x - num, the primitive linear factor vanishing at a rational.
  static IntPolynomial linear_root(const Rational& r);

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }
  /// Coefficient of x^k; zero beyond the degree.
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const Integer& leading() const;

  /// Sign of the value at x, without forming the rational value.
  int sign_at(const Rational& x) const;
  Integer eval(const Integer& x) const;

  IntPolynomial derivative() const;
  /// gcd of the coefficients, sign of the leading coefficient; 0 for the zero polynomial.
  Integer content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial operator-() const;
  IntPolynomial& operator*=(const Integer& k);
  /// p(q(x)).
  IntPolynomial compose(const IntPolynomial& q) const;
  IntPolynomial pow(unsigned e) const;
  /// Divides every coefficient by k; throws InexactDivisionError if any is not divisible.
  IntPolynomial divide_coefficients(const Integer& k) const;

  std::string to_string() const;

  bool operator==(const IntPolynomial&) const = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& k, const IntPolynomial& p);

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient p / q when q divides p in Z[x]. Throws std::invalid_argument for a
/// zero divisor and InexactDivisionError when the remainder is nonzero or the
/// quotient would need non-integer coefficients.
IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q);

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

/// Exact value p(x).
Rational eval_at_rational(const IntPolynomial& p, const Rational& x);

/// Number of times (den*x - num) divides p, by repeated exact division.
unsigned root_multiplicity(const IntPolynomial& p, const Rational& r);

/// Chebyshev polynomial of the first kind, T_n(cos t) = cos(nt).
IntPolynomial chebyshev_t(unsigned n);

}  // namespace cubicgap
