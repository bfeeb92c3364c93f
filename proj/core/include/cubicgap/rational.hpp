#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubicgap {

using Integer = mpz_class;
/// Always kept canonical: positive denominator, numerator and denominator coprime.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p", "p/q", and finite decimals such as "-2.5616" or "1e-6";
/// the value is converted exactly (no floating point). Throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Interval with rational endpoints and independent open/closed flags.
class Interval {
 public:
  Interval(Rational lo, Rational hi, bool lo_open, bool hi_open);

  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval point(const Rational& r) { return closed(r, r); }

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  bool lo_open() const noexcept { return lo_open_; }
  bool hi_open() const noexcept { return hi_open_; }
  bool is_degenerate() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }

  bool contains(const Rational& x) const;
  /// True when every point of `inner` is a point of this interval.
  bool encloses(const Interval& inner) const;

  std::string to_string() const;

  bool operator==(const Interval&) const = default;

 private:
  Rational lo_;
  Rational hi_;
  bool lo_open_;
  bool hi_open_;
};

}  // namespace cubicgap
