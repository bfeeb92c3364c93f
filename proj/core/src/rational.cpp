#include "cubicgap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cubicgap {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer z(std::string(digits), 10);
  return negative ? Integer(-z) : z;
}

Integer pow10(unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  // Unicode minus sign is accepted for convenience.
  std::string normalized;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      normalized.push_back('-');
      i += 2;
    } else {
      normalized.push_back(text[i]);
    }
  }
  std::string_view s = normalized;

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    return make_rational(num, den);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    Integer ez = parse_integer(exp_text);
    if (!ez.fits_slong_p() || abs(ez) > 100000) throw std::invalid_argument("exponent out of range");
    exponent = ez.get_si();
    s = s.substr(0, e);
  }

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  Integer mantissa(std::string(int_part) + std::string(frac_part), 10);
  if (negative) mantissa = -mantissa;
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) return Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  return make_rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str(10);
  return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

Interval::Interval(Rational lo, Rational hi, bool lo_open, bool hi_open)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open) {
  lo_.canonicalize();
  hi_.canonicalize();
  if (lo_ > hi_) throw std::invalid_argument("interval lower endpoint exceeds upper endpoint");
  if (lo_ == hi_ && (lo_open_ || hi_open_)) {
    throw std::invalid_argument("degenerate interval must be closed at both ends");
  }
}

bool Interval::contains(const Rational& x) const {
  const bool above = lo_open_ ? x > lo_ : x >= lo_;
  const bool below = hi_open_ ? x < hi_ : x <= hi_;
  return above && below;
}

bool Interval::encloses(const Interval& inner) const {
  const bool lo_ok = inner.lo_ > lo_ || (inner.lo_ == lo_ && (!lo_open_ || inner.lo_open_));
  const bool hi_ok = inner.hi_ < hi_ || (inner.hi_ == hi_ && (!hi_open_ || inner.hi_open_));
  return lo_ok && hi_ok;
}

std::string Interval::to_string() const {
  return std::string(lo_open_ ? "(" : "[") + cubicgap::to_string(lo_) + ", " + cubicgap::to_string(hi_) +
         (hi_open_ ? ")" : "]");
}

}  // namespace cubicgap
