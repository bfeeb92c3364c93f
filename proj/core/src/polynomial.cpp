#include "cubicgap/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cubicgap/errors.hpp"

namespace cubicgap {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_root(const Integer& r) { return IntPolynomial(std::vector<Integer>{-r, 1}); }

IntPolynomial IntPolynomial::linear_root(const Rational& r) {
  return IntPolynomial(std::vector<Integer>{-r.get_num(), r.get_den()});
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // den^d * p(num/den) = sum c_i num^i den^(d-i), Horner in both.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = c_.back();
  Integer den_pow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + c_[i] * den_pow;
  }
  return sgn(acc);
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  if (c_.empty()) return 0;
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return c_.back() < 0 ? Integer(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  return divide_coefficients(content());
}

IntPolynomial IntPolynomial::divide_coefficients(const Integer& k) const {
  if (k == 0) throw std::invalid_argument("division of coefficients by zero");
  std::vector<Integer> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), k.get_mpz_t())) {
      throw InexactDivisionError("coefficient not divisible by " + k.get_str());
    }
    mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), k.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& q) const {
  IntPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& k, const IntPolynomial& p) {
  IntPolynomial out = p;
  out *= k;
  return out;
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_divide: division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) {
    throw InexactDivisionError("exact_divide: divisor degree " + std::to_string(q.degree()) +
                               " exceeds dividend degree " + std::to_string(p.degree()));
  }
  std::vector<Integer> rem = p.coefficients();
  const auto& qc = q.coefficients();
  const std::size_t dq = qc.size() - 1;
  const Integer& lead = qc.back();
  std::vector<Integer> quot(rem.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InexactDivisionError("exact_divide: quotient has non-integer coefficients");
    }
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j) mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), qc[j].get_mpz_t());
  }
  for (const auto& r : rem) {
    if (r != 0) throw InexactDivisionError("exact_divide: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const Integer& lead = bc.back();
  for (std::size_t top = r.size(); top-- > db;) {
    // r <- lead*r - r_top * x^(top-db) * b
    Integer t = r[top];
    for (auto& c : r) c *= lead;
    if (t != 0) {
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[top - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  r.resize(db);
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.degree() < b.degree()) std::swap(a, b);
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

Rational eval_at_rational(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

unsigned root_multiplicity(const IntPolynomial& p, const Rational& r) {
  if (p.is_zero()) throw std::domain_error("root_multiplicity of the zero polynomial");
  const IntPolynomial factor = IntPolynomial::linear_root(r);
  IntPolynomial rest = p;
  unsigned m = 0;
  while (rest.degree() >= 1) {
    try {
      rest = exact_divide(rest, factor);
    } catch (const InexactDivisionError&) {
      break;
    }
    ++m;
  }
  return m;
}

IntPolynomial chebyshev_t(unsigned n) {
  IntPolynomial prev{1};
  if (n == 0) return prev;
  IntPolynomial cur{0, 1};
  const IntPolynomial two_x{0, 2};
  for (unsigned k = 1; k < n; ++k) {
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace cubicgap
