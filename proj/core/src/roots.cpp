#include "cubicgap/roots.hpp"

#include <stdexcept>

namespace cubicgap {

namespace {

IntPolynomial positive_leading(IntPolynomial p) { return p.leading() < 0 ? -p : p; }

}  // namespace

std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square_free_decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  const IntPolynomial f = positive_leading(p.primitive_part());
  const IntPolynomial df = f.derivative();
  const IntPolynomial a0 = gcd(f, df);
  IntPolynomial b = exact_divide(f, a0);
  IntPolynomial c = exact_divide(df, a0);
  IntPolynomial d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const IntPolynomial a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
  }
  return out;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square_free_part of the zero polynomial");
  if (p.degree() == 0) return IntPolynomial{1};
  return positive_leading(exact_divide(p.primitive_part(), gcd(p, p.derivative())));
}

SturmChain::SturmChain(const IntPolynomial& p) {
  chain_.push_back(square_free_part(p));
  if (chain_.back().degree() <= 0) return;
  chain_.push_back(chain_.back().derivative().primitive_part());
  while (true) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    if (b.degree() == 0) break;
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;  // cannot happen for square-free input
    // prem = lc(b)^(delta+1) * rem; the next term must be a positive multiple of -rem.
    const long delta = a.degree() - b.degree();
    const bool flips = b.leading() < 0 && (delta + 1) % 2 == 1;
    Integer content = abs(r.content());
    r = r.divide_coefficients(flips ? content : Integer(-content));
    chain_.push_back(std::move(r));
  }
}

std::size_t SturmChain::variations(const Rational& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmChain::count_half_open(const Rational& a, const Rational& b) const {
  if (a > b) throw std::invalid_argument("count_half_open: a > b");
  const std::size_t va = variations(a);
  const std::size_t vb = variations(b);
  return va - vb;
}

std::size_t SturmChain::count(const Interval& iv) const {
  const IntPolynomial& p = base();
  if (iv.is_degenerate()) return p.sign_at(iv.lo()) == 0 ? 1 : 0;
  std::size_t n = count_half_open(iv.lo(), iv.hi());
  if (!iv.lo_open() && p.sign_at(iv.lo()) == 0) ++n;
  if (iv.hi_open() && p.sign_at(iv.hi()) == 0) --n;
  return n;
}

RootCounter::RootCounter(const IntPolynomial& p) : distinct_(p) {
  for (auto& f : square_free_decomposition(p)) factors_.emplace_back(SturmChain(f.factor), f.multiplicity);
}

std::size_t RootCounter::count(const Interval& iv, Multiplicity mode) const {
  if (mode == Multiplicity::Distinct) return distinct_.count(iv);
  std::size_t total = 0;
  for (const auto& [chain, mult] : factors_) total += chain.count(iv) * mult;
  return total;
}

std::size_t count_roots_in(const IntPolynomial& p, const Interval& iv, bool with_multiplicity) {
  if (p.is_zero()) throw std::domain_error("count_roots_in: zero polynomial");
  if (!with_multiplicity) return SturmChain(p).count(iv);
  return RootCounter(p).count(iv, Multiplicity::Counted);
}

Rational root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("root_bound of the zero polynomial");
  // Cauchy: every root satisfies |z| < 1 + max|a_i / a_n|.
  Rational ratio = 0;
  const Integer lead = abs(p.leading());
  for (long i = 0; i < p.degree(); ++i) {
    Rational r = make_rational(abs(p.coeff(static_cast<std::size_t>(i))), lead);
    if (r > ratio) ratio = r;
  }
  Rational bound = 1;
  while (bound < ratio + 1) bound *= 2;
  if (bound == ratio + 1) bound *= 2;
  return bound;
}

Interval smallest_root_bracket(const IntPolynomial& p, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("smallest_root_bracket: width must be positive");
  const SturmChain chain(p);
  const IntPolynomial& s = chain.base();
  const Rational bound = root_bound(s);
  Rational lo = -bound;
  Rational hi = bound;
  if (chain.count_half_open(lo, hi) == 0) throw std::domain_error("smallest_root_bracket: no real roots");
  // Invariant: no root <= lo, and the smallest root lies in (lo, hi].
  while (true) {
    if (hi - lo <= width && chain.count_half_open(lo, hi) == 1) {
      if (s.sign_at(hi) == 0) return Interval::point(hi);
      return Interval::open(lo, hi);
    }
    Rational mid = (lo + hi) / 2;
    const std::size_t below = chain.count_half_open(lo, mid);
    if (below == 0) {
      lo = mid;
    } else if (below == 1 && s.sign_at(mid) == 0) {
      return Interval::point(mid);
    } else {
      hi = mid;
    }
  }
}

std::pair<Rational, Rational> sqrt_bounds(const Rational& x, const Rational& precision) {
  if (x < 0) throw std::domain_error("sqrt_bounds of a negative number");
  if (precision <= 0) throw std::invalid_argument("sqrt_bounds: precision must be positive");
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    Integer a;
    Integer b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    const Rational r = make_rational(a, b);
    return {r, r};
  }
  // floor(sqrt(x * 4^k)) / 2^k and that plus 2^-k bracket sqrt(x).
  unsigned long k = 0;
  Rational step = 1;
  while (step > precision) {
    step /= 2;
    ++k;
  }
  Integer scaled = (num << (2 * k)) / den;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  const Integer scale = Integer(1) << k;
  return {make_rational(root, scale), make_rational(root + 1, scale)};
}

}  // namespace cubicgap
