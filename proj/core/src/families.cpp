#include "cubicgap/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cubicgap/canonical.hpp"
#include "cubicgap/errors.hpp"
#include "cubicgap/matrix.hpp"
#include "cubicgap/named_graphs.hpp"
#include "cubicgap/roots.hpp"

namespace cubicgap {

Graph build_xn(std::size_t n) {
  if (n < 2) throw std::invalid_argument("X(n) needs n >= 2 gadgets");
  if (6 * n > kMaxVertices) throw std::invalid_argument("X(n) too large");
  static const Edge kGadget[] = {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
  Graph g(6 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex base = 6 * k;
    const Vertex next = 6 * ((k + 1) % n);
    for (const auto& [a, b] : kGadget) g.add_edge(base + a, base + b);
    g.add_edge(base + 4, next + 0);
    g.add_edge(base + 5, next + 1);
  }
  if (!is_cubic(g) || !is_connected(g)) throw ContractViolation("X(n) construction is not cubic and connected");
  return g;
}

IntPolynomial xn_linear_factors(std::size_t n) {
  const auto e = static_cast<unsigned>(n);
  return IntPolynomial::monomial(1, n) * IntPolynomial{-1, 1}.pow(e) * IntPolynomial{2, 1}.pow(e);
}

IntPolynomial xn_cubic_product(std::size_t n) {
  if (n < 1) throw std::invalid_argument("xn_cubic_product needs n >= 1");
  // 4^n T_n(y / 4) has integer coefficients c_k 4^(n-k); the result is
  // (4^n T_n(y / 4) - 4^n) / 2^(n-1).
  const IntPolynomial t = chebyshev_t(static_cast<unsigned>(n));
  std::vector<Integer> scaled(t.coefficients());
  for (std::size_t k = 0; k < scaled.size(); ++k) {
    Integer f;
    mpz_ui_pow_ui(f.get_mpz_t(), 4, n - k);
    scaled[k] *= f;
  }
  Integer four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  Integer two_n1;
  mpz_ui_pow_ui(two_n1.get_mpz_t(), 2, n - 1);
  const IntPolynomial y{4, -6, -1, 1};
  const IntPolynomial s = IntPolynomial(scaled).compose(y) - IntPolynomial::constant(four_n);
  return s.divide_coefficients(two_n1);
}

bool xn_charpoly_identity_check(std::size_t n) {
  const IntPolynomial p = char_poly(IntMatrix::adjacency(build_xn(n)));
  IntPolynomial q;
  try {
    q = exact_divide(p, xn_linear_factors(n));
  } catch (const InexactDivisionError&) {
    return false;
  }
  return q == xn_cubic_product(n);
}

void validate_xn_closed_form() {
  static std::once_flag once;
  std::call_once(once, [] {
    for (std::size_t n = 2; n <= 12; ++n) {
      if (!xn_charpoly_identity_check(n)) {
        throw ContractViolation("closed form for X(" + std::to_string(n) + ") disagrees with its char poly");
      }
    }
  });
}

namespace {

// Removes every factor f from p.
IntPolynomial strip_factor(IntPolynomial p, const IntPolynomial& f) {
  while (true) {
    try {
      p = exact_divide(p, f);
    } catch (const InexactDivisionError&) {
      return p;
    }
  }
}

// Bracket [lo, hi] around the root of `quadratic` picked by `largest`, narrowed
// until `r` has no root inside. r must not vanish at that root.
Interval isolate_from(const IntPolynomial& quadratic, bool largest, const IntPolynomial& r) {
  Rational width = make_rational(1, 1000000000);
  const IntPolynomial mirrored(std::vector<Integer>{quadratic.coeff(0), -quadratic.coeff(1), quadratic.coeff(2)});
  while (true) {
    Interval b = smallest_root_bracket(largest ? mirrored : quadratic, width);
    Interval closed = largest ? Interval::closed(-b.hi(), -b.lo()) : Interval::closed(b.lo(), b.hi());
    if (count_roots_in(r, closed, false) == 0) return closed;
    width /= 2;
  }
}

}  // namespace

XnGapReport xn_gap_report(std::size_t n) {
  if (n < 2) throw std::invalid_argument("X(n) needs n >= 2 gadgets");
  validate_xn_closed_form();
  // The linear factors only have roots 0, 1 and -2, none inside the three
  // open intervals, so only the cubic product matters.
  const IntPolynomial q = xn_cubic_product(n);
  const IntPolynomial quadratic{-4, 1, 1};  // roots (-1 +- sqrt17) / 2
  const IntPolynomial r = strip_factor(q, quadratic);
  const Interval low = isolate_from(quadratic, false, r);
  const Interval high = isolate_from(quadratic, true, r);

  XnGapReport report{n, {}, true};
  auto add = [&](std::string label, const IntPolynomial& p, Interval iv) {
    const std::size_t c = count_roots_in(p, iv, true);
    report.intervals.push_back(GapIntervalCount{std::move(label), std::move(iv), c});
    report.all_clear = report.all_clear && c == 0;
  };
  add("(-2, 0)", q, Interval::open(-2, 0));
  // Roots of r in (-3, alpha) all lie in (-3, low.lo]; the quadratic factor
  // contributes alpha itself, which the open interval excludes.
  add("(-3, (-1-sqrt17)/2)", r, Interval(-3, low.lo(), true, false));
  add("((-1+sqrt17)/2, 2)", r, Interval(high.hi(), 2, false, true));
  return report;
}

bool xn_gap_check(std::size_t n) { return xn_gap_report(n).all_clear; }

std::string to_string(Sporadic s) {
  switch (s) {
    case Sporadic::Prism:
      return "PRISM";
    case Sporadic::K33:
      return "K33";
    case Sporadic::Petersen:
      return "PETERSEN";
    case Sporadic::Dodecahedron:
      return "DODECAHEDRON";
    case Sporadic::Tutte8:
      break;
  }
  return "TUTTE8";
}

std::vector<Sporadic> all_sporadics() {
  return {Sporadic::Prism, Sporadic::K33, Sporadic::Petersen, Sporadic::Dodecahedron, Sporadic::Tutte8};
}

Sporadic parse_sporadic(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (Sporadic s : all_sporadics()) {
    if (to_string(s) == upper) return s;
  }
  throw std::invalid_argument("unknown sporadic graph '" + name + "'");
}

std::string Eigenvalue::to_string() const {
  if (kind == Kind::Integer) return std::to_string(a);
  std::string root = "sqrt" + std::to_string(b);
  if (a == 1) return root;
  if (a == -1) return "-" + root;
  return std::to_string(a) + "*" + root;
}

std::size_t SpectrumRecord::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

IntPolynomial SpectrumRecord::polynomial() const {
  IntPolynomial p{1};
  for (const auto& e : entries) {
    if (e.value.kind == Eigenvalue::Kind::Integer) {
      p = p * IntPolynomial::linear_root(Integer(e.value.a)).pow(e.multiplicity);
      continue;
    }
    if (e.value.a <= 0) continue;
    const bool paired = std::any_of(entries.begin(), entries.end(), [&](const SpectrumEntry& o) {
      return o.value == Eigenvalue{Eigenvalue::Kind::Sqrt, -e.value.a, e.value.b} && o.multiplicity == e.multiplicity;
    });
    if (!paired) throw ContractViolation("square root eigenvalue " + e.value.to_string() + " has no conjugate");
    const Integer c = Integer(e.value.a) * e.value.a * e.value.b;
    p = p * IntPolynomial(std::vector<Integer>{Integer(-c), Integer(0), Integer(1)}).pow(e.multiplicity);
  }
  for (const auto& e : entries) {
    if (e.value.kind == Eigenvalue::Kind::Sqrt && e.value.a < 0) {
      const bool paired = std::any_of(entries.begin(), entries.end(), [&](const SpectrumEntry& o) {
        return o.value == Eigenvalue{Eigenvalue::Kind::Sqrt, -e.value.a, e.value.b};
      });
      if (!paired) throw ContractViolation("square root eigenvalue " + e.value.to_string() + " has no conjugate");
    }
  }
  return p;
}

namespace {

SpectrumEntry integer(long a, unsigned m) { return {{Eigenvalue::Kind::Integer, a, 0}, m}; }
SpectrumEntry root(long a, long b, unsigned m) { return {{Eigenvalue::Kind::Sqrt, a, b}, m}; }

SporadicGraph build_sporadic(Sporadic s) {
  SporadicGraph out;
  out.spectrum.name = to_string(s);
  switch (s) {
    case Sporadic::Prism:
      out.graph = prism_graph();
      out.spectrum.entries = {integer(3, 1), integer(1, 1), integer(0, 2), integer(-2, 2)};
      break;
    case Sporadic::K33:
      out.graph = complete_bipartite(3, 3);
      out.spectrum.entries = {integer(3, 1), integer(0, 4), integer(-3, 1)};
      break;
    case Sporadic::Petersen:
      out.graph = petersen_graph();
      out.spectrum.entries = {integer(3, 1), integer(1, 5), integer(-2, 4)};
      break;
    case Sporadic::Dodecahedron:
      out.graph = dodecahedron_graph();
      out.spectrum.entries = {integer(3, 1), root(1, 5, 3),  integer(1, 5),
                              integer(0, 4), integer(-2, 4), root(-1, 5, 3)};
      break;
    case Sporadic::Tutte8:
      out.graph = tutte_eight_cage();
      out.spectrum.entries = {integer(3, 1), integer(2, 9), integer(0, 10), integer(-2, 9), integer(-3, 1)};
      break;
  }
  if (out.spectrum.total_multiplicity() != out.graph.order()) {
    throw ContractViolation(out.spectrum.name + " spectrum has the wrong number of eigenvalues");
  }
  const IntPolynomial p = char_poly(IntMatrix::adjacency(out.graph));
  if (exact_divide(p, out.spectrum.polynomial()) != IntPolynomial{1}) {
    throw ContractViolation(out.spectrum.name + " spectrum does not match its characteristic polynomial");
  }
  return out;
}

}  // namespace

const SporadicGraph& sporadic(Sporadic s) {
  static std::mutex mutex;
  static std::map<Sporadic, SporadicGraph> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, build_sporadic(s)).first;
  return it->second;
}

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::Sporadic:
      return cubicgap::to_string(sporadic);
    case Kind::XN:
      return "XN(" + std::to_string(n) + ")";
    case Kind::NotInList:
      break;
  }
  return "NOT_IN_LIST";
}

Classification classify(const Graph& g) {
  if (!is_cubic(g)) throw std::invalid_argument("classify requires a cubic graph");
  if (!is_connected(g)) throw std::invalid_argument("classify requires a connected graph");
  const std::size_t n = g.order();
  const CanonicalForm form = canonical_form(g);
  for (Sporadic s : all_sporadics()) {
    const Graph& h = sporadic(s).graph;
    if (h.order() == n && canonical_form(h) == form) return {Classification::Kind::Sporadic, s, 0};
  }
  if (n % 6 == 0 && n >= 12 && canonical_form(build_xn(n / 6)) == form) {
    return {Classification::Kind::XN, Sporadic::Prism, n / 6};
  }
  return {Classification::Kind::NotInList, Sporadic::Prism, 0};
}

}  // namespace cubicgap
