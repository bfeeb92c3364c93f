#include "cubicgap/matrix.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace cubicgap {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
  IntMatrix m(g.order());
  for (const auto& [u, v] : g.edges()) {
    m(u, v) = 1;
    m(v, u) = 1;
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::principal_submatrix(const std::vector<std::size_t>& indices) const {
  IntMatrix s(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= n_) throw std::out_of_range("principal_submatrix: index out of range");
    for (std::size_t j = 0; j < indices.size(); ++j) s(i, j) = (*this)(indices[i], indices[j]);
  }
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

IntMatrix operator*(const Integer& k, const IntMatrix& m) {
  IntMatrix c = m;
  for (auto& x : c.a_) x *= k;
  return c;
}

Integer det_exact(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) swap(a(pivot, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = a(i, j);
        x *= a(k, k);
        mpz_submul(x.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntPolynomial char_poly_berkowitz(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  // c holds det(xI - A_r) for the leading r x r block, highest degree first.
  std::vector<Integer> c{1, -m(0, 0)};
  std::vector<Integer> vec;
  std::vector<Integer> next_vec;
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Integer> q(r + 2);
    q[0] = 1;
    q[1] = -m(r, r);
    vec.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) vec[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) mpz_addmul(dot.get_mpz_t(), m(r, i).get_mpz_t(), vec[i].get_mpz_t());
      q[k + 2] = -dot;
      if (k + 1 == r) break;
      next_vec.assign(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (m(i, j) != 0) mpz_addmul(next_vec[i].get_mpz_t(), m(i, j).get_mpz_t(), vec[j].get_mpz_t());
        }
      }
      vec.swap(next_vec);
    }
    std::vector<Integer> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        mpz_addmul(next[i].get_mpz_t(), q[i - j].get_mpz_t(), c[j].get_mpz_t());
      }
    }
    c.swap(next);
  }
  return IntPolynomial(std::vector<Integer>(c.rbegin(), c.rend()));
}

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

// Montgomery arithmetic modulo an odd prime p < 2^62, R = 2^64.
class MontgomeryField {
 public:
  explicit MontgomeryField(u64 p) : p_(p) {
    u64 inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    Integer r2 = 1;
    r2 <<= 128;
    r2 %= Integer(std::to_string(p));
    r2_ = std::stoull(r2.get_str());
  }

  u64 prime() const { return p_; }
  u64 mul(u64 a, u64 b) const {
    const u128 t = static_cast<u128>(a) * b;
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 u = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return u >= p_ ? u - p_ : u;
  }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 to_mont(u64 a) const { return mul(a, r2_); }
  u64 from_mont(u64 a) const { return mul(a, 1); }
  u64 inverse(u64 a) const {
    u64 result = to_mont(1);
    u64 base = a;
    for (u64 e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

 private:
  u64 p_;
  u64 neg_inv_ = 0;
  u64 r2_ = 0;
};

// Primes just below 2^62, generated once in descending order.
u64 nth_prime(std::size_t k) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  Integer candidate = primes.empty() ? Integer(1) << 62 : Integer(std::to_string(primes.back()));
  while (primes.size() <= k) {
    do {
      candidate -= 1;
    } while (mpz_probab_prime_p(candidate.get_mpz_t(), 40) == 0);
    primes.push_back(std::stoull(candidate.get_str()));
  }
  return primes[k];
}

// Coefficients of det(xI - m) mod p, lowest degree first.
std::vector<u64> char_poly_mod(const IntMatrix& m, const MontgomeryField& f) {
  const std::size_t n = m.size();
  const u64 p = f.prime();
  std::vector<u64> h(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i * n + j] = f.to_mont(mpz_fdiv_ui(m(i, j).get_mpz_t(), p));
  }
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t piv_row = col + 1;
    std::size_t i = piv_row;
    while (i < n && at(i, col) == 0) ++i;
    if (i == n) continue;
    if (i != piv_row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(i, j), at(piv_row, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(at(j, i), at(j, piv_row));
    }
    const u64 inv = f.inverse(at(piv_row, col));
    for (std::size_t r = piv_row + 1; r < n; ++r) {
      if (at(r, col) == 0) continue;
      const u64 u = f.mul(at(r, col), inv);
      for (std::size_t j = col; j < n; ++j) at(r, j) = f.sub(at(r, j), f.mul(u, at(piv_row, j)));
      for (std::size_t j = 0; j < n; ++j) at(j, piv_row) = f.add(at(j, piv_row), f.mul(u, at(j, r)));
    }
  }

  // p_k is the characteristic polynomial of the leading k x k block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {f.to_mont(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = polys[k - 1];
    std::vector<u64> cur(k + 1, 0);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], prev[d]);
      cur[d] = f.sub(cur[d], f.mul(at(k - 1, k - 1), prev[d]));
    }
    u64 t = f.to_mont(1);
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, at(k - i, k - i - 1));
      if (t == 0) break;
      const u64 coef = f.mul(t, at(k - i - 1, k - 1));
      if (coef == 0) continue;
      const auto& lower = polys[k - i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) cur[d] = f.sub(cur[d], f.mul(coef, lower[d]));
    }
    polys[k] = std::move(cur);
  }
  std::vector<u64> out(n + 1);
  for (std::size_t d = 0; d <= n; ++d) out[d] = f.from_mont(polys[n][d]);
  return out;
}

}  // namespace

IntPolynomial char_poly_multimodular(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  // Every eigenvalue is at most the maximum absolute row sum, so each
  // coefficient is bounded by (1 + rho)^n.
  Integer rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(m(i, j));
    if (s > rho) rho = s;
  }
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), Integer(rho + 1).get_mpz_t(), n);
  const Integer needed = 2 * bound + 1;

  std::vector<Integer> coeffs(n + 1, 0);
  Integer modulus = 1;
  for (std::size_t k = 0; modulus < needed; ++k) {
    const u64 p = nth_prime(k);
    const MontgomeryField field(p);
    const auto residues = char_poly_mod(m, field);
    const Integer pz(std::to_string(p));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (std::size_t d = 0; d <= n; ++d) {
      const u64 current = mpz_fdiv_ui(coeffs[d].get_mpz_t(), p);
      Integer delta = Integer(std::to_string(residues[d])) - current;
      delta = (delta * inv) % pz;
      if (delta < 0) delta += pz;
      coeffs[d] += modulus * delta;
    }
    modulus *= pz;
  }
  const Integer half = modulus / 2;
  for (auto& c : coeffs) {
    if (c > half) c -= modulus;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly(const IntMatrix& m) {
  constexpr std::size_t kBerkowitzLimit = 40;
  return m.size() <= kBerkowitzLimit ? char_poly_berkowitz(m) : char_poly_multimodular(m);
}

}  // namespace cubicgap
