#pragma once

#include <vector>

#include "cubicgap/graph.hpp"
#include "cubicgap/polynomial.hpp"
#include "cubicgap/rational.hpp"

namespace cubicgap {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}
  /// Throws std::invalid_argument unless `rows` is square.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix adjacency(const Graph& g);

  std::size_t size() const noexcept { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_symmetric() const;
  /// Rows and columns listed in `indices`, in that order.
  IntMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;

  bool operator==(const IntMatrix&) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& m);

 private:
  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

/// Fraction-free Gaussian elimination; exact.
Integer det_exact(const IntMatrix& m);

/// det(xI - m), monic of degree n. Small matrices use Berkowitz directly;
/// large ones use Hessenberg reduction modulo several primes and CRT, which
/// is exact because the coefficient bound from the row-sum norm is respected.
IntPolynomial char_poly(const IntMatrix& m);
IntPolynomial char_poly_berkowitz(const IntMatrix& m);
IntPolynomial char_poly_multimodular(const IntMatrix& m);

}  // namespace cubicgap
