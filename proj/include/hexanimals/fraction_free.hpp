#pragma once

#include <hexanimals/big_int.hpp>
#include <hexanimals/poly.hpp>

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace hexanimals {

/// Raised by the exact solvers when the coefficient matrix is singular.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solution of an integral system as numerators over one common denominator:
/// x_i = numerators(i) / denominator.
template <typename Scalar>
struct FractionFreeSolution {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> numerators;
  Scalar denominator;
};

namespace ring {

inline bool is_zero(const BigInt& v) { return v == 0; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

inline BigInt exact_quotient(const BigInt& a, const BigInt& b) { return a / b; }
inline Poly exact_quotient(const Poly& a, const Poly& b) { return divide_exact(a, b); }

// Smaller is a better pivot.
inline std::size_t pivot_cost(const BigInt& v) { return boost::multiprecision::msb(abs(v)); }
inline std::size_t pivot_cost(const Poly& p) {
  std::size_t bits = 0;
  for (const auto& c : p.coeffs()) {
    if (c != 0) bits += boost::multiprecision::msb(abs(c)) + 1;
  }
  return static_cast<std::size_t>(p.degree()) * 4096 + bits;
}

}  // namespace ring

/// Bareiss fraction-free elimination over an integral domain (integers or
/// integer polynomials).
///
/// Every intermediate entry is a minor of the augmented matrix, so the
/// divisions by the previous pivot are exact. The returned denominator is the
/// determinant of the row-permuted matrix.
template <typename Derived, typename RhsDerived>
FractionFreeSolution<typename Derived::Scalar> bareiss_solve(const Eigen::MatrixBase<Derived>& a,
                                                             const Eigen::MatrixBase<RhsDerived>& b) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("coefficient matrix is not square");
  if (b.rows() != n || b.cols() != 1) throw std::invalid_argument("right-hand side has the wrong shape");

  FractionFreeSolution<Scalar> out;
  if (n == 0) {
    out.denominator = Scalar(1);
    return out;
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;

  Scalar previous(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    std::size_t best = 0;
    for (Eigen::Index i = k; i < n; ++i) {
      if (ring::is_zero(m(i, k))) continue;
      const std::size_t cost = ring::pivot_cost(m(i, k));
      if (pivot < 0 || cost < best) {
        pivot = i;
        best = cost;
      }
    }
    if (pivot < 0) throw SingularSystem("matrix is singular");
    if (pivot != k) m.row(k).swap(m.row(pivot));

    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j <= n; ++j) {
        Scalar t = m(k, k) * m(i, j);
        if (!ring::is_zero(m(i, k)) && !ring::is_zero(m(k, j))) t = t - m(i, k) * m(k, j);
        m(i, j) = ring::exact_quotient(t, previous);
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }

  out.denominator = m(n - 1, n - 1);
  out.numerators.resize(n);
  for (Eigen::Index i = n; i-- > 0;) {
    Scalar acc = out.denominator * m(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!ring::is_zero(m(i, j))) acc = acc - m(i, j) * out.numerators(j);
    }
    out.numerators(i) = ring::exact_quotient(acc, m(i, i));
  }
  return out;
}

}  // namespace hexanimals
