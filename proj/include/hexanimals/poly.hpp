#pragma once

#include <hexanimals/big_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hexanimals {

/// Dense univariate polynomial over the integers.
///
/// Coefficient i multiplies z^i. The zero polynomial is the empty coefficient
/// vector and every other value has a nonzero top coefficient, so structural
/// equality is polynomial equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long> coeffs);
  /// Constant polynomial.
  explicit Poly(const BigInt& c);

  static Poly constant(const BigInt& c);
  static Poly monomial(std::size_t degree, const BigInt& c = 1);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Zero past the degree.
  [[nodiscard]] const BigInt& coeff(std::size_t i) const;
  [[nodiscard]] const BigInt& leading() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const BigInt& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigInt& c) { return a *= c; }
  friend Poly operator*(const BigInt& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Multiplies by z^k.
Poly shift(const Poly& p, std::size_t k);

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const Poly& p);
Poly primitive_part(const Poly& p);

/// Quotient of an exact division; throws std::domain_error when b does not
/// divide a over the integers, std::invalid_argument when b is zero.
Poly divide_exact(const Poly& a, const Poly& b);
Poly divide_exact(const Poly& a, const BigInt& c);

/// lc(b)^e * a mod b for the smallest e the reduction needed.
Poly pseudo_remainder(const Poly& a, const Poly& b);

/// Primitive greatest common divisor with positive leading coefficient.
/// Throws std::invalid_argument when both arguments are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Maple-style rendering in descending degree, e.g. "z^2+z-1".
std::string to_string(const Poly& p, const std::string& var = "z");

}  // namespace hexanimals
