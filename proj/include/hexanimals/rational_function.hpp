#pragma once

#include <hexanimals/poly.hpp>

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <vector>

namespace hexanimals {

/// Quotient of integer polynomials in lowest terms.
///
/// Construction normalizes: the primitive gcd of numerator and denominator is
/// cancelled, then the common integer content, and finally the sign so the
/// denominator's leading coefficient is positive. Two equal values therefore
/// have identical fields whenever the denominator ends up primitive, which is
/// always the case for generating functions (den(0) = +-1).
class RatFn {
 public:
  RatFn() : den_{1} {}
  RatFn(Poly num);  // NOLINT(google-explicit-constructor)
  RatFn(Poly num, Poly den);
  RatFn(long c) : RatFn(Poly{c}) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  RatFn& operator+=(const RatFn& rhs);
  RatFn& operator-=(const RatFn& rhs);
  RatFn& operator*=(const RatFn& rhs);
  RatFn& operator/=(const RatFn& rhs);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend RatFn operator-(const RatFn& a);

  friend bool operator==(const RatFn& a, const RatFn& b) = default;

 private:
  struct Normalized {};
  RatFn(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Value-preserving normalization; throws std::invalid_argument on a zero
/// denominator.
inline RatFn ratfn_normalize(Poly num, Poly den) { return {std::move(num), std::move(den)}; }

/// Equality by cross-multiplication, independent of the stored form.
bool equivalent(const RatFn& a, const RatFn& b);

/// Maclaurin coefficients of z^0..z^terms. Throws std::domain_error when the
/// denominator vanishes at 0 or a coefficient is not an integer.
std::vector<BigInt> ratfn_series(const RatFn& r, std::size_t terms);

/// "num" or "(num)/(den)" using the Poly rendering.
std::string to_string(const RatFn& r, const std::string& var = "z");

using RatFnMatrix = Eigen::Matrix<RatFn, Eigen::Dynamic, Eigen::Dynamic>;
using RatFnVector = Eigen::Matrix<RatFn, Eigen::Dynamic, 1>;

/// Unique solution of m * x = b over the rational-function field.
///
/// Each row is cleared of denominators and the resulting polynomial system
/// is solved by fraction-free elimination. Throws std::invalid_argument on a
/// dimension mismatch and SingularSystem when m is singular.
RatFnVector solve_linear_system(const RatFnMatrix& m, const RatFnVector& b);

}  // namespace hexanimals

namespace Eigen {

template <>
struct NumTraits<hexanimals::Poly> : GenericNumTraits<hexanimals::Poly> {
  using Real = hexanimals::Poly;
  using NonInteger = hexanimals::Poly;
  using Nested = hexanimals::Poly;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
};

template <>
struct NumTraits<hexanimals::RatFn> : GenericNumTraits<hexanimals::RatFn> {
  using Real = hexanimals::RatFn;
  using NonInteger = hexanimals::RatFn;
  using Nested = hexanimals::RatFn;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 32,
    MulCost = 128
  };
};

template <>
struct NumTraits<hexanimals::BigInt> : GenericNumTraits<hexanimals::BigInt> {
  using Real = hexanimals::BigInt;
  using NonInteger = hexanimals::BigInt;
  using Nested = hexanimals::BigInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};

}  // namespace Eigen
