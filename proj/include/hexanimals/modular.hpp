#pragma once

#include <hexanimals/big_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hexanimals::modular {

/// Arithmetic modulo a prime below 2^31 with Barrett reduction.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  [[nodiscard]] std::uint32_t modulus() const { return p_; }
  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] std::uint32_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Throws std::domain_error for zero.
  [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;
  [[nodiscard]] std::uint32_t from(const BigInt& v) const;
  [[nodiscard]] std::uint32_t from(std::uint64_t v) const { return static_cast<std::uint32_t>(v % p_); }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
};

/// Deterministic Miller-Rabin, valid for all 32-bit inputs.
bool is_prime(std::uint32_t n);

/// Primes in descending order starting just below 2^31.
class PrimeSequence {
 public:
  std::uint32_t next();

 private:
  std::uint32_t last_ = 0x80000000u;
};

/// Coefficients mod p in ascending degree, no trailing zeros.
using ModPoly = std::vector<std::uint32_t>;

void trim(ModPoly& p);
ModPoly mul(const PrimeField& f, const ModPoly& a, const ModPoly& b);
std::uint32_t evaluate(const PrimeField& f, const ModPoly& p, std::uint32_t x);

/// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
ModPoly interpolate(const PrimeField& f, std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys);

struct ModRational {
  ModPoly num;
  ModPoly den;  // den(0) == 1
};

/// Maximal-quotient rational reconstruction: the fraction n/d with
/// n == d * values (mod prod (z - xs[i])) and the smallest deg n + deg d,
/// accepted only when the winning quotient has degree >= min_gap and the
/// denominator does not vanish at 0.
std::optional<ModRational> reconstruct_rational(const PrimeField& f, std::span<const std::uint32_t> xs,
                                                std::span<const std::uint32_t> ys, int min_gap = 2);

/// Incremental Chinese remaindering of integer vectors with symmetric lift.
class CrtAccumulator {
 public:
  /// Residues must all be reduced modulo `p`, and the vector length must
  /// match earlier calls.
  void add(std::span<const std::uint32_t> residues, std::uint32_t p);
  [[nodiscard]] std::vector<BigInt> lifted() const;
  [[nodiscard]] const BigInt& modulus() const { return modulus_; }
  [[nodiscard]] bool empty() const { return values_.empty(); }

 private:
  BigInt modulus_ = 1;
  std::vector<BigInt> values_;
};

}  // namespace hexanimals::modular
