#include <hexanimals/poly.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace hexanimals {

namespace {

const BigInt kZero{0};

// A 61-bit prime; arithmetic below stays inside unsigned __int128.
constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

std::uint64_t reduce(const BigInt& v) {
  BigInt r = v % kModulus;
  if (r < 0) r += kModulus;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kModulus);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd(a, b) over GF(p).
int modular_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), kModulus - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t factor = mul_mod(a.back(), inv);
      const std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::uint64_t sub = mul_mod(factor, b[i]);
        a[off + i] = a[off + i] >= sub ? a[off + i] - sub : a[off + i] + kModulus - sub;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True when a and b are certainly coprime up to content. Requires the
// leading coefficients to survive reduction, which keeps the modular degree
// an upper bound for the true one.
bool certainly_coprime(const Poly& a, const Poly& b) {
  if (reduce(a.leading()) == 0 || reduce(b.leading()) == 0) return false;
  ModPoly ma, mb;
  ma.reserve(a.coeffs().size());
  mb.reserve(b.coeffs().size());
  for (const auto& c : a.coeffs()) ma.push_back(reduce(c));
  for (const auto& c : b.coeffs()) mb.push_back(reduce(c));
  return modular_gcd_degree(std::move(ma), std::move(mb)) == 0;
}

}  // namespace

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly::Poly(const BigInt& c) : coeffs_{c} { trim(); }

Poly Poly::constant(const BigInt& c) { return Poly(c); }

Poly Poly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

const BigInt& Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& Poly::leading() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly operator-(Poly a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

Poly shift(const Poly& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<BigInt> v(k);
  v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly(std::move(v));
}

BigInt content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  const BigInt c = content(p);
  return c == 1 ? p : divide_exact(p, c);
}

Poly divide_exact(const Poly& a, const BigInt& c) {
  if (c == 0) throw std::invalid_argument("division by the zero constant");
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : out) {
    BigInt q, r;
    boost::multiprecision::divide_qr(v, c, q, r);
    if (r != 0) throw std::domain_error("inexact division by an integer");
    v = std::move(q);
  }
  return Poly(std::move(out));
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (b.degree() == 0) return divide_exact(a, b.leading());
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t bn = b.coeffs().size();
  std::vector<BigInt> quot(rem.size() - bn + 1);
  const BigInt& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + bn - 1];
    if (top == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) throw std::domain_error("inexact polynomial division");
    for (std::size_t i = 0; i < bn; ++i) rem[k + i] -= q * b.coeffs()[i];
    quot[k] = std::move(q);
  }
  for (std::size_t i = 0; i + 1 < bn && i < rem.size(); ++i) {
    if (rem[i] != 0) throw std::domain_error("inexact polynomial division");
  }
  return Poly(std::move(quot));
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero");
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t bn = b.coeffs().size();
  const BigInt& lead = b.leading();
  while (rem.size() >= bn) {
    const BigInt top = rem.back();
    const std::size_t off = rem.size() - bn;
    for (auto& v : rem) v *= lead;
    for (std::size_t i = 0; i < bn; ++i) rem[off + i] -= top * b.coeffs()[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return Poly(std::move(rem));
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Poly x = primitive_part(a);
  Poly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  if (!y.is_zero() && y.degree() > 0 && certainly_coprime(x, y)) return Poly{1};
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = Poly{1};
      break;
    }
    Poly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (x.leading() < 0) x = -x;
  return x;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const BigInt& c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (d == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

BigInt parse_decimal(const std::string& text) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("not a decimal integer: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace hexanimals
