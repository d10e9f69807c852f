#include <hexanimals/modular.hpp>

#include <stdexcept>
#include <utility>

namespace hexanimals::modular {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= 0x80000000u) throw std::invalid_argument("field modulus must be an odd prime below 2^31");
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from(const BigInt& v) const {
  BigInt r = v % p_;
  if (r < 0) r += p_;
  return r.convert_to<std::uint32_t>();
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t small : {2u, 3u, 5u, 7u}) {
    if (n % small == 0) return n == small;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return a * b % n; };
  for (std::uint64_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = 1;
    std::uint64_t base = a;
    for (std::uint32_t e = d; e != 0; e >>= 1) {
      if (e & 1) x = mulmod(x, base);
      base = mulmod(base, base);
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t PrimeSequence::next() {
  do {
    last_ -= 1;
    if (last_ < 3) throw std::runtime_error("ran out of word-size primes");
  } while (!is_prime(last_));
  return last_;
}

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly mul(const PrimeField& f, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

std::uint32_t evaluate(const PrimeField& f, const ModPoly& p, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
  return acc;
}

namespace {

ModPoly sub(const PrimeField& f, ModPoly a, const ModPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Quotient and remainder; b must be nonzero.
std::pair<ModPoly, ModPoly> divmod(const PrimeField& f, ModPoly a, const ModPoly& b) {
  if (a.size() < b.size()) return {ModPoly{}, std::move(a)};
  const std::uint32_t lead_inv = f.inv(b.back());
  ModPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint32_t c = f.mul(a[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = f.sub(a[k + i], f.mul(c, b[i]));
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

int degree(const ModPoly& p) { return static_cast<int>(p.size()) - 1; }

bool coprime(const PrimeField& f, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    auto r = divmod(f, std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

}  // namespace

ModPoly interpolate(const PrimeField& f, std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation needs one value per point");
  const std::size_t n = xs.size();
  std::vector<std::uint32_t> coef(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const std::uint32_t num = f.sub(coef[i], coef[i - 1]);
      const std::uint32_t den = f.sub(xs[i], xs[i - level]);
      coef[i] = f.mul(num, f.inv(den));
    }
  }
  // Horner on the Newton basis.
  ModPoly out;
  for (std::size_t i = n; i-- > 0;) {
    // out = out * (z - xs[i]) + coef[i]
    ModPoly next(out.size() + 1, 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], out[k]);
      next[k] = f.sub(next[k], f.mul(out[k], xs[i]));
    }
    next[0] = f.add(next[0], coef[i]);
    trim(next);
    out = std::move(next);
  }
  return out;
}

std::optional<ModRational> reconstruct_rational(const PrimeField& f, std::span<const std::uint32_t> xs,
                                                std::span<const std::uint32_t> ys, int min_gap) {
  ModPoly value = interpolate(f, xs, ys);
  if (value.empty()) return ModRational{{}, {1}};

  ModPoly modulus{1};
  for (auto x : xs) modulus = mul(f, modulus, ModPoly{f.neg(x), 1});

  ModPoly r0 = std::move(modulus), r1 = std::move(value);
  ModPoly t0, t1{1};
  int best_gap = -1;
  ModPoly best_r, best_t;
  while (!r1.empty()) {
    auto [q, r2] = divmod(f, r0, r1);
    if (degree(q) > best_gap) {
      best_gap = degree(q);
      best_r = r1;
      best_t = t1;
    }
    ModPoly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (best_gap < min_gap || best_t.empty() || best_t[0] == 0) return std::nullopt;
  if (!coprime(f, best_r, best_t)) return std::nullopt;
  const std::uint32_t scale = f.inv(best_t[0]);
  for (auto& c : best_r) c = f.mul(c, scale);
  for (auto& c : best_t) c = f.mul(c, scale);
  return ModRational{std::move(best_r), std::move(best_t)};
}

void CrtAccumulator::add(std::span<const std::uint32_t> residues, std::uint32_t p) {
  if (values_.empty() && modulus_ == 1) {
    values_.assign(residues.begin(), residues.end());
    modulus_ = p;
    return;
  }
  if (residues.size() != values_.size()) throw std::invalid_argument("residue vector length changed");
  const PrimeField field(p);
  const std::uint32_t m_inv = field.inv(field.from(modulus_));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const std::uint32_t current = field.from(values_[i]);
    const std::uint32_t k = field.mul(field.sub(residues[i], current), m_inv);
    values_[i] += modulus_ * k;
  }
  modulus_ *= p;
}

std::vector<BigInt> CrtAccumulator::lifted() const {
  std::vector<BigInt> out(values_);
  const BigInt half = modulus_ / 2;
  for (auto& v : out) {
    if (v > half) v -= modulus_;
  }
  return out;
}

}  // namespace hexanimals::modular
