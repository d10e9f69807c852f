#include "support.hpp"

#include <hexanimals/modular.hpp>

#include <doctest.h>

using namespace hexanimals;
using namespace hexanimals::modular;

TEST_CASE("prime field arithmetic") {
  PrimeSequence primes;
  const std::uint32_t p = primes.next();
  CHECK(p == 2147483647u);
  CHECK(primes.next() < p);
  const PrimeField f(p);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t a = static_cast<std::uint32_t>(rng() % p), b = static_cast<std::uint32_t>(rng() % p);
    CHECK(f.mul(a, b) == static_cast<std::uint32_t>(static_cast<unsigned __int128>(a) * b % p));
    CHECK(f.add(a, b) == (static_cast<std::uint64_t>(a) + b) % p);
    CHECK(f.add(f.sub(a, b), b) == a);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK(f.from(BigInt(-1)) == p - 1);
  CHECK(f.pow(3, p - 1) == 1);
  CHECK_THROWS_AS((void)f.inv(0), std::domain_error);
}

TEST_CASE("primality") {
  for (std::uint32_t n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (std::uint32_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    CHECK(is_prime(n) == prime);
  }
  CHECK(is_prime(2147483647u));
  CHECK_FALSE(is_prime(2147483647u - 2));
  CHECK_FALSE(is_prime(4294967291u - 2));
}

TEST_CASE("interpolation and rational reconstruction") {
  const PrimeField f(1000003);
  const ModPoly num{0, 1, 1};
  const ModPoly den{1, f.neg(2), 0, 1};
  std::vector<std::uint32_t> xs, ys;
  for (std::uint32_t x = 2; x < 12; ++x) {
    xs.push_back(x);
    ys.push_back(f.mul(evaluate(f, num, x), f.inv(evaluate(f, den, x))));
  }
  const ModPoly poly = interpolate(f, xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(evaluate(f, poly, xs[i]) == ys[i]);
  const auto r = reconstruct_rational(f, xs, ys);
  REQUIRE(r);
  CHECK(r->num == num);
  CHECK(r->den == den);
}

TEST_CASE("chinese remaindering") {
  CrtAccumulator acc;
  const std::vector<BigInt> truth{BigInt("123456789012345678901234567"), BigInt(-42), BigInt(0)};
  PrimeSequence primes;
  for (int i = 0; i < 4; ++i) {
    const std::uint32_t p = primes.next();
    const PrimeField f(p);
    std::vector<std::uint32_t> residues;
    for (const auto& v : truth) residues.push_back(f.from(v));
    acc.add(residues, p);
  }
  CHECK(acc.lifted() == truth);
}
