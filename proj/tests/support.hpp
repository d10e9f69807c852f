#pragma once

#include <hexanimals/enumerate.hpp>
#include <hexanimals/letter.hpp>

#include <initializer_list>
#include <random>
#include <string_view>

namespace test {

inline hexanimals::Series series(std::initializer_list<long> values) {
  hexanimals::Series out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline hexanimals::Letter letter(std::string_view text) { return hexanimals::parse_letter(text); }

inline hexanimals::Poly random_poly(std::mt19937& rng, int max_degree, int magnitude) {
  std::uniform_int_distribution<int> degree(-1, max_degree);
  std::uniform_int_distribution<int> coeff(-magnitude, magnitude);
  std::vector<hexanimals::BigInt> c(static_cast<std::size_t>(degree(rng) + 1));
  for (auto& v : c) v = coeff(rng);
  return hexanimals::Poly(std::move(c));
}

}  // namespace test
