#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace hexanimals {

using BigInt = boost::multiprecision::mpz_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::vector<std::string> to_decimal(const std::vector<BigInt>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.str());
  return out;
}

// Throws std::invalid_argument on anything other than an optionally signed
// run of decimal digits.
BigInt parse_decimal(const std::string& text);

}  // namespace hexanimals
