#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace degen {

// All potentials and charges are exact. 64-bit numerators are ample: the
// largest denominators are lcm(2,3,4,5,10,12,18,20,36) = 180.
using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms, denominator always printed ("1/1", "-2/9").
std::string to_string(const Rational& r);

// Accepts "p/q" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

}  // namespace degen
