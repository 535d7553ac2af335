#include "degen/rational.hpp"

#include <stdexcept>
#include <string>

namespace degen {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(std::string(s), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    return static_cast<std::int64_t>(value);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace degen
