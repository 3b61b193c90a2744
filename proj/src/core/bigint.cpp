#include "core/bigint.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace apurity {

BigInt binomial(std::int64_t p, std::int64_t q) {
  if (q < 0 || p < q) return 0;
  q = std::min(q, p - q);
  BigInt acc = 1;
  for (std::int64_t j = 1; j <= q; ++j) {
    acc *= p - q + j;
    acc /= j;
  }
  return acc;
}

BigInt falling_factorial(std::int64_t top, std::int64_t len) {
  BigInt acc = 1;
  for (std::int64_t j = 0; j < len; ++j) acc *= top - j;
  return acc;
}

BigInt factorial(std::int64_t n) {
  require(n >= 0, "factorial of a negative integer");
  return falling_factorial(n, n);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  require(text.size() > start, "empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    require(text[i] >= '0' && text[i] <= '9', "malformed integer literal '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace apurity
