#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace apurity {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(p, q) for integer p, q. Zero when q < 0 or p < q; no generalized binomials.
BigInt binomial(std::int64_t p, std::int64_t q);

/// top * (top-1) * ... * (top-len+1); the empty product is 1.
BigInt falling_factorial(std::int64_t top, std::int64_t len);

BigInt factorial(std::int64_t n);

std::string to_string(const BigInt& v);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& v);

BigInt parse_bigint(const std::string& text);

}  // namespace apurity
