#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace phcurv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// Narrowing that throws std::overflow_error instead of wrapping.
std::int64_t to_int64(const BigInt& z);

} // namespace phcurv
