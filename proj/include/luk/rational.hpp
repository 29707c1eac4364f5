#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <boost/safe_numerics/safe_integer.hpp>

namespace luk {

/// Arbitrary-precision rational. Used where intermediate values may grow
/// without bound (simplex fallback, inequality bookkeeping, reports).
using Rational = boost::multiprecision::cpp_rational;

/// 64-bit rational whose integer operations throw std::system_error on
/// overflow instead of wrapping, so a result is either exact or an error.
using SmallInt = boost::safe_numerics::safe<std::int64_t>;
using SmallRational = boost::rational<SmallInt>;

Rational to_rational(const SmallRational& value);

/// Throws std::overflow_error when the value does not fit in 64 bits.
SmallRational to_small(const Rational& value);

/// Accepts "p/q", "p", with an optional leading '-'. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest terms, "p/q" or "p" for integers. Never decimals.
std::string format_rational(const Rational& value);
std::string format_rational(const SmallRational& value);

}  // namespace luk
