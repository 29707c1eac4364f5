#include "luk/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace luk {

Rational to_rational(const SmallRational& value) {
  return Rational(static_cast<std::int64_t>(value.numerator())) /
         Rational(static_cast<std::int64_t>(value.denominator()));
}

SmallRational to_small(const Rational& value) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = numerator(value);
  const cpp_int den = denominator(value);
  const cpp_int lo = std::numeric_limits<std::int64_t>::min();
  const cpp_int hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw std::overflow_error("rational does not fit in 64 bits: " + value.str());
  }
  return SmallRational(SmallInt(num.convert_to<std::int64_t>()),
                       SmallInt(den.convert_to<std::int64_t>()));
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  boost::multiprecision::cpp_int num;
  boost::multiprecision::cpp_int den = 1;
  if (slash == std::string_view::npos) {
    num = parse_integer(body, text);
  } else {
    num = parse_integer(body.substr(0, slash), text);
    den = parse_integer(body.substr(slash + 1), text);
  }
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) { return value.str(); }

std::string format_rational(const SmallRational& value) {
  const std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace luk
