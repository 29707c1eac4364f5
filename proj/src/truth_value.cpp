#include "luk/truth_value.hpp"

#include <stdexcept>

namespace luk {

namespace {

const SmallRational kOne(1);
const SmallRational kZero(0);

void check_range(const SmallRational& v) {
  if (v < kZero || kOne < v) {
    throw std::domain_error("truth value outside [0,1]: " + format_rational(v));
  }
}

}  // namespace

TruthValue::TruthValue(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("truth value with zero denominator");
  value_ = SmallRational(SmallInt(num), SmallInt(den));
  check_range(value_);
}

TruthValue::TruthValue(const SmallRational& value) : value_(value) { check_range(value_); }

TruthValue TruthValue::from_rational(const Rational& value) { return TruthValue(to_small(value)); }

TruthValue TruthValue::parse(std::string_view text) { return from_rational(parse_rational(text)); }

TruthValue negation(const TruthValue& r) { return TruthValue(kOne - r.value_, TruthValue::Unchecked{}); }

TruthValue strong_disjunction(const TruthValue& r, const TruthValue& s) {
  SmallRational sum = r.value_ + s.value_;
  if (kOne < sum) sum = kOne;
  return TruthValue(sum, TruthValue::Unchecked{});
}

TruthValue strong_conjunction(const TruthValue& r, const TruthValue& s) {
  SmallRational sum = r.value_ + s.value_ - kOne;
  if (sum < kZero) sum = kZero;
  return TruthValue(sum, TruthValue::Unchecked{});
}

TruthValue implication(const TruthValue& r, const TruthValue& s) {
  if (!(s.value_ < r.value_)) return TruthValue::one();
  return TruthValue(kOne - r.value_ + s.value_, TruthValue::Unchecked{});
}

}  // namespace luk
