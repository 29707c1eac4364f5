#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "luk/rational.hpp"

namespace luk {

/// An exact rational in [0,1], the carrier of the MV-algebra.
///
/// Construction checks the range; the algebra operations below are closed on
/// [0,1] and skip the check. Arithmetic overflow of the 64-bit representation
/// throws rather than rounding.
class TruthValue {
 public:
  TruthValue() = default;

  /// Throws std::domain_error unless den != 0 and 0 <= num/den <= 1.
  TruthValue(std::int64_t num, std::int64_t den);
  explicit TruthValue(const SmallRational& value);

  static TruthValue zero() { return {}; }
  static TruthValue one() { return TruthValue(SmallRational(1), Unchecked{}); }
  static TruthValue half() { return TruthValue(SmallRational(1, 2), Unchecked{}); }

  static TruthValue from_rational(const Rational& value);
  /// "p/q" or "0"/"1".
  static TruthValue parse(std::string_view text);

  const SmallRational& value() const noexcept { return value_; }
  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  Rational to_rational() const { return luk::to_rational(value_); }

  bool is_zero() const { return value_.numerator() == 0; }
  bool is_one() const { return value_.numerator() == value_.denominator(); }
  bool is_crisp() const { return is_zero() || is_one(); }

  std::string str() const { return format_rational(value_); }

  friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const TruthValue& a, const TruthValue& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  struct Unchecked {};
  TruthValue(const SmallRational& value, Unchecked) : value_(value) {}

  SmallRational value_{0};

  friend TruthValue negation(const TruthValue& r);
  friend TruthValue strong_disjunction(const TruthValue& r, const TruthValue& s);
  friend TruthValue strong_conjunction(const TruthValue& r, const TruthValue& s);
  friend TruthValue implication(const TruthValue& r, const TruthValue& s);
};

// MV-algebra on [0,1].

/// 1 - r
TruthValue negation(const TruthValue& r);
inline TruthValue meet(const TruthValue& r, const TruthValue& s) { return s < r ? s : r; }
inline TruthValue join(const TruthValue& r, const TruthValue& s) { return r < s ? s : r; }
/// min(1, r + s)
TruthValue strong_disjunction(const TruthValue& r, const TruthValue& s);
/// max(0, r + s - 1), the dual of strong_disjunction under negation.
TruthValue strong_conjunction(const TruthValue& r, const TruthValue& s);
/// min(1, 1 - r + s)
TruthValue implication(const TruthValue& r, const TruthValue& s);

}  // namespace luk
