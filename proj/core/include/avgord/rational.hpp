#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "avgord/errors.hpp"

namespace avgord {

/// Exact reduced fraction over 64-bit integers.
///
/// Every arithmetic operation reduces the result and throws OverflowError
/// instead of wrapping. Comparisons are exact (cross-multiplication in
/// 128 bits), so threshold tests such as `o == 211/60` are trustworthy.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  /// "num/den", e.g. "211/60"; whole numbers render without a denominator.
  std::string str() const;

  /// Fixed-point decimal rendering, rounded half to even at `places` digits.
  /// Display only; all comparisons go through exact arithmetic.
  std::string decimal(int places = 6) const;

  /// Parses "num/den" or a bare integer. Inverse of str() and of the JSON
  /// {num, den} pair.
  static Rational parse(std::string_view text);

 private:
  static Rational from_i128(__int128 num, __int128 den);

  std::int64_t num_;
  std::int64_t den_;  // > 0, gcd(num, den) == 1
};

}  // namespace avgord
