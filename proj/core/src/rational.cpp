#include "avgord/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace avgord {

namespace {

constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num < kInt64Min || num > kInt64Max || den > kInt64Max)
    throw OverflowError("rational arithmetic overflows 64 bits");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  Rational r = from_i128(num, den);
  num_ = r.num_;
  den_ = r.den_;
}

Rational Rational::operator+(const Rational& o) const {
  return from_i128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return from_i128(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return from_i128(static_cast<__int128>(num_) * o.num_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  return from_i128(static_cast<__int128>(num_) * o.den_,
                   static_cast<__int128>(den_) * o.num_);
}

Rational Rational::operator-() const { return from_i128(-static_cast<__int128>(num_), den_); }

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int places) const {
  unsigned __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  bool negative = num_ < 0;
  unsigned __int128 n = negative ? -static_cast<__int128>(num_) : static_cast<__int128>(num_);
  unsigned __int128 d = static_cast<unsigned __int128>(den_);
  unsigned __int128 t = n * scale;
  unsigned __int128 q = t / d;
  unsigned __int128 r = t % d;
  unsigned __int128 twice = r * 2;
  if (twice > d || (twice == d && (q & 1) != 0)) ++q;

  auto digits = [](unsigned __int128 v) {
    if (v == 0) return std::string("0");
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  };

  std::string whole = digits(q / scale);
  std::string out = (negative && q != 0) ? "-" + whole : whole;
  if (places > 0) {
    std::string frac = digits(q % scale);
    frac.insert(frac.begin(), static_cast<std::size_t>(places) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw DomainError("invalid rational literal: \"" + std::string(s) + "\"");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace avgord
