#include "avgord/stats.hpp"

namespace avgord {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("psi sum overflows 64 bits");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("psi term overflows 64 bits");
  return out;
}

}  // namespace

std::uint64_t OrderSpectrum::psi() const {
  std::uint64_t total = 0;
  for (const auto& [order, count] : counts) total = checked_add(total, checked_mul(order, count));
  return total;
}

std::uint64_t OrderSpectrum::i_k(std::uint64_t k) const {
  auto it = counts.find(k);
  return it == counts.end() ? 0 : it->second;
}

Rational OrderSpectrum::average() const {
  std::uint64_t p = psi();
  if (p > static_cast<std::uint64_t>(INT64_MAX) || group_order > static_cast<std::uint64_t>(INT64_MAX))
    throw OverflowError("average order overflows 64 bits");
  return Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(group_order));
}

OrderSpectrum order_spectrum(const EnumeratedGroup& g) {
  OrderSpectrum spec;
  spec.group_order = static_cast<std::uint64_t>(g.order());
  for (int a = 0; a < g.order(); ++a) ++spec.counts[g.element_order(a)];
  return spec;
}

std::uint64_t psi(const EnumeratedGroup& g) { return order_spectrum(g).psi(); }

std::uint64_t psi_subset(const EnumeratedGroup& g, const ElementSet& s) {
  if (s.group != nullptr && s.group != &g)
    throw DomainError("element set belongs to a different group");
  std::uint64_t total = 0;
  for (int a : s.members) total = checked_add(total, g.element_order(a));
  return total;
}

Rational avg_order(const EnumeratedGroup& g) { return order_spectrum(g).average(); }

std::uint64_t i_k(const EnumeratedGroup& g, std::uint64_t k) {
  if (k < 1) throw DomainError("element orders start at 1");
  return order_spectrum(g).i_k(k);
}

std::uint64_t nonsolvable_psi_lower_bound(std::uint64_t n, std::uint64_t i2, std::uint64_t i3) {
  if (i2 + i3 + 1 > n) throw DomainError("i2 + i3 + 1 exceeds the group order");
  // 3n + (n - 2*i2 - (i3 + 1)); the bracket may be negative, the sum is not
  std::int64_t rest = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(i2) -
                      (static_cast<std::int64_t>(i3) + 1);
  return static_cast<std::uint64_t>(3 * static_cast<std::int64_t>(n) + rest);
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace avgord
