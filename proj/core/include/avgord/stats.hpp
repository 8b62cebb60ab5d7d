#pragma once

#include <cstdint>
#include <map>

#include "avgord/rational.hpp"
#include "avgord/structure.hpp"

namespace avgord {

/// Exact element-order statistics of a group: counts[d] = number of
/// elements of order d. Lossless for psi, the average order and every i_k.
struct OrderSpectrum {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t group_order = 0;

  /// Sum of all element orders.
  std::uint64_t psi() const;
  /// Number of elements of order exactly k (0 when absent).
  std::uint64_t i_k(std::uint64_t k) const;
  /// psi / |G| as an exact reduced fraction.
  Rational average() const;

  bool operator==(const OrderSpectrum& o) const {
    return counts == o.counts && group_order == o.group_order;
  }
};

OrderSpectrum order_spectrum(const EnumeratedGroup& g);

std::uint64_t psi(const EnumeratedGroup& g);
std::uint64_t psi_subset(const EnumeratedGroup& g, const ElementSet& s);
Rational avg_order(const EnumeratedGroup& g);
std::uint64_t i_k(const EnumeratedGroup& g, std::uint64_t k);

/// 3n + (n - 2*i2 - (i3 + 1)): a floor for psi on non-solvable groups,
/// derived from the partition of G into the identity, involutions, order-3
/// elements and the rest (which then contains an element of order >= 5).
/// Callers are responsible for applying it only to non-solvable groups.
std::uint64_t nonsolvable_psi_lower_bound(std::uint64_t n, std::uint64_t i2, std::uint64_t i3);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace avgord
