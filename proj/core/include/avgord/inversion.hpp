#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avgord/rational.hpp"
#include "avgord/structure.hpp"

namespace avgord {

/// A verified automorphism, stored as a permutation of element indices.
///
/// Construction checks bijectivity, that the identity is fixed, and the
/// homomorphism property: exhaustively over all pairs for |G| <= 4096,
/// otherwise on all generator pairs plus 10^5 seeded random pairs (such
/// maps report exhaustively_verified() == false and are labeled
/// "probabilistic" in reports).
class AutoMap {
 public:
  enum class Provenance { identity, inner, inversion, explicit_map };

  static AutoMap make(const EnumeratedGroup& g, std::vector<int> images, Provenance provenance,
                      int inner_x = -1);

  const EnumeratedGroup& group() const { return *group_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int a) const { return images_[static_cast<std::size_t>(a)]; }
  Provenance provenance() const { return provenance_; }
  int inner_element() const { return inner_x_; }
  bool exhaustively_verified() const { return exhaustive_; }

  /// "identity", "inner((1 2))", "inversion", "explicit"; sampled maps get
  /// a "; homomorphism check: probabilistic" suffix.
  std::string provenance_label() const;

 private:
  AutoMap(const EnumeratedGroup& g, std::vector<int> images, Provenance provenance, int inner_x,
          bool exhaustive)
      : group_(&g),
        images_(std::move(images)),
        provenance_(provenance),
        inner_x_(inner_x),
        exhaustive_(exhaustive) {}

  const EnumeratedGroup* group_;
  std::vector<int> images_;
  Provenance provenance_;
  int inner_x_;
  bool exhaustive_;
};

AutoMap identity_automorphism(const EnumeratedGroup& g);

/// g -> x^-1 g x.
AutoMap inner_automorphism(const EnumeratedGroup& g, int x);

/// g -> g^-1; an automorphism only on abelian groups, errors otherwise.
AutoMap inversion_map(const EnumeratedGroup& g);

/// The map g -> theta(x^-1 g x), written x*theta.
AutoMap compose_with_left_translation(const AutoMap& theta, int x);

/// S(theta) = { g : theta(g) = g^-1 }.
ElementSet inverted_set(const EnumeratedGroup& g, const AutoMap& theta);

/// r(G, theta) = |S(theta)| / |G| as an exact fraction.
Rational inversion_ratio(const EnumeratedGroup& g, const AutoMap& theta);

/// Conjugator maximizing the inner inversion ratio (ties broken by least
/// element index) together with the exact maximal ratio.
struct MaxInnerRatio {
  int witness = 0;
  std::uint64_t inverted_count = 0;
  Rational ratio;
};
MaxInnerRatio max_inner_inversion_ratio(const EnumeratedGroup& g);

}  // namespace avgord
