#include "avgord/inversion.hpp"

#include <algorithm>
#include <random>

namespace avgord {

namespace {

constexpr int kExhaustiveVerificationCap = 4096;
constexpr int kSampledPairs = 100'000;

void verify_automorphism(const EnumeratedGroup& g, const std::vector<int>& images,
                         bool* exhaustive_out) {
  const int n = g.order();
  if (images.size() != static_cast<std::size_t>(n))
    throw DomainError("automorphism image table has the wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : images) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
      throw DomainError("automorphism images are not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (images[0] != 0) throw DomainError("automorphism does not fix the identity");

  auto check_pair = [&](int a, int b) {
    if (images[static_cast<std::size_t>(g.mul(a, b))] !=
        g.mul(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]))
      throw DomainError("map is not a homomorphism");
  };

  if (n <= kExhaustiveVerificationCap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) check_pair(a, b);
    *exhaustive_out = true;
    return;
  }
  for (int a : g.generator_indices())
    for (int b : g.generator_indices()) check_pair(a, b);
  std::mt19937_64 rng(0x5eed0000u ^ static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < kSampledPairs; ++i) check_pair(pick(rng), pick(rng));
  *exhaustive_out = false;
}

}  // namespace

AutoMap AutoMap::make(const EnumeratedGroup& g, std::vector<int> images, Provenance provenance,
                      int inner_x) {
  bool exhaustive = false;
  verify_automorphism(g, images, &exhaustive);
  return AutoMap(g, std::move(images), provenance, inner_x, exhaustive);
}

std::string AutoMap::provenance_label() const {
  std::string label;
  switch (provenance_) {
    case Provenance::identity: label = "identity"; break;
    case Provenance::inner: label = "inner(" + group_->element_repr(inner_x_) + ")"; break;
    case Provenance::inversion: label = "inversion"; break;
    case Provenance::explicit_map: label = "explicit"; break;
  }
  if (!exhaustive_) label += "; homomorphism check: probabilistic";
  return label;
}

AutoMap identity_automorphism(const EnumeratedGroup& g) {
  std::vector<int> images(static_cast<std::size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) images[static_cast<std::size_t>(a)] = a;
  return AutoMap::make(g, std::move(images), AutoMap::Provenance::identity);
}

AutoMap inner_automorphism(const EnumeratedGroup& g, int x) {
  if (x < 0 || x >= g.order()) throw DomainError("element index out of range");
  const int xi = g.inv(x);
  std::vector<int> images(static_cast<std::size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    images[static_cast<std::size_t>(a)] = g.mul(g.mul(xi, a), x);
  return AutoMap::make(g, std::move(images), AutoMap::Provenance::inner, x);
}

AutoMap inversion_map(const EnumeratedGroup& g) {
  if (!g.is_abelian())
    throw DomainError("inversion is not a homomorphism on non-abelian groups");
  std::vector<int> images(static_cast<std::size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) images[static_cast<std::size_t>(a)] = g.inv(a);
  return AutoMap::make(g, std::move(images), AutoMap::Provenance::inversion);
}

AutoMap compose_with_left_translation(const AutoMap& theta, int x) {
  const EnumeratedGroup& g = theta.group();
  if (x < 0 || x >= g.order()) throw DomainError("element index out of range");
  const int xi = g.inv(x);
  std::vector<int> images(static_cast<std::size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    images[static_cast<std::size_t>(a)] = theta(g.mul(g.mul(xi, a), x));
  AutoMap::Provenance prov = theta.provenance() == AutoMap::Provenance::identity
                                 ? AutoMap::Provenance::inner
                                 : AutoMap::Provenance::explicit_map;
  int inner_x = prov == AutoMap::Provenance::inner ? x : -1;
  return AutoMap::make(g, std::move(images), prov, inner_x);
}

ElementSet inverted_set(const EnumeratedGroup& g, const AutoMap& theta) {
  std::vector<int> members;
  for (int a = 0; a < g.order(); ++a)
    if (theta(a) == g.inv(a)) members.push_back(a);
  return ElementSet{&g, std::move(members)};
}

Rational inversion_ratio(const EnumeratedGroup& g, const AutoMap& theta) {
  return Rational(inverted_set(g, theta).size(), g.order());
}

MaxInnerRatio max_inner_inversion_ratio(const EnumeratedGroup& g) {
  std::vector<std::uint64_t> counts = g.conjugation_inversion_counts();
  MaxInnerRatio best;
  best.witness = 0;
  best.inverted_count = counts[0];
  for (int x = 1; x < g.order(); ++x)
    if (counts[static_cast<std::size_t>(x)] > best.inverted_count) {
      best.inverted_count = counts[static_cast<std::size_t>(x)];
      best.witness = x;
    }
  best.ratio = Rational(static_cast<std::int64_t>(best.inverted_count), g.order());
  return best;
}

}  // namespace avgord
