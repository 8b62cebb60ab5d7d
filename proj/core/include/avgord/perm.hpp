#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avgord/errors.hpp"

namespace avgord {

/// Permutation of {0, ..., degree-1}, stored as its image sequence.
///
/// Multiplication convention, fixed globally: (a * b) applies b first, then
/// a, i.e. (a * b)[x] = a[b[x]].
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  static Permutation from_images(std::vector<std::uint8_t> images);  // validates bijection

  /// Builds from disjoint cycles over 0-based points. Overlapping cycles or
  /// out-of-range points are rejected.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  std::uint8_t operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  /// Least n >= 1 with p^n = id; computed as the lcm of cycle lengths.
  std::uint64_t order() const;

  /// Non-trivial cycles, 0-based, each starting at its least point.
  std::vector<std::vector<int>> cycles() const;

  /// 1-based disjoint-cycle notation; "()" for the identity.
  std::string str() const;

  /// Byte-packed key, one image per byte; needs degree <= 8.
  std::uint64_t pack() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }

 private:
  std::vector<std::uint8_t> images_;
};

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace avgord
