#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "avgord/group_spec.hpp"

namespace avgord {

struct EnumerateOptions {
  std::uint64_t max_order = 2'000'000;  // enumeration cap
};

class Realization;

/// A fully materialized finite group: an indexed element table with a
/// multiplication oracle. The identity always has index 0 and generator
/// indices are recorded. Immutable once built; safe for concurrent reads.
///
/// Indices are the universal element handles. Every downstream computation
/// (subgroups, spectra, automorphisms, reports) works on indices only; the
/// concrete representation (permutations, projective matrices, pairs, coset
/// representatives) lives behind the realization.
class EnumeratedGroup : public std::enable_shared_from_this<EnumeratedGroup> {
 public:
  using Ptr = std::shared_ptr<const EnumeratedGroup>;

  /// Breadth-first closure of the spec's generators. Deterministic: the same
  /// spec always yields the same element ordering. Throws ResourceError when
  /// the (predicted or discovered) order exceeds the cap.
  static Ptr enumerate(const GroupSpec& spec, const EnumerateOptions& options = {});
  static Ptr enumerate(std::string_view spec_text, const EnumerateOptions& options = {});

  /// Componentwise direct product of two enumerated groups; element (i, j)
  /// gets index i * |B| + j, no re-closure needed.
  static Ptr direct_product(Ptr a, Ptr b, const EnumerateOptions& options = {});

  /// Wraps a pre-built realization (quotients use this) and finalizes the
  /// cached inverse/order tables.
  static Ptr from_realization(std::unique_ptr<const Realization> realization,
                              std::vector<int> generators, std::string spec_text);

  int order() const { return order_; }
  int identity() const { return 0; }
  const std::vector<int>& generator_indices() const { return generators_; }
  const std::string& spec_text() const { return spec_text_; }

  /// Index of the product a*b; throws on out-of-range indices.
  int mul(int a, int b) const;
  /// Index of a^-1.
  int inv(int a) const;
  /// Least n >= 1 with a^n = identity (precomputed).
  std::uint64_t element_order(int a) const;

  bool is_abelian() const { return abelian_; }
  bool has_dense_table() const { return !dense_.empty(); }

  std::string element_repr(int a) const;

  /// Number of elements g with x^-1 g x = g^-1, for every conjugator x.
  /// The O(n^2) core of the inversion-ratio analysis, kept here so the
  /// permutation realization can run it without index lookups.
  std::vector<std::uint64_t> conjugation_inversion_counts() const;

  struct PrivateTag {};
  EnumeratedGroup(PrivateTag, std::unique_ptr<const Realization> realization,
                  std::vector<int> generators, std::string spec_text);
  ~EnumeratedGroup();

 private:
  static Ptr finish(std::unique_ptr<const Realization> realization, std::vector<int> generators,
                    std::string spec_text);
  void check_index(int a) const;

  std::unique_ptr<const Realization> realization_;
  int order_ = 0;
  std::vector<int> generators_;
  std::string spec_text_;
  std::vector<int> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::int32_t> dense_;  // n*n multiplication table when n <= kDenseCap
  bool abelian_ = false;
};

using GroupPtr = EnumeratedGroup::Ptr;

/// Realizations bridge indices to concrete elements. Only the group core
/// and the builders below need the interface.
class Realization {
 public:
  virtual ~Realization() = default;
  virtual int size() const = 0;
  virtual int mul(int a, int b) const = 0;
  virtual int inverse(int a) const = 0;
  /// Fast-path element order; 0 means "unknown, derive iteratively".
  virtual std::uint64_t order_hint(int) const { return 0; }
  virtual std::string repr(int a) const = 0;
  /// Optional representation-level inversion-count scan; false = not provided.
  virtual bool conjugation_inversion_counts(std::vector<std::uint64_t>&) const { return false; }
};

}  // namespace avgord
