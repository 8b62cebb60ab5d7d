#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "avgord/errors.hpp"

namespace avgord {

class Field;
class GfElement;

/// Defining data of GF(p^m): characteristic, extension degree and a monic
/// irreducible modulus polynomial (constant term first, length m+1).
struct FieldSpec {
  std::int64_t p = 0;
  int m = 0;
  std::vector<int> modulus;
};

/// Exact arithmetic in GF(p^m) for small p and m.
///
/// Elements are identified with indices 0..q-1 by reading the coefficient
/// vector as a base-p integer, constant term least significant. That index
/// order is the canonical element order used everywhere downstream (e.g. for
/// projective normalization). Construction validates the spec: p must be
/// prime (trial division) and the modulus monic and irreducible (exhaustive
/// factor search, fine for the small degrees this library needs).
class Field : public std::enable_shared_from_this<Field> {
 public:
  static std::shared_ptr<const Field> create(FieldSpec spec);

  /// GF(q) with the canonical modulus: the lexicographically least monic
  /// irreducible of the right degree (for prime q just the polynomial x).
  static std::shared_ptr<const Field> gf(std::int64_t q);

  std::int64_t p() const { return spec_.p; }
  int m() const { return spec_.m; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return spec_.modulus; }
  const FieldSpec& spec() const { return spec_; }

  /// Structural equality (same p, m and modulus).
  bool same(const Field& other) const;

  GfElement element(int index) const;
  GfElement zero() const;
  GfElement one() const;

  /// Builds an element from raw coefficients (constant term first). The
  /// input may be shorter than m and may contain unreduced or negative
  /// values; it is reduced mod p and zero-padded.
  GfElement make(std::span<const std::int64_t> raw) const;

  // Index-level arithmetic; the matrix-group machinery works on these.
  int add_i(int a, int b) const;
  int sub_i(int a, int b) const;
  int neg_i(int a) const;
  int mul_i(int a, int b) const;
  int inv_i(int a) const;  // throws on zero

  /// Index of the least primitive element (multiplicative order q-1).
  int primitive_index() const;

  std::vector<int> coeffs_of(int index) const;
  int index_of(std::span<const int> coeffs) const;

  /// "0", "3", "x", "x^2+2x+1", ... mirrors the coefficient vector.
  std::string repr(int index) const;

  explicit Field(FieldSpec spec);  // prefer create(); public for make_shared

 private:
  std::vector<int> reduce(std::vector<int> poly) const;
  int mul_slow(int a, int b) const;
  int inv_slow(int a) const;

  FieldSpec spec_;
  int q_ = 0;
  std::vector<std::uint16_t> mul_table_;  // q*q, built for q <= 256
  std::vector<std::uint16_t> inv_table_;
  std::vector<std::uint16_t> neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// A value of GF(p^m); carries a handle to its field so that mixed-field
/// arithmetic can be rejected.
class GfElement {
 public:
  GfElement() = default;
  GfElement(FieldPtr field, int index) : field_(std::move(field)), index_(index) {}

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int index() const { return index_; }
  std::vector<int> coeffs() const { return field_->coeffs_of(index_); }
  bool is_zero() const { return index_ == 0; }

  GfElement operator+(const GfElement& o) const;
  GfElement operator-(const GfElement& o) const;
  GfElement operator*(const GfElement& o) const;
  GfElement operator-() const;
  GfElement inverse() const;

  bool operator==(const GfElement& o) const;
  bool operator!=(const GfElement& o) const { return !(*this == o); }

  std::string str() const { return field_->repr(index_); }

 private:
  FieldPtr field_;
  int index_ = 0;
};

/// True iff q = p^m for a prime p and m >= 1; reports p and m on request.
bool is_prime_power(std::int64_t q, std::int64_t* p_out = nullptr, int* m_out = nullptr);

bool is_prime(std::int64_t n);

}  // namespace avgord
