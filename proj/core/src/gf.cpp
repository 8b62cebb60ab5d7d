#include "avgord/gf.hpp"

#include <algorithm>
#include <numeric>

namespace avgord {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<int>((out[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
  trim(out);
  return out;
}

int mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  return static_cast<int>(((t % p) + p) % p);
}

// Remainder of a modulo monic divisor d.
Poly poly_rem(Poly a, const Poly& d, std::int64_t p) {
  trim(a);
  int dd = poly_deg(d);
  while (poly_deg(a) >= dd) {
    int shift = poly_deg(a) - dd;
    std::int64_t c = a.back();
    for (int i = 0; i <= dd; ++i)
      a[static_cast<std::size_t>(i + shift)] = static_cast<int>(
          ((a[static_cast<std::size_t>(i + shift)] - c * d[static_cast<std::size_t>(i)]) % p + p) % p);
    trim(a);
  }
  return a;
}

// divmod by a monic divisor; returns quotient, rem receives the remainder.
Poly poly_divmod(Poly a, const Poly& d, std::int64_t p, Poly& rem) {
  trim(a);
  int dd = poly_deg(d);
  Poly quot;
  if (poly_deg(a) >= dd) quot.assign(static_cast<std::size_t>(poly_deg(a) - dd + 1), 0);
  while (poly_deg(a) >= dd) {
    int shift = poly_deg(a) - dd;
    std::int64_t c = a.back();
    quot[static_cast<std::size_t>(shift)] = static_cast<int>(c);
    for (int i = 0; i <= dd; ++i)
      a[static_cast<std::size_t>(i + shift)] = static_cast<int>(
          ((a[static_cast<std::size_t>(i + shift)] - c * d[static_cast<std::size_t>(i)]) % p + p) % p);
    trim(a);
  }
  rem = std::move(a);
  trim(quot);
  return quot;
}

bool poly_is_irreducible(const Poly& modulus, std::int64_t p, int m) {
  if (m == 1) return true;  // monic degree 1 is always irreducible
  // Exhaustive search over monic divisors of degree 1..m/2.
  for (int d = 1; d <= m / 2; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly div(static_cast<std::size_t>(d) + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        div[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      div[static_cast<std::size_t>(d)] = 1;
      if (poly_rem(modulus, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::int64_t q, std::int64_t* p_out, int* m_out) {
  if (q < 2) return false;
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::int64_t rest = q;
  int m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (m_out) *m_out = m;
  return true;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::int64_t p = spec_.p;
  const int m = spec_.m;
  if (!is_prime(p)) throw DomainError("p not prime");
  if (m < 1) throw DomainError("extension degree must be >= 1");
  if (spec_.modulus.size() != static_cast<std::size_t>(m) + 1)
    throw DomainError("modulus must have m+1 coefficients");
  for (int c : spec_.modulus)
    if (c < 0 || c >= p) throw DomainError("modulus coefficient out of range [0, p)");
  if (spec_.modulus.back() != 1) throw DomainError("modulus must be monic");
  if (!poly_is_irreducible(spec_.modulus, p, m)) throw DomainError("modulus is reducible");

  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > 1 << 20) throw DomainError("field too large for this library");
  }
  q_ = static_cast<int>(q);

  if (q_ <= 256) {
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    inv_table_.assign(static_cast<std::size_t>(q_), 0);
    neg_table_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
      neg_table_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(sub_i(0, a));
      for (int b = a; b < q_; ++b) {
        int r = mul_slow(a, b);
        mul_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(r);
        mul_table_[static_cast<std::size_t>(b) * q_ + a] = static_cast<std::uint16_t>(r);
      }
    }
    for (int a = 1; a < q_; ++a)
      inv_table_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(inv_slow(a));
  }
}

FieldPtr Field::create(FieldSpec spec) { return std::make_shared<const Field>(std::move(spec)); }

FieldPtr Field::gf(std::int64_t q) {
  std::int64_t p = 0;
  int m = 0;
  if (!is_prime_power(q, &p, &m))
    throw DomainError(std::to_string(q) + " is not a prime power");
  FieldSpec spec;
  spec.p = p;
  spec.m = m;
  if (m == 1) {
    spec.modulus = {0, 1};  // the polynomial x
    return create(std::move(spec));
  }
  // Canonical modulus: least monic irreducible of degree m, candidates
  // ordered by the base-p encoding of their non-leading coefficients.
  // Reproduces the fixed choices documented in the tests, e.g. x^3+x+1
  // for GF(8) and x^2+2 for GF(25).
  std::int64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (std::int64_t code = 0; code < count; ++code) {
    Poly mod(static_cast<std::size_t>(m) + 1, 0);
    std::int64_t c = code;
    for (int i = 0; i < m; ++i) {
      mod[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    mod[static_cast<std::size_t>(m)] = 1;
    if (poly_is_irreducible(mod, p, m)) {
      spec.modulus = std::move(mod);
      return create(std::move(spec));
    }
  }
  throw DomainError("no irreducible modulus found");  // unreachable for valid p, m
}

bool Field::same(const Field& other) const {
  return spec_.p == other.spec_.p && spec_.m == other.spec_.m &&
         spec_.modulus == other.spec_.modulus;
}

std::vector<int> Field::coeffs_of(int index) const {
  std::vector<int> out(static_cast<std::size_t>(spec_.m), 0);
  for (int i = 0; i < spec_.m; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(index % spec_.p);
    index = static_cast<int>(index / spec_.p);
  }
  return out;
}

int Field::index_of(std::span<const int> coeffs) const {
  int idx = 0;
  for (int i = spec_.m - 1; i >= 0; --i)
    idx = static_cast<int>(idx * spec_.p + coeffs[static_cast<std::size_t>(i)]);
  return idx;
}

GfElement Field::element(int index) const {
  if (index < 0 || index >= q_) throw DomainError("field element index out of range");
  return GfElement(shared_from_this(), index);
}

GfElement Field::zero() const { return element(0); }
GfElement Field::one() const { return element(1); }

GfElement Field::make(std::span<const std::int64_t> raw) const {
  if (raw.size() > static_cast<std::size_t>(spec_.m))
    throw DomainError("raw coefficient sequence longer than the extension degree");
  std::vector<int> coeffs(static_cast<std::size_t>(spec_.m), 0);
  for (std::size_t i = 0; i < raw.size(); ++i)
    coeffs[i] = static_cast<int>(((raw[i] % spec_.p) + spec_.p) % spec_.p);
  return GfElement(shared_from_this(), index_of(coeffs));
}

int Field::add_i(int a, int b) const {
  int out = 0;
  int mult = 1;
  for (int i = 0; i < spec_.m; ++i) {
    int da = static_cast<int>(a % spec_.p), db = static_cast<int>(b % spec_.p);
    a = static_cast<int>(a / spec_.p);
    b = static_cast<int>(b / spec_.p);
    out += static_cast<int>((da + db) % spec_.p) * mult;
    mult = static_cast<int>(mult * spec_.p);
  }
  return out;
}

int Field::sub_i(int a, int b) const {
  int out = 0;
  int mult = 1;
  for (int i = 0; i < spec_.m; ++i) {
    int da = static_cast<int>(a % spec_.p), db = static_cast<int>(b % spec_.p);
    a = static_cast<int>(a / spec_.p);
    b = static_cast<int>(b / spec_.p);
    out += static_cast<int>(((da - db) % spec_.p + spec_.p) % spec_.p) * mult;
    mult = static_cast<int>(mult * spec_.p);
  }
  return out;
}

int Field::neg_i(int a) const {
  if (!neg_table_.empty()) return neg_table_[static_cast<std::size_t>(a)];
  return sub_i(0, a);
}

int Field::mul_slow(int a, int b) const {
  Poly pa = coeffs_of(a), pb = coeffs_of(b);
  trim(pa);
  trim(pb);
  Poly prod = poly_rem(poly_mul(pa, pb, spec_.p), spec_.modulus, spec_.p);
  prod.resize(static_cast<std::size_t>(spec_.m), 0);
  return index_of(prod);
}

int Field::mul_i(int a, int b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

int Field::inv_slow(int a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  // Extended polynomial gcd of a against the modulus.
  Poly r0 = spec_.modulus;
  Poly r1 = coeffs_of(a);
  trim(r1);
  Poly t0, t1 = {1};
  while (!r1.empty()) {
    // make r1 monic for division, fold the scalar into t1
    int lead = r1.back();
    if (lead != 1) {
      int il = mod_inverse(lead, spec_.p);
      for (int& c : r1) c = static_cast<int>((static_cast<std::int64_t>(c) * il) % spec_.p);
      for (int& c : t1) c = static_cast<int>((static_cast<std::int64_t>(c) * il) % spec_.p);
    }
    Poly rem;
    Poly q = poly_divmod(r0, r1, spec_.p, rem);
    Poly t2 = poly_mul(q, t1, spec_.p);
    // t0 - t2
    Poly tn(std::max(t0.size(), t2.size()), 0);
    for (std::size_t i = 0; i < tn.size(); ++i) {
      int x = i < t0.size() ? t0[i] : 0;
      int y = i < t2.size() ? t2[i] : 0;
      tn[i] = static_cast<int>(((x - y) % spec_.p + spec_.p) % spec_.p);
    }
    trim(tn);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  // r0 is the gcd, a nonzero constant; normalize t0 by its inverse.
  int g = r0.empty() ? 0 : r0[0];
  int ig = mod_inverse(g, spec_.p);
  Poly res = t0;
  for (int& c : res) c = static_cast<int>((static_cast<std::int64_t>(c) * ig) % spec_.p);
  res = poly_rem(res, spec_.modulus, spec_.p);
  res.resize(static_cast<std::size_t>(spec_.m), 0);
  return index_of(res);
}

int Field::inv_i(int a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  if (!inv_table_.empty()) return inv_table_[static_cast<std::size_t>(a)];
  return inv_slow(a);
}

int Field::primitive_index() const {
  for (int a = 1; a < q_; ++a) {
    int ord = 1;
    int cur = a;
    while (cur != 1) {
      cur = mul_i(cur, a);
      ++ord;
    }
    if (ord == q_ - 1) return a;
  }
  throw DomainError("no primitive element found");  // unreachable
}

std::string Field::repr(int index) const {
  if (spec_.m == 1) return std::to_string(index);
  std::vector<int> c = coeffs_of(index);
  std::string out;
  for (int i = spec_.m - 1; i >= 0; --i) {
    int v = c[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(v);
    } else {
      if (v != 1) out += std::to_string(v);
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

const Field& check_same(const GfElement& a, const GfElement& b) {
  if (!a.field().same(b.field())) throw DomainError("field mismatch");
  return a.field();
}

}  // namespace

GfElement GfElement::operator+(const GfElement& o) const {
  const Field& f = check_same(*this, o);
  return GfElement(field_, f.add_i(index_, o.index_));
}

GfElement GfElement::operator-(const GfElement& o) const {
  const Field& f = check_same(*this, o);
  return GfElement(field_, f.sub_i(index_, o.index_));
}

GfElement GfElement::operator*(const GfElement& o) const {
  const Field& f = check_same(*this, o);
  return GfElement(field_, f.mul_i(index_, o.index_));
}

GfElement GfElement::operator-() const { return GfElement(field_, field_->neg_i(index_)); }

GfElement GfElement::inverse() const { return GfElement(field_, field_->inv_i(index_)); }

bool GfElement::operator==(const GfElement& o) const {
  return field_->same(*o.field_) && index_ == o.index_;
}

}  // namespace avgord
