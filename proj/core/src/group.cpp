#include "avgord/group.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "avgord/gf.hpp"

namespace avgord {

namespace {

// Above this order the n^2 multiplication table is skipped and products go
// through the realization (hash or arithmetic). 2600^2 ints is ~27 MB, which
// covers everything in the default corpus except S7/S8.
constexpr int kDenseCap = 2600;

// ---------------------------------------------------------------------------
// permutation realization

class PermRealization final : public Realization {
 public:
  PermRealization(std::vector<Permutation> elements, std::unordered_map<std::uint64_t, int> index,
                  std::unordered_map<std::string, int> index_wide)
      : elements_(std::move(elements)),
        index_(std::move(index)),
        index_wide_(std::move(index_wide)) {}

  int size() const override { return static_cast<int>(elements_.size()); }

  int lookup(const Permutation& p) const {
    if (!index_.empty()) {
      auto it = index_.find(p.pack());
      return it == index_.end() ? -1 : it->second;
    }
    auto it = index_wide_.find(key_of(p));
    return it == index_wide_.end() ? -1 : it->second;
  }

  int mul(int a, int b) const override {
    return lookup(elements_[static_cast<std::size_t>(a)] * elements_[static_cast<std::size_t>(b)]);
  }

  int inverse(int a) const override {
    return lookup(elements_[static_cast<std::size_t>(a)].inverse());
  }

  std::uint64_t order_hint(int a) const override {
    return elements_[static_cast<std::size_t>(a)].order();
  }

  std::string repr(int a) const override { return elements_[static_cast<std::size_t>(a)].str(); }

  bool conjugation_inversion_counts(std::vector<std::uint64_t>& out) const override {
    const int n = size();
    const int degree = elements_.empty() ? 0 : elements_[0].degree();
    std::vector<std::uint8_t> inv_images(static_cast<std::size_t>(n) * degree);
    for (int g = 0; g < n; ++g) {
      Permutation pi = elements_[static_cast<std::size_t>(g)].inverse();
      std::copy(pi.images().begin(), pi.images().end(),
                inv_images.begin() + static_cast<std::size_t>(g) * degree);
    }
    out.assign(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
      const auto& xi = elements_[static_cast<std::size_t>(x)].images();
      const std::uint8_t* xinv = inv_images.data() + static_cast<std::size_t>(x) * degree;
      std::uint64_t count = 0;
      for (int g = 0; g < n; ++g) {
        const auto& gi = elements_[static_cast<std::size_t>(g)].images();
        const std::uint8_t* ginv = inv_images.data() + static_cast<std::size_t>(g) * degree;
        bool match = true;
        for (int pt = 0; pt < degree; ++pt) {
          // (x^-1 g x)[pt] == (g^-1)[pt]
          if (xinv[gi[xi[static_cast<std::size_t>(pt)]]] != ginv[pt]) {
            match = false;
            break;
          }
        }
        count += match ? 1 : 0;
      }
      out[static_cast<std::size_t>(x)] = count;
    }
    return true;
  }

  static std::string key_of(const Permutation& p) {
    return std::string(reinterpret_cast<const char*>(p.images().data()), p.images().size());
  }

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<std::uint64_t, int> index_;       // degree <= 8
  std::unordered_map<std::string, int> index_wide_;    // larger degrees
};

std::unique_ptr<PermRealization> bfs_permutations(int degree, std::vector<Permutation> gens,
                                                  std::uint64_t cap) {
  const bool packed = degree <= 8;
  std::vector<Permutation> elements;
  std::unordered_map<std::uint64_t, int> index;
  std::unordered_map<std::string, int> index_wide;

  // Inserts p with the next free index; returns true when p is new.
  auto insert_fresh = [&](const Permutation& p) {
    int next = static_cast<int>(elements.size());
    if (packed) return index.emplace(p.pack(), next).second;
    return index_wide.emplace(PermRealization::key_of(p), next).second;
  };

  Permutation id = Permutation::identity(degree);
  insert_fresh(id);
  elements.push_back(std::move(id));
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& g : gens) {
      Permutation w = elements[head] * g;
      if (insert_fresh(w)) {
        if (elements.size() + 1 > cap) throw ResourceError(elements.size() + 1, cap);
        elements.push_back(std::move(w));
      }
    }
  }
  return std::make_unique<PermRealization>(std::move(elements), std::move(index),
                                           std::move(index_wide));
}

// ---------------------------------------------------------------------------
// 2x2 matrix realization over GF(q): SL(2,q) raw, PSL(2,q) with central
// normalization

struct Mat2 {
  int a, b, c, d;  // field element indices, row major
};

class MatRealization final : public Realization {
 public:
  MatRealization(FieldPtr field, bool projective, std::vector<Mat2> elements,
                 std::unordered_map<std::uint64_t, int> index)
      : field_(std::move(field)),
        projective_(projective),
        elements_(std::move(elements)),
        index_(std::move(index)) {}

  static std::uint64_t key_of(const Mat2& m) {
    return static_cast<std::uint64_t>(m.a) | (static_cast<std::uint64_t>(m.b) << 8) |
           (static_cast<std::uint64_t>(m.c) << 16) | (static_cast<std::uint64_t>(m.d) << 24);
  }

  // For odd q the class {M, -M} is represented by the matrix whose first
  // nonzero entry (row-major) is least in the canonical field order.
  static Mat2 canonical(const Field& f, bool projective, Mat2 m) {
    if (!projective || f.p() == 2) return m;
    int first = m.a != 0 ? m.a : m.b != 0 ? m.b : m.c != 0 ? m.c : m.d;
    if (f.neg_i(first) < first)
      m = Mat2{f.neg_i(m.a), f.neg_i(m.b), f.neg_i(m.c), f.neg_i(m.d)};
    return m;
  }

  Mat2 raw_mul(const Mat2& x, const Mat2& y) const {
    const Field& f = *field_;
    return Mat2{
        f.add_i(f.mul_i(x.a, y.a), f.mul_i(x.b, y.c)),
        f.add_i(f.mul_i(x.a, y.b), f.mul_i(x.b, y.d)),
        f.add_i(f.mul_i(x.c, y.a), f.mul_i(x.d, y.c)),
        f.add_i(f.mul_i(x.c, y.b), f.mul_i(x.d, y.d)),
    };
  }

  int size() const override { return static_cast<int>(elements_.size()); }

  int lookup(const Mat2& m) const {
    auto it = index_.find(key_of(canonical(*field_, projective_, m)));
    return it == index_.end() ? -1 : it->second;
  }

  int mul(int a, int b) const override {
    return lookup(raw_mul(elements_[static_cast<std::size_t>(a)],
                          elements_[static_cast<std::size_t>(b)]));
  }

  int inverse(int a) const override {
    const Mat2& m = elements_[static_cast<std::size_t>(a)];
    // adjugate; determinant is 1 throughout SL(2,q)
    return lookup(Mat2{m.d, field_->neg_i(m.b), field_->neg_i(m.c), m.a});
  }

  std::string repr(int a) const override {
    const Mat2& m = elements_[static_cast<std::size_t>(a)];
    return "[[" + field_->repr(m.a) + "," + field_->repr(m.b) + "],[" + field_->repr(m.c) + "," +
           field_->repr(m.d) + "]]";
  }

 private:
  FieldPtr field_;
  bool projective_;
  std::vector<Mat2> elements_;
  std::unordered_map<std::uint64_t, int> index_;
};

std::unique_ptr<MatRealization> bfs_matrices(const FieldPtr& field, bool projective,
                                             std::vector<Mat2> gens, std::uint64_t cap) {
  std::vector<Mat2> elements;
  std::unordered_map<std::uint64_t, int> index;
  auto canon = [&](const Mat2& m) { return MatRealization::canonical(*field, projective, m); };

  Mat2 id{1, 0, 0, 1};
  elements.push_back(canon(id));
  index.emplace(MatRealization::key_of(elements.front()), 0);

  auto raw_mul = [&](const Mat2& x, const Mat2& y) {
    const Field& f = *field;
    return Mat2{
        f.add_i(f.mul_i(x.a, y.a), f.mul_i(x.b, y.c)),
        f.add_i(f.mul_i(x.a, y.b), f.mul_i(x.b, y.d)),
        f.add_i(f.mul_i(x.c, y.a), f.mul_i(x.d, y.c)),
        f.add_i(f.mul_i(x.c, y.b), f.mul_i(x.d, y.d)),
    };
  };

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Mat2& g : gens) {
      Mat2 w = canon(raw_mul(elements[head], g));
      auto [it, fresh] = index.emplace(MatRealization::key_of(w), static_cast<int>(elements.size()));
      if (fresh) {
        if (elements.size() + 1 > cap) throw ResourceError(elements.size() + 1, cap);
        elements.push_back(w);
      }
    }
  }
  return std::make_unique<MatRealization>(field, projective, std::move(elements), std::move(index));
}

// ---------------------------------------------------------------------------
// direct product realization: index (i, j) -> i * |B| + j

class ProductRealization final : public Realization {
 public:
  ProductRealization(GroupPtr a, GroupPtr b) : a_(std::move(a)), b_(std::move(b)) {
    nb_ = b_->order();
  }

  int size() const override { return a_->order() * nb_; }

  int mul(int x, int y) const override {
    return a_->mul(x / nb_, y / nb_) * nb_ + b_->mul(x % nb_, y % nb_);
  }

  int inverse(int x) const override { return a_->inv(x / nb_) * nb_ + b_->inv(x % nb_); }

  std::uint64_t order_hint(int x) const override {
    return lcm_u64(a_->element_order(x / nb_), b_->element_order(x % nb_));
  }

  std::string repr(int x) const override {
    return "(" + a_->element_repr(x / nb_) + ", " + b_->element_repr(x % nb_) + ")";
  }

 private:
  GroupPtr a_;
  GroupPtr b_;
  int nb_ = 1;
};

// ---------------------------------------------------------------------------
// named family generators

std::vector<Permutation> alternating_generators(int n) {
  if (n < 3) return {};
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
  std::vector<int> big;
  if (n % 2 == 1)
    for (int i = 0; i < n; ++i) big.push_back(i);
  else
    for (int i = 1; i < n; ++i) big.push_back(i);
  if (big.size() >= 2) gens.push_back(Permutation::from_cycles(n, {big}));
  return gens;
}

std::vector<Permutation> symmetric_generators(int n) {
  if (n < 2) return {};
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  std::vector<int> big;
  for (int i = 0; i < n; ++i) big.push_back(i);
  gens.push_back(Permutation::from_cycles(n, {big}));
  return gens;
}

std::vector<Permutation> cyclic_generators(int n) {
  if (n < 2) return {};
  std::vector<int> cyc;
  for (int i = 0; i < n; ++i) cyc.push_back(i);
  return {Permutation::from_cycles(n, {cyc})};
}

std::vector<Permutation> dihedral_generators(int n) {
  std::vector<int> rot;
  for (int i = 0; i < n; ++i) rot.push_back(i);
  std::vector<std::uint8_t> refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((n - i) % n);
  return {Permutation::from_cycles(n, {rot}), Permutation::from_images(std::move(refl))};
}

// Left-regular action of the unit quaternions i and j on {1,-1,i,-i,j,-j,k,-k}.
std::vector<Permutation> quaternion_generators() {
  return {Permutation::from_images({2, 3, 1, 0, 6, 7, 5, 4}),
          Permutation::from_images({4, 5, 7, 6, 1, 0, 2, 3})};
}

// SL(2,q) is generated by [[1,1],[0,1]] and [[0,1],[-1,0]] when q is prime;
// for proper prime powers those matrices only reach the prime-subfield copy,
// so a diagonal [[a,0],[0,a^-1]] with a primitive is appended.
std::vector<Mat2> sl2_generators(const Field& f) {
  std::vector<Mat2> gens;
  gens.push_back(Mat2{1, 1, 0, 1});
  gens.push_back(Mat2{0, 1, f.neg_i(1), 0});
  if (f.m() > 1) {
    int a = f.primitive_index();
    gens.push_back(Mat2{a, 0, 0, f.inv_i(a)});
  }
  return gens;
}

}  // namespace

// ---------------------------------------------------------------------------
// EnumeratedGroup

EnumeratedGroup::EnumeratedGroup(PrivateTag, std::unique_ptr<const Realization> realization,
                                 std::vector<int> generators, std::string spec_text)
    : realization_(std::move(realization)),
      order_(realization_->size()),
      generators_(std::move(generators)),
      spec_text_(std::move(spec_text)) {}

EnumeratedGroup::~EnumeratedGroup() = default;

GroupPtr EnumeratedGroup::finish(std::unique_ptr<const Realization> realization,
                                 std::vector<int> generators, std::string spec_text) {
  auto group = std::make_shared<EnumeratedGroup>(PrivateTag{}, std::move(realization),
                                                 std::move(generators), std::move(spec_text));
  const int n = group->order_;
  const Realization& real = *group->realization_;

  if (n <= kDenseCap) {
    group->dense_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        group->dense_[static_cast<std::size_t>(a) * n + b] = real.mul(a, b);
  }

  group->inverse_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) group->inverse_[static_cast<std::size_t>(a)] = real.inverse(a);

  group->orders_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::uint64_t hint = real.order_hint(a);
    if (hint == 0) {
      hint = 1;
      int cur = a;
      while (cur != 0) {
        cur = group->mul(cur, a);
        ++hint;
      }
    }
    group->orders_[static_cast<std::size_t>(a)] = hint;
  }

  group->abelian_ = true;
  for (int g : group->generators_)
    for (int h : group->generators_)
      if (group->mul(g, h) != group->mul(h, g)) {
        group->abelian_ = false;
        break;
      }

  return group;
}

void EnumeratedGroup::check_index(int a) const {
  if (a < 0 || a >= order_) throw DomainError("element index out of range");
}

int EnumeratedGroup::mul(int a, int b) const {
  check_index(a);
  check_index(b);
  if (!dense_.empty()) return dense_[static_cast<std::size_t>(a) * order_ + b];
  return realization_->mul(a, b);
}

int EnumeratedGroup::inv(int a) const {
  check_index(a);
  return inverse_[static_cast<std::size_t>(a)];
}

std::uint64_t EnumeratedGroup::element_order(int a) const {
  check_index(a);
  return orders_[static_cast<std::size_t>(a)];
}

std::string EnumeratedGroup::element_repr(int a) const {
  check_index(a);
  return realization_->repr(a);
}

std::vector<std::uint64_t> EnumeratedGroup::conjugation_inversion_counts() const {
  std::vector<std::uint64_t> out;
  if (realization_->conjugation_inversion_counts(out)) return out;
  const int n = order_;
  out.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    const int xi = inv(x);
    std::uint64_t count = 0;
    for (int g = 0; g < n; ++g)
      count += (mul(mul(xi, g), x) == inv(g)) ? 1 : 0;
    out[static_cast<std::size_t>(x)] = count;
  }
  return out;
}

GroupPtr EnumeratedGroup::from_realization(std::unique_ptr<const Realization> realization,
                                           std::vector<int> generators, std::string spec_text) {
  return finish(std::move(realization), std::move(generators), std::move(spec_text));
}

GroupPtr EnumeratedGroup::enumerate(std::string_view spec_text, const EnumerateOptions& options) {
  return enumerate(parse_spec(spec_text), options);
}

GroupPtr EnumeratedGroup::enumerate(const GroupSpec& spec, const EnumerateOptions& options) {
  std::uint64_t predicted = predicted_order(spec);
  if (predicted > options.max_order && predicted != 0)
    throw ResourceError(predicted, options.max_order, true);

  if (const auto* factors = std::get_if<std::vector<GroupSpec>>(&spec.node)) {
    GroupPtr acc = enumerate((*factors)[0], options);
    for (std::size_t i = 1; i < factors->size(); ++i)
      acc = direct_product(acc, enumerate((*factors)[i], options), options);
    return acc;
  }

  const std::string text = spec.str();

  if (const auto* ex = std::get_if<GroupSpec::Explicit>(&spec.node)) {
    auto real = bfs_permutations(ex->degree, ex->generators, options.max_order);
    std::vector<int> gen_indices;
    for (const Permutation& g : ex->generators) {
      int idx = real->lookup(g);
      if (idx != 0 && std::find(gen_indices.begin(), gen_indices.end(), idx) == gen_indices.end())
        gen_indices.push_back(idx);
    }
    return finish(std::move(real), std::move(gen_indices), text);
  }

  const auto& named = std::get<GroupSpec::Named>(spec.node);
  if (named.family == Family::psl2 || named.family == Family::sl2) {
    FieldPtr field = Field::gf(named.n);
    bool projective = named.family == Family::psl2;
    std::vector<Mat2> gens = sl2_generators(*field);
    auto real = bfs_matrices(field, projective, gens, options.max_order);
    std::vector<int> gen_indices;
    for (const Mat2& g : gens) {
      int idx = real->lookup(g);
      if (idx != 0 && std::find(gen_indices.begin(), gen_indices.end(), idx) == gen_indices.end())
        gen_indices.push_back(idx);
    }
    return finish(std::move(real), std::move(gen_indices), text);
  }

  int n = static_cast<int>(named.n);
  std::vector<Permutation> gens;
  int degree = 1;
  switch (named.family) {
    case Family::alternating: gens = alternating_generators(n); degree = std::max(1, n); break;
    case Family::symmetric: gens = symmetric_generators(n); degree = std::max(1, n); break;
    case Family::cyclic: gens = cyclic_generators(n); degree = std::max(1, n); break;
    case Family::dihedral: gens = dihedral_generators(n); degree = n; break;
    case Family::quaternion8: gens = quaternion_generators(); degree = 8; break;
    default: throw DomainError("unhandled family");
  }
  auto real = bfs_permutations(degree, gens, options.max_order);
  std::vector<int> gen_indices;
  for (const Permutation& g : gens) {
    int idx = real->lookup(g);
    if (idx != 0 && std::find(gen_indices.begin(), gen_indices.end(), idx) == gen_indices.end())
      gen_indices.push_back(idx);
  }
  return finish(std::move(real), std::move(gen_indices), text);
}

GroupPtr EnumeratedGroup::direct_product(Ptr a, Ptr b, const EnumerateOptions& options) {
  std::uint64_t total = static_cast<std::uint64_t>(a->order()) * static_cast<std::uint64_t>(b->order());
  if (total > options.max_order) throw ResourceError(total, options.max_order, true);

  const int nb = b->order();
  std::vector<int> gens;
  for (int g : a->generator_indices()) gens.push_back(g * nb);
  for (int g : b->generator_indices()) gens.push_back(g);

  std::string text = a->spec_text() + " x " + b->spec_text();
  return finish(std::make_unique<ProductRealization>(std::move(a), std::move(b)), std::move(gens),
                std::move(text));
}

}  // namespace avgord
