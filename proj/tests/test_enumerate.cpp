#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "avgord/group.hpp"

using avgord::DomainError;
using avgord::EnumeratedGroup;
using avgord::EnumerateOptions;
using avgord::GroupPtr;
using avgord::GroupSpec;
using avgord::Permutation;
using avgord::ResourceError;

namespace {

int index_of_repr(const avgord::EnumeratedGroup& g, const std::string& repr) {
  for (int i = 0; i < g.order(); ++i)
    if (g.element_repr(i) == repr) return i;
  FAIL("element not found: ", repr);
  return -1;
}

}  // namespace

TEST_CASE("orders of named families match the classical formulas") {
  const std::map<std::string, int> expected = {
      {"A5", 60},       {"A6", 360},      {"A7", 2520},    {"S2", 2},        {"S5", 120},
      {"S6", 720},      {"C12", 12},      {"C1", 1},       {"D3", 6},        {"D12", 24},
      {"Q8", 8},        {"SL(2,4)", 60},  {"SL(2,5)", 120}, {"SL(2,9)", 720},
      {"PSL(2,4)", 60}, {"PSL(2,5)", 60}, {"PSL(2,7)", 168}, {"PSL(2,8)", 504},
      {"PSL(2,9)", 360}, {"PSL(2,11)", 660}, {"PSL(2,13)", 1092}, {"A5 x C7", 420},
  };
  for (const auto& [spec, order] : expected) {
    CAPTURE(spec);
    CHECK(EnumeratedGroup::enumerate(spec)->order() == order);
  }
}

TEST_CASE("trivial specs enumerate to the trivial group") {
  for (const char* spec : {"A1", "A2", "S1", "C1", "perm:[]"}) {
    GroupPtr g = EnumeratedGroup::enumerate(spec);
    CHECK(g->order() == 1);
    CHECK(g->generator_indices().empty());
    CHECK(g->element_order(0) == 1);
  }
}

TEST_CASE("identity and inverse laws") {
  GroupPtr g = EnumeratedGroup::enumerate("S4");
  for (int a = 0; a < g->order(); ++a) {
    CHECK(g->mul(g->identity(), a) == a);
    CHECK(g->mul(a, g->identity()) == a);
    CHECK(g->mul(a, g->inv(a)) == g->identity());
    CHECK(g->mul(g->inv(a), a) == g->identity());
  }
  CHECK_THROWS_AS(g->mul(0, g->order()), DomainError);
  CHECK_THROWS_AS(g->inv(-1), DomainError);
}

TEST_CASE("multiplication applies the right factor first") {
  // (1 2) * (1 3) sends 1 -> 3, 3 -> 2, 2 -> 1, i.e. the cycle (1 3 2),
  // worked by hand from (a*b)(x) = a(b(x))
  GroupPtr g = EnumeratedGroup::enumerate("S3");
  int t12 = index_of_repr(*g, "(1 2)");
  int t13 = index_of_repr(*g, "(1 3)");
  CHECK(g->element_repr(g->mul(t12, t13)) == "(1 3 2)");
  CHECK(g->element_repr(g->mul(t13, t12)) == "(1 2 3)");
  // inverses: a transposition is its own inverse, a 3-cycle reverses
  CHECK(g->inv(t12) == t12);
  CHECK(g->element_repr(g->inv(index_of_repr(*g, "(1 2 3)"))) == "(1 3 2)");
}

TEST_CASE("element orders: identity, cycles, unipotents") {
  GroupPtr a5 = EnumeratedGroup::enumerate("A5");
  CHECK(a5->element_order(a5->identity()) == 1);
  CHECK(a5->element_order(index_of_repr(*a5, "(1 2 3 4 5)")) == 5);
  CHECK(a5->element_order(index_of_repr(*a5, "(1 2 3)")) == 3);

  GroupPtr l27 = EnumeratedGroup::enumerate("PSL(2,7)");
  CHECK(l27->element_order(index_of_repr(*l27, "[[1,1],[0,1]]")) == 7);
}

TEST_CASE("cycle-lcm fast path equals the iterative definition on all of S6") {
  GroupPtr g = EnumeratedGroup::enumerate("S6");
  REQUIRE(g->order() == 720);
  for (int a = 0; a < g->order(); ++a) {
    std::uint64_t iterative = 1;
    int cur = a;
    while (cur != g->identity()) {
      cur = g->mul(cur, a);
      ++iterative;
    }
    CHECK(g->element_order(a) == iterative);
  }
}

TEST_CASE("enumeration is deterministic") {
  for (const char* spec : {"A5", "PSL(2,9)", "SL(2,7)", "D8", "A5 x C3"}) {
    GroupPtr a = EnumeratedGroup::enumerate(spec);
    GroupPtr b = EnumeratedGroup::enumerate(spec);
    REQUIRE(a->order() == b->order());
    for (int i = 0; i < a->order(); ++i) CHECK(a->element_repr(i) == b->element_repr(i));
  }
}

TEST_CASE("explicit generators close to the expected group") {
  GroupPtr s3 = EnumeratedGroup::enumerate("perm:[(1 2 3),(1 2)]");
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  GroupPtr v4 = EnumeratedGroup::enumerate("perm:[(1 2)(3 4),(1 3)(2 4)]");
  CHECK(v4->order() == 4);
  CHECK(v4->is_abelian());
}

TEST_CASE("enumeration cap raises a resource error with the partial count") {
  EnumerateOptions small;
  small.max_order = 100;
  CHECK_THROWS_AS(EnumeratedGroup::enumerate("S5", small), ResourceError);
  try {
    // explicit generators dodge the up-front prediction, so the BFS itself
    // must stop at the cap
    EnumeratedGroup::enumerate("perm:[(1 2),(1 2 3 4 5 6 7)]", small);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.partial_count() == 101);
    CHECK(e.cap() == 100);
  }
}

TEST_CASE("products multiply componentwise") {
  GroupPtr g = EnumeratedGroup::enumerate("A5 x C3");
  CHECK(g->order() == 180);
  CHECK(g->element_repr(0) == "((), ())");
  // element orders are lcms of the component orders
  std::uint64_t max_order = 0;
  for (int i = 0; i < g->order(); ++i) max_order = std::max(max_order, g->element_order(i));
  CHECK(max_order == 15);
}

TEST_CASE("abelian detection") {
  CHECK(EnumeratedGroup::enumerate("C24")->is_abelian());
  CHECK(EnumeratedGroup::enumerate("C2 x C2 x C2")->is_abelian());
  CHECK_FALSE(EnumeratedGroup::enumerate("S3")->is_abelian());
  CHECK_FALSE(EnumeratedGroup::enumerate("Q8")->is_abelian());
}

TEST_CASE("closure holds exhaustively on a mid-size group") {
  GroupPtr g = EnumeratedGroup::enumerate("SL(2,5)");
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b) {
      int m = g->mul(a, b);
      REQUIRE(m >= 0);
      REQUIRE(m < g->order());
    }
}

TEST_CASE("extension-field matrix groups reach the classical orders") {
  // GF(16), GF(25) and GF(27) force the extra diagonal generator; the
  // closure reaching q(q^2-1)(/2) certifies the generating set
  CHECK(EnumeratedGroup::enumerate("PSL(2,16)")->order() == 4080);
  CHECK(EnumeratedGroup::enumerate("SL(2,16)")->order() == 4080);
  CHECK(EnumeratedGroup::enumerate("PSL(2,25)")->order() == 7800);
  CHECK(EnumeratedGroup::enumerate("SL(2,25)")->order() == 15600);
  CHECK(EnumeratedGroup::enumerate("PSL(2,27)")->order() == 9828);
  CHECK(EnumeratedGroup::enumerate("SL(2,27)")->order() == 19656);
}

TEST_CASE("random explicit permutation groups satisfy the core invariants") {
  std::mt19937_64 rng(20260811);
  for (int trial = 0; trial < 12; ++trial) {
    const int degree = 5 + (trial % 2);
    GroupSpec::Explicit ex;
    ex.degree = degree;
    for (int k = 0; k < 2; ++k) {
      std::vector<std::uint8_t> images(static_cast<std::size_t>(degree));
      std::iota(images.begin(), images.end(), static_cast<std::uint8_t>(0));
      std::shuffle(images.begin(), images.end(), rng);
      ex.generators.push_back(Permutation::from_images(std::move(images)));
    }
    GroupSpec spec;
    spec.node = ex;
    CAPTURE(spec.str());
    GroupPtr g = EnumeratedGroup::enumerate(spec);

    // Lagrange against the ambient symmetric group
    std::uint64_t ambient = 1;
    for (int i = 2; i <= degree; ++i) ambient *= static_cast<std::uint64_t>(i);
    CHECK(ambient % static_cast<std::uint64_t>(g->order()) == 0);

    std::uint64_t psi_direct = 0;
    for (int a = 0; a < g->order(); ++a) {
      CHECK(g->mul(a, g->inv(a)) == g->identity());
      CHECK(static_cast<std::uint64_t>(g->order()) % g->element_order(a) == 0);
      psi_direct += g->element_order(a);
      for (int b = 0; b < g->order(); ++b) {
        int m = g->mul(a, b);
        CHECK(m >= 0);
        CHECK(m < g->order());
      }
    }
    CHECK(psi_direct >= 2 * static_cast<std::uint64_t>(g->order()) - 1);

    // determinism on re-enumeration
    GroupPtr again = EnumeratedGroup::enumerate(spec);
    REQUIRE(again->order() == g->order());
    for (int a = 0; a < g->order(); ++a)
      CHECK(again->element_repr(a) == g->element_repr(a));
  }
}

TEST_CASE("generator indices point at the generators") {
  GroupPtr g = EnumeratedGroup::enumerate("S5");
  CHECK(g->generator_indices().size() == 2);
  for (int idx : g->generator_indices()) {
    CHECK(idx > 0);
    CHECK(idx < g->order());
  }
}
