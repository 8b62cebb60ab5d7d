#include <doctest.h>

#include <algorithm>
#include <set>

#include "avgord/stats.hpp"
#include "avgord/structure.hpp"

using namespace avgord;

namespace {

int index_of_repr(const EnumeratedGroup& g, const std::string& repr) {
  for (int i = 0; i < g.order(); ++i)
    if (g.element_repr(i) == repr) return i;
  FAIL("element not found: ", repr);
  return -1;
}

// Fixpoint oracle: grow the set by all pairwise products until stable.
std::set<int> oracle_generated(const EnumeratedGroup& g, std::set<int> s) {
  s.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = s;
    for (int a : s)
      for (int b : s) next.insert(g.mul(a, b));
    if (next.size() != s.size()) {
      s = std::move(next);
      grew = true;
    }
  }
  return s;
}

// Oracle: conjugate the seed by every group element, then generate.
std::set<int> oracle_normal_closure(const EnumeratedGroup& g, std::set<int> seed) {
  std::set<int> s = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> conjugates;
    for (int a : s)
      for (int x = 0; x < g.order(); ++x) conjugates.insert(g.mul(g.mul(g.inv(x), a), x));
    std::set<int> next = oracle_generated(g, conjugates);
    if (next.size() != s.size()) {
      s = std::move(next);
      grew = true;
    }
  }
  return s;
}

// Oracle: classes as orbits under conjugation by every element.
std::vector<int> oracle_class_sizes(const EnumeratedGroup& g) {
  std::vector<int> sizes;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int a = 0; a < g.order(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    std::set<int> orbit;
    for (int x = 0; x < g.order(); ++x) orbit.insert(g.mul(g.mul(g.inv(x), a), x));
    for (int e : orbit) seen[static_cast<std::size_t>(e)] = true;
    sizes.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::set<int> to_set(const ElementSet& s) { return {s.members.begin(), s.members.end()}; }

}  // namespace

TEST_CASE("generated subgroups") {
  GroupPtr a5 = EnumeratedGroup::enumerate("A5");
  int c3 = index_of_repr(*a5, "(1 2 3)");
  CHECK(generated_subgroup(*a5, std::array{c3}).size() == 3);
  CHECK(generated_subgroup(*a5, a5->generator_indices()).size() == 60);
  CHECK(generated_subgroup(*a5, std::span<const int>{}).members == std::vector<int>{0});

  // against the pairwise-product fixpoint oracle
  GroupPtr s4 = EnumeratedGroup::enumerate("S4");
  int t = index_of_repr(*s4, "(1 2)");
  int c = index_of_repr(*s4, "(1 2 3 4)");
  CHECK(to_set(generated_subgroup(*s4, std::array{t})) == oracle_generated(*s4, {t}));
  CHECK(to_set(generated_subgroup(*s4, std::array{t, c})) == oracle_generated(*s4, {t, c}));
}

TEST_CASE("normal closures against the brute-force oracle") {
  GroupPtr s3 = EnumeratedGroup::enumerate("S3");
  int t = index_of_repr(*s3, "(1 2)");
  ElementSet cl = normal_closure(*s3, std::array{t});
  CHECK(cl.size() == 6);
  CHECK(to_set(cl) == oracle_normal_closure(*s3, {t}));

  GroupPtr a4 = EnumeratedGroup::enumerate("A4");
  int c3 = index_of_repr(*a4, "(1 2 3)");
  ElementSet cl4 = normal_closure(*a4, std::array{c3});
  CHECK(cl4.size() == 12);
  CHECK(to_set(cl4) == oracle_normal_closure(*a4, {c3}));

  int dbl = index_of_repr(*a4, "(1 2)(3 4)");
  CHECK(normal_closure(*a4, std::array{dbl}).size() == 4);  // the Klein four-group

  // in an abelian group the closure is just the cyclic subgroup
  GroupPtr c12 = EnumeratedGroup::enumerate("C12");
  for (int a = 0; a < c12->order(); ++a)
    CHECK(to_set(normal_closure(*c12, std::array{a})) ==
          to_set(generated_subgroup(*c12, std::array{a})));
}

TEST_CASE("conjugacy classes") {
  GroupPtr a5 = EnumeratedGroup::enumerate("A5");
  ClassPartition part = conjugacy_classes(*a5);
  std::vector<int> sizes;
  for (const auto& cls : part.classes) sizes.push_back(cls.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 12, 12, 15, 20});
  CHECK(sizes == oracle_class_sizes(*a5));

  GroupPtr s3 = EnumeratedGroup::enumerate("S3");
  CHECK(oracle_class_sizes(*s3) == std::vector<int>{1, 2, 3});

  // the identity's class is a singleton and classes partition the group
  CHECK(part.classes[0].members == std::vector<int>{0});
  std::size_t total = 0;
  for (const auto& cls : part.classes) total += cls.members.size();
  CHECK(total == 60);
  for (int e = 0; e < a5->order(); ++e)
    CHECK(part.classes[static_cast<std::size_t>(part.class_of[static_cast<std::size_t>(e)])]
              .contains(e));

  GroupPtr c8 = EnumeratedGroup::enumerate("C8");
  CHECK(conjugacy_classes(*c8).classes.size() == 8);  // abelian: all singletons
}

TEST_CASE("derived series and solvability") {
  auto orders = [](const std::vector<ElementSet>& series) {
    std::vector<int> out;
    for (const auto& term : series) out.push_back(term.size());
    return out;
  };
  CHECK(orders(derived_series(*EnumeratedGroup::enumerate("S4"))) ==
        std::vector<int>{24, 12, 4, 1});
  CHECK(orders(derived_series(*EnumeratedGroup::enumerate("A5"))) == std::vector<int>{60, 60});
  CHECK(orders(derived_series(*EnumeratedGroup::enumerate("C12"))) == std::vector<int>{12, 1});
  CHECK(orders(derived_series(*EnumeratedGroup::enumerate("C1"))) == std::vector<int>{1});

  CHECK(is_solvable(*EnumeratedGroup::enumerate("S4")));
  CHECK(is_solvable(*EnumeratedGroup::enumerate("Q8")));
  CHECK(is_solvable(*EnumeratedGroup::enumerate("C2 x C2 x C2")));
  CHECK_FALSE(is_solvable(*EnumeratedGroup::enumerate("A5")));
  CHECK_FALSE(is_solvable(*EnumeratedGroup::enumerate("SL(2,5)")));

  // each term is normal in the previous one and in G, and contained in it
  GroupPtr s4 = EnumeratedGroup::enumerate("S4");
  auto series = derived_series(*s4);
  for (std::size_t i = 1; i < series.size(); ++i) {
    CHECK(std::includes(series[i - 1].members.begin(), series[i - 1].members.end(),
                        series[i].members.begin(), series[i].members.end()));
    CHECK(is_normal(*s4, series[i]));
  }
}

TEST_CASE("generator-pair commutators give the same derived subgroup as all pairs") {
  // oracle: commutators over all member pairs, then generate
  for (const char* spec : {"S3", "S4", "A4", "D6", "Q8", "SL(2,5)", "PSL(2,7)"}) {
    CAPTURE(spec);
    GroupPtr g = EnumeratedGroup::enumerate(spec);
    REQUIRE(g->order() <= 200);
    std::set<int> comms;
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b)
        comms.insert(g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b)));
    std::set<int> oracle = oracle_generated(*g, comms);
    CHECK(to_set(derived_series(*g)[1]) == oracle);
  }
}

TEST_CASE("normality") {
  GroupPtr s3 = EnumeratedGroup::enumerate("S3");
  int r = index_of_repr(*s3, "(1 2 3)");
  int t = index_of_repr(*s3, "(1 2)");
  CHECK(is_normal(*s3, generated_subgroup(*s3, std::array{r})));        // A3 inside S3
  CHECK_FALSE(is_normal(*s3, generated_subgroup(*s3, std::array{t})));  // <(1 2)> inside S3
  std::vector<int> all(static_cast<std::size_t>(s3->order()));
  for (int i = 0; i < s3->order(); ++i) all[static_cast<std::size_t>(i)] = i;
  CHECK(is_normal(*s3, make_element_set(*s3, all)));  // G inside G
  CHECK_THROWS_WITH_AS(is_normal(*s3, make_element_set(*s3, {0, t, r})), "not a subgroup",
                       DomainError);

  // a set built on one group cannot be used with another
  GroupPtr s4 = EnumeratedGroup::enumerate("S4");
  ElementSet foreign = make_element_set(*s4, {0, 1});
  CHECK_THROWS_AS(is_normal(*s3, foreign), DomainError);
}

TEST_CASE("simplicity under the non-abelian convention") {
  CHECK(is_simple(*EnumeratedGroup::enumerate("A5")));
  CHECK(is_simple(*EnumeratedGroup::enumerate("PSL(2,7)")));
  CHECK_FALSE(is_simple(*EnumeratedGroup::enumerate("S5")));
  CHECK_FALSE(is_simple(*EnumeratedGroup::enumerate("C7")));  // abelian excluded
  CHECK_FALSE(is_simple(*EnumeratedGroup::enumerate("SL(2,5)")));
  CHECK_THROWS_AS(is_simple(*EnumeratedGroup::enumerate("C1")), DomainError);
}

TEST_CASE("solvable radical") {
  CHECK(solvable_radical(*EnumeratedGroup::enumerate("A5")).size() == 1);
  CHECK(solvable_radical(*EnumeratedGroup::enumerate("S4")).size() == 24);
  CHECK(solvable_radical(*EnumeratedGroup::enumerate("A5 x C7")).size() == 7);
  CHECK(solvable_radical(*EnumeratedGroup::enumerate("S5")).size() == 1);
  // SL(2,5) has the order-2 center as its radical
  GroupPtr sl = EnumeratedGroup::enumerate("SL(2,5)");
  ElementSet rad = solvable_radical(*sl);
  CHECK(rad.size() == 2);
  CHECK(is_normal(*sl, rad));
  // a simple group has a trivial radical
  GroupPtr psl = EnumeratedGroup::enumerate("PSL(2,7)");
  REQUIRE(is_simple(*psl));
  CHECK(solvable_radical(*psl).size() == 1);
}

TEST_CASE("quotients") {
  GroupPtr s4 = EnumeratedGroup::enumerate("S4");
  int dbl = index_of_repr(*s4, "(1 2)(3 4)");
  ElementSet v4 = normal_closure(*s4, std::array{dbl});
  REQUIRE(v4.size() == 4);

  GroupPtr q = quotient(*s4, v4);
  CHECK(q->order() == 6);
  CHECK_FALSE(q->is_abelian());  // together with order 6 this certifies S3
  CHECK(avg_order(*q) == avg_order(*EnumeratedGroup::enumerate("S3")));
  CHECK(avg_order(*q) == Rational(13, 6));

  // G/G is trivial; G/{e} preserves the spectrum
  std::vector<int> all(static_cast<std::size_t>(s4->order()));
  for (int i = 0; i < s4->order(); ++i) all[static_cast<std::size_t>(i)] = i;
  CHECK(quotient(*s4, make_element_set(*s4, all))->order() == 1);
  GroupPtr same = quotient(*s4, make_element_set(*s4, {0}));
  CHECK(order_spectrum(*same) == order_spectrum(*s4));

  // non-normal subgroup is rejected
  int t = index_of_repr(*s4, "(1 2)");
  CHECK_THROWS_AS(quotient(*s4, generated_subgroup(*s4, std::array{t})), DomainError);

  // canonical representatives are coset minima
  Quotient with_map = quotient_with_map(*s4, v4);
  for (std::size_t i = 0; i < with_map.reps.size(); ++i) {
    int rep = with_map.reps[i];
    for (int e = 0; e < s4->order(); ++e)
      if (with_map.coset_of[static_cast<std::size_t>(e)] == static_cast<int>(i))
        CHECK(rep <= e);
  }
}

TEST_CASE("centralizers") {
  GroupPtr a5 = EnumeratedGroup::enumerate("A5");
  CHECK(centralizer(*a5, a5->identity()).size() == 60);
  int c5 = index_of_repr(*a5, "(1 2 3 4 5)");
  ElementSet cent = centralizer(*a5, c5);
  CHECK(cent.size() == 5);  // class size 12 = 60/5
  GroupPtr c12 = EnumeratedGroup::enumerate("C12");
  for (int a = 0; a < c12->order(); ++a) CHECK(centralizer(*c12, a).size() == 12);
}

TEST_CASE("normal subgroup inventory") {
  GroupPtr s4 = EnumeratedGroup::enumerate("S4");
  auto inventory = normal_subgroup_inventory(*s4);
  std::vector<int> sizes;
  for (const auto& n : inventory) sizes.push_back(n.size());
  CHECK(sizes == std::vector<int>{4, 12, 24});  // V4, A4, S4
  for (const auto& n : inventory) CHECK(is_normal(*s4, n));

  GroupPtr a5 = EnumeratedGroup::enumerate("A5");
  auto simple_inventory = normal_subgroup_inventory(*a5);
  CHECK(simple_inventory.size() == 1);
  CHECK(simple_inventory[0].size() == 60);
}
