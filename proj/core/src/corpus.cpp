#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "avgord/criterion.hpp"

namespace avgord {

namespace {

// Everything the suites need about one corpus group, computed once.
struct Analysis {
  GroupPtr g;
  ClassificationReport report;
  ClassPartition classes;
  std::vector<ElementSet> inventory;
  ElementSet radical;
  std::vector<std::uint64_t> inner_counts;  // per-conjugator inversion counts
};

Analysis analyze(GroupPtr g) {
  Analysis a;
  a.g = std::move(g);
  a.report = classify(*a.g);
  a.classes = conjugacy_classes(*a.g);
  a.inventory = normal_subgroup_inventory(*a.g);
  a.radical = solvable_radical(*a.g);
  a.inner_counts = a.g->conjugation_inversion_counts();
  return a;
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& failure_detail) {
    if (ok) {
      ++result_.pass;
    } else {
      ++result_.fail;
      if (result_.failures.size() < 50) result_.failures.push_back(failure_detail);
    }
  }

  void vacuous() { ++result_.vacuous; }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// ---------------------------------------------------------------------------
// individual suites

SuiteResult floor_suite(const std::vector<Analysis>& all) {
  Suite suite("average-order floor (2 - 1/|G|)");
  for (const Analysis& a : all) {
    const auto& r = a.report;
    const Rational n_inv(1, static_cast<std::int64_t>(r.order));
    const Rational floor = Rational(2) - n_inv;
    bool floor_ok = r.o >= floor;
    bool equality_iff = (r.o == floor) == r.elementary_abelian_2;
    bool sep_ok = r.elementary_abelian_2 || r.o >= Rational(2) + n_inv;
    suite.check(floor_ok && equality_iff && sep_ok,
                r.spec + ": o = " + r.o.str() + ", floor " + floor.str());
  }
  return suite.take();
}

SuiteResult odd_floor_suite(const std::vector<Analysis>& all) {
  Suite suite("odd-order floor (3 - 2/|G|)");
  for (const Analysis& a : all) {
    const auto& r = a.report;
    if (r.order % 2 == 0) {
      suite.vacuous();
      continue;
    }
    Rational floor = Rational(3) - Rational(2, static_cast<std::int64_t>(r.order));
    suite.check(r.o >= floor, r.spec + ": o = " + r.o.str() + " below odd floor " + floor.str());
  }
  return suite.take();
}

SuiteResult coprime_product_suite(const std::vector<Analysis>& all, const VerifyOptions& options,
                                  std::uint64_t* pair_count) {
  Suite suite("coprime product multiplicativity");
  *pair_count = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      std::uint64_t na = all[i].report.order, nb = all[j].report.order;
      if (gcd_u64(na, nb) != 1) continue;
      GroupPtr prod;
      try {
        prod = EnumeratedGroup::direct_product(all[i].g, all[j].g, options.enumerate);
      } catch (const ResourceError&) {
        suite.vacuous();  // pair exceeds the cap; skipped, not failed
        continue;
      }
      ++*pair_count;
      Rational expected = all[i].report.o * all[j].report.o;
      Rational actual = avg_order(*prod);
      suite.check(actual == expected, all[i].report.spec + " x " + all[j].report.spec + ": o = " +
                                          actual.str() + " != " + expected.str());
    }
  return suite.take();
}

SuiteResult quotient_suite(const std::vector<Analysis>& all, std::uint64_t* instance_count) {
  Suite suite("quotient monotonicity, coset orders, coset psi additivity");
  *instance_count = 0;
  for (const Analysis& a : all) {
    const EnumeratedGroup& g = *a.g;
    for (const ElementSet& n : a.inventory) {
      ++*instance_count;
      Quotient q = quotient_with_map(g, n);
      const std::string label = a.report.spec + " with |N| = " + std::to_string(n.size());

      bool divisibility = true;
      for (int e = 0; e < g.order() && divisibility; ++e) {
        std::uint64_t coset_order =
            q.group->element_order(q.coset_of[static_cast<std::size_t>(e)]);
        if (g.element_order(e) % coset_order != 0) divisibility = false;
      }
      suite.check(divisibility, label + ": coset order does not divide an element order");

      std::uint64_t coset_psi = 0;
      for (int e = 0; e < g.order(); ++e) coset_psi += g.element_order(e);
      // the partition into cosets must account for psi exactly
      std::uint64_t by_cosets = 0;
      std::vector<std::uint64_t> per_coset(static_cast<std::size_t>(q.group->order()), 0);
      for (int e = 0; e < g.order(); ++e)
        per_coset[static_cast<std::size_t>(q.coset_of[static_cast<std::size_t>(e)])] +=
            g.element_order(e);
      for (std::uint64_t s : per_coset) by_cosets += s;
      suite.check(by_cosets == coset_psi && coset_psi == a.report.psi,
                  label + ": psi does not split over cosets");

      Rational oq = avg_order(*q.group);
      suite.check(oq < a.report.o,
                  label + ": o(G/N) = " + oq.str() + " not below o(G) = " + a.report.o.str());
    }
  }
  return suite.take();
}

SuiteResult nonsolvable_bounds_suite(const std::vector<Analysis>& all) {
  Suite suite("non-solvable bounds (floor 311/100, involution densities, psi bound)");
  for (const Analysis& a : all) {
    const auto& r = a.report;
    if (r.solvable) {
      suite.vacuous();
      continue;
    }
    const Rational n(static_cast<std::int64_t>(r.order));
    bool floor_ok = r.o > thresholds::nonsolvable_floor();
    bool i2_ok = Rational(static_cast<std::int64_t>(r.i2)) <= Rational(4, 15) * n - Rational(1);
    bool i3_ok = Rational(static_cast<std::int64_t>(r.i3)) <= Rational(7, 20) * n - Rational(1);
    bool psi_ok = r.psi >= nonsolvable_psi_lower_bound(r.order, r.i2, r.i3);
    suite.check(floor_ok && i2_ok && i3_ok && psi_ok,
                r.spec + ": o = " + r.o.str() + ", i2 = " + std::to_string(r.i2) +
                    ", i3 = " + std::to_string(r.i3) + ", psi = " + std::to_string(r.psi));
  }
  return suite.take();
}

SuiteResult conditional_density_suite(const std::vector<Analysis>& all) {
  Suite suite("conditional involution-density bounds");
  for (const Analysis& a : all) {
    const auto& r = a.report;
    if (r.solvable) {
      suite.vacuous();
      continue;
    }
    const Rational n(static_cast<std::int64_t>(r.order));
    const Rational i2(static_cast<std::int64_t>(r.i2));
    const Rational i3(static_cast<std::int64_t>(r.i3));
    struct Case {
      bool hypothesis;
      bool conclusion;
      const char* tag;
    };
    const Case cases[] = {
        {i2 <= n / Rational(20), r.o >= thresholds::simple_floor(), "i2 <= |G|/20 -> o >= 71/20"},
        {i2 <= Rational(10, 99) * n, r.o > Rational(34479, 10000),
         "i2 <= 10|G|/99 -> o > 34479/10000"},
        {i2 < n / Rational(15), r.o > thresholds::solvable_bound(), "i2 < |G|/15 -> o > 211/60"},
        {i2 <= n / Rational(16) && i3 + Rational(1) <= n / Rational(14), r.o > Rational(19, 5),
         "i2 <= |G|/16 and i3+1 <= |G|/14 -> o > 19/5"},
    };
    for (const Case& c : cases) {
      if (!c.hypothesis) {
        suite.vacuous();
        continue;
      }
      suite.check(c.conclusion, r.spec + ": " + c.tag + " with o = " + r.o.str());
    }
  }
  return suite.take();
}

// S(x*theta) = S(theta)x^-1 for x in S(theta); exhaustive for |G| <= 720.
SuiteResult inverted_translation_suite(const std::vector<Analysis>& all) {
  Suite suite("inverted-set translation identity (|G| <= 720)");
  constexpr int kCap = 720;
  for (const Analysis& a : all) {
    const EnumeratedGroup& g = *a.g;
    const int n = g.order();
    if (n > kCap) {
      suite.vacuous();
      continue;
    }

    // The tested family, as index-image tables: identity, all inner maps,
    // the inversion map on abelian groups.
    std::vector<std::pair<std::string, std::vector<int>>> family;
    {
      std::vector<int> id(static_cast<std::size_t>(n));
      for (int e = 0; e < n; ++e) id[static_cast<std::size_t>(e)] = e;
      family.emplace_back("identity", std::move(id));
    }
    for (int x = 0; x < n; ++x) {
      std::vector<int> images(static_cast<std::size_t>(n));
      const int xi = g.inv(x);
      for (int e = 0; e < n; ++e)
        images[static_cast<std::size_t>(e)] = g.mul(g.mul(xi, e), x);
      family.emplace_back("inner#" + std::to_string(x), std::move(images));
    }
    if (g.is_abelian()) {
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int e = 0; e < n; ++e) images[static_cast<std::size_t>(e)] = g.inv(e);
      family.emplace_back("inversion", std::move(images));
    }

    bool all_ok = true;
    std::string first_failure;
    for (const auto& [label, theta] : family) {
      std::vector<int> s_theta;
      for (int e = 0; e < n; ++e)
        if (theta[static_cast<std::size_t>(e)] == g.inv(e)) s_theta.push_back(e);

      for (int x : s_theta) {
        const int xi = g.inv(x);
        // S(x*theta) computed directly from the composed map
        std::vector<int> left;
        for (int e = 0; e < n; ++e) {
          int composed = theta[static_cast<std::size_t>(g.mul(g.mul(xi, e), x))];
          if (composed == g.inv(e)) left.push_back(e);
        }
        // S(theta) * x^-1
        std::vector<int> right;
        right.reserve(s_theta.size());
        for (int s : s_theta) right.push_back(g.mul(s, xi));
        std::sort(right.begin(), right.end());
        if (left != right) {
          all_ok = false;
          if (first_failure.empty())
            first_failure = a.report.spec + ": theta = " + label + ", x = " + g.element_repr(x);
        }
      }
    }
    suite.check(all_ok, first_failure);
  }
  return suite.take();
}

SuiteResult ratio_threshold_suite(const std::vector<Analysis>& all) {
  Suite suite("inversion-ratio thresholds (3/4 abelian, 4/15 solvable)");
  for (const Analysis& a : all) {
    const EnumeratedGroup& g = *a.g;
    const auto& r = a.report;
    const std::int64_t n = static_cast<std::int64_t>(r.order);

    std::uint64_t max_count = 1 + r.i2;  // identity map inverts exactly the involutions and e
    for (std::uint64_t c : a.inner_counts) max_count = std::max(max_count, c);
    if (g.is_abelian()) max_count = r.order;  // inversion map inverts everything
    Rational max_ratio(static_cast<std::int64_t>(max_count), n);

    bool ok = true;
    std::string why;
    if (max_ratio > Rational(3, 4) && !g.is_abelian()) {
      ok = false;
      why = "ratio " + max_ratio.str() + " above 3/4 on a non-abelian group";
    }
    if (max_ratio > Rational(4, 15) && !r.solvable) {
      ok = false;
      why = "ratio " + max_ratio.str() + " above 4/15 on a non-solvable group";
    }
    if (max_ratio <= Rational(4, 15)) {
      suite.vacuous();
      continue;
    }
    suite.check(ok, r.spec + ": " + why);
  }
  return suite.take();
}

SuiteResult two_ninths_suite(const std::vector<Analysis>& all) {
  Suite suite("trivial-radical two-ninths bound");
  for (const Analysis& a : all) {
    const auto& r = a.report;
    // applies to non-solvable groups with no non-trivial solvable normal
    // subgroup; for |G| > 1 a trivial radical forces non-solvability
    if (r.order <= 1 || a.radical.size() != 1) {
      suite.vacuous();
      continue;
    }
    std::uint64_t max_count = 1 + r.i2;
    for (std::uint64_t c : a.inner_counts) max_count = std::max(max_count, c);
    Rational max_ratio(static_cast<std::int64_t>(max_count), static_cast<std::int64_t>(r.order));
    bool over = max_ratio > Rational(2, 9);
    suite.check(!over || r.a5_certificate,
                r.spec + ": tested ratio " + max_ratio.str() +
                    " exceeds 2/9 without the order-60 simple certificate");
  }
  return suite.take();
}

SuiteResult index3_suite(const std::vector<Analysis>& all) {
  Suite suite("index-3 normal subgroup bound");
  for (const Analysis& a : all) {
    if (a.report.solvable) {
      suite.vacuous();
      continue;
    }
    bool found = false;
    for (const ElementSet& n : a.inventory) {
      if (static_cast<std::uint64_t>(n.size()) * 3 != a.report.order) continue;
      found = true;
      Index3Report rep = check_index3_bound(*a.g, n);
      suite.check(rep.status == Index3Status::holds, a.report.spec + ": " + rep.detail);
    }
    if (!found) suite.vacuous();
  }
  return suite.take();
}

SuiteResult spectrum_suite(const std::vector<Analysis>& all) {
  Suite suite("spectrum sanity (counts, divisibility, phi, trivial quotient)");
  for (const Analysis& a : all) {
    const EnumeratedGroup& g = *a.g;
    const auto& spec = a.report.spectrum;
    const std::uint64_t n = a.report.order;

    std::uint64_t total = 0;
    bool ok = true;
    std::string why;
    for (const auto& [order, count] : spec.counts) {
      total += count;
      if (n % order != 0) {
        ok = false;
        why = "order " + std::to_string(order) + " does not divide |G|";
      }
      if (count % euler_phi(order) != 0) {
        ok = false;
        why = "phi(" + std::to_string(order) + ") does not divide its count";
      }
    }
    if (total != n) {
      ok = false;
      why = "counts do not sum to |G|";
    }
    if (spec.i_k(1) != 1) {
      ok = false;
      why = "identity count is not 1";
    }
    std::uint64_t direct_psi = 0;
    for (int e = 0; e < g.order(); ++e) direct_psi += g.element_order(e);
    if (direct_psi != spec.psi()) {
      ok = false;
      why = "psi disagrees with the element-wise sum";
    }

    ElementSet trivial = make_element_set(g, {0});
    GroupPtr q = quotient(g, trivial);
    if (!(order_spectrum(*q) == spec)) {
      ok = false;
      why = "quotient by the trivial subgroup changed the spectrum";
    }
    suite.check(ok, a.report.spec + ": " + why);
  }
  return suite.take();
}

SuiteResult orbit_stabilizer_suite(const std::vector<Analysis>& all) {
  Suite suite("orbit-stabilizer (|class| * |centralizer| = |G|)");
  for (const Analysis& a : all) {
    const EnumeratedGroup& g = *a.g;
    bool ok = true;
    for (const ElementSet& cls : a.classes.classes) {
      ElementSet cent = centralizer(g, cls.members.front());
      if (static_cast<std::uint64_t>(cls.size()) * static_cast<std::uint64_t>(cent.size()) !=
          a.report.order) {
        ok = false;
        break;
      }
    }
    suite.check(ok, a.report.spec + ": orbit-stabilizer identity failed");
  }
  return suite.take();
}

SuiteResult closure_suite(const std::vector<Analysis>& all) {
  Suite suite("closure of the multiplication table");
  for (const Analysis& a : all) {
    const EnumeratedGroup& g = *a.g;
    const int n = g.order();
    bool ok = true;
    auto probe = [&](int x, int y) {
      int m = g.mul(x, y);
      if (m < 0 || m >= n) ok = false;
    };
    if (n <= 2000) {
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) probe(x, y);
    } else {
      std::mt19937_64 rng(0xc105u ^ static_cast<std::uint64_t>(n));
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int i = 0; i < 100'000 && ok; ++i) probe(pick(rng), pick(rng));
    }
    suite.check(ok, a.report.spec + ": product escaped the element table");
  }
  return suite.take();
}

SuiteResult lagrange_suite(const std::vector<Analysis>& all) {
  Suite suite("element orders divide |G|");
  for (const Analysis& a : all) {
    bool ok = true;
    for (const auto& [order, count] : a.report.spectrum.counts)
      if (a.report.order % order != 0) ok = false;
    suite.check(ok, a.report.spec + ": an element order does not divide |G|");
  }
  return suite.take();
}

SuiteResult derived_series_suite(const std::vector<Analysis>& all) {
  Suite suite("derived series: descending, terms normal in G");
  for (const Analysis& a : all) {
    const EnumeratedGroup& g = *a.g;
    auto series = derived_series(g);
    bool ok = true;
    std::string why;
    for (std::size_t i = 1; i < series.size(); ++i) {
      if (!std::includes(series[i - 1].members.begin(), series[i - 1].members.end(),
                         series[i].members.begin(), series[i].members.end())) {
        ok = false;
        why = "term " + std::to_string(i) + " is not contained in its predecessor";
      }
      if (!is_normal(g, series[i])) {
        ok = false;
        why = "term " + std::to_string(i) + " is not normal";
      }
    }
    if ((series.back().members.size() == 1) != a.report.solvable) {
      ok = false;
      why = "solvability flag disagrees with the series";
    }
    suite.check(ok, a.report.spec + ": " + why);
  }
  return suite.take();
}

SuiteResult radical_suite(const std::vector<Analysis>& all) {
  Suite suite("solvable radical sanity");
  for (const Analysis& a : all) {
    const EnumeratedGroup& g = *a.g;
    if (a.report.order <= 1) {
      suite.vacuous();
      continue;
    }
    bool ok = true;
    std::string why;
    if (!is_normal(g, a.radical)) {
      ok = false;
      why = "radical is not normal";
    }
    std::vector<int> gens = small_generating_set(g, a.radical.members);
    if (!is_solvable_subgroup(g, gens)) {
      ok = false;
      why = "radical is not solvable";
    }
    if (a.radical.size() > 1) {
      // radical of the quotient by the radical must vanish
      Quotient q = quotient_with_map(g, a.radical);
      if (solvable_radical(*q.group).size() != 1) {
        ok = false;
        why = "quotient by the radical still has a radical";
      }
    }
    if (a.report.a5_certificate && a.radical.size() != 1) {
      ok = false;
      why = "simple group with a non-trivial radical";
    }
    suite.check(ok, a.report.spec + ": " + why);
  }
  return suite.take();
}

SuiteResult registry_floor_suite(const VerifyOptions& options) {
  Suite suite("registry floor: enumerable simple-list members reach 71/20");
  for (const std::string& spec : enumerable_simple_list_members()) {
    GroupPtr g;
    try {
      g = EnumeratedGroup::enumerate(spec, options.enumerate);
    } catch (const ResourceError&) {
      suite.vacuous();  // a user cap below 1092 skips the member, not fails it
      continue;
    }
    Rational o = avg_order(*g);
    suite.check(o >= thresholds::simple_floor(),
                spec + ": o = " + o.str() + " below " + thresholds::simple_floor().str());
  }
  return suite.take();
}

}  // namespace

CorpusReport verify_corpus(const std::vector<std::string>& specs, const VerifyOptions& options) {
  auto started = std::chrono::steady_clock::now();
  CorpusReport report;
  report.groups.resize(specs.size());

  std::vector<Analysis> analyses(specs.size());
  // one byte per slot: workers write distinct elements concurrently, which
  // a bit-packed vector<bool> would not allow
  std::vector<char> usable(specs.size(), 0);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      GroupResult& out = report.groups[i];
      out.spec = specs[i];
      try {
        analyses[i] = analyze(EnumeratedGroup::enumerate(specs[i], options.enumerate));
        out.ok = true;
        out.report = analyses[i].report;
        out.spec = analyses[i].report.spec;
        usable[i] = 1;
      } catch (const ResourceError& e) {
        out.resource_error = true;
        out.error = e.what();
      } catch (const Error& e) {
        out.error = e.what();
      }
    }
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const GroupResult& g : report.groups) {
    if (!g.ok) {
      (g.resource_error ? report.any_resource_error : report.any_input_error) = true;
    }
  }

  std::vector<Analysis> good;
  for (std::size_t i = 0; i < analyses.size(); ++i)
    if (usable[i]) good.push_back(std::move(analyses[i]));

  report.suites.push_back(floor_suite(good));
  report.suites.push_back(odd_floor_suite(good));
  report.suites.push_back(coprime_product_suite(good, options, &report.coprime_pairs));
  report.suites.push_back(quotient_suite(good, &report.normal_instances));
  report.suites.push_back(nonsolvable_bounds_suite(good));
  report.suites.push_back(conditional_density_suite(good));
  report.suites.push_back(inverted_translation_suite(good));
  report.suites.push_back(ratio_threshold_suite(good));
  report.suites.push_back(two_ninths_suite(good));
  report.suites.push_back(index3_suite(good));
  report.suites.push_back(spectrum_suite(good));
  report.suites.push_back(lagrange_suite(good));
  report.suites.push_back(orbit_stabilizer_suite(good));
  report.suites.push_back(closure_suite(good));
  report.suites.push_back(derived_series_suite(good));
  report.suites.push_back(radical_suite(good));
  report.suites.push_back(registry_floor_suite(options));

  report.consistent = true;
  for (const GroupResult& g : report.groups)
    if (g.ok && !g.report.consistent) report.consistent = false;
  for (const SuiteResult& s : report.suites)
    if (s.fail > 0) report.consistent = false;

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<std::string> default_corpus_specs(bool include_s8) {
  std::vector<std::string> specs;
  for (int n = 1; n <= 24; ++n) specs.push_back("C" + std::to_string(n));
  specs.push_back("C2 x C2");
  specs.push_back("C2 x C2 x C2");
  specs.push_back("C2 x C2 x C2 x C2");
  specs.push_back("C2 x C2 x C2 x C2 x C2");
  for (int n = 3; n <= 12; ++n) specs.push_back("D" + std::to_string(n));
  specs.push_back("Q8");
  for (int n = 2; n <= 7; ++n) specs.push_back("S" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) specs.push_back("A" + std::to_string(n));
  for (int q : {4, 5, 7, 8, 9, 11, 13}) {
    specs.push_back("SL(2," + std::to_string(q) + ")");
    specs.push_back("PSL(2," + std::to_string(q) + ")");
  }
  specs.push_back("A5 x C3");
  specs.push_back("A5 x C7");
  specs.push_back("A5 x C2");
  specs.push_back("S3 x C4");
  if (include_s8) specs.push_back("S8");
  return specs;
}

std::vector<std::string> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read corpus file: " + path);
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    specs.push_back(line.substr(begin, end - begin + 1));
  }
  return specs;
}

}  // namespace avgord
