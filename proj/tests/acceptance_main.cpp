// Acceptance suite: runs every stated acceptance criterion at its exact
// tolerance and prints one PASS/FAIL line per criterion. Exits non-zero if
// any criterion fails.
//
// All comparisons are exact rational or integer comparisons; the only
// tolerances are the wall-clock budgets of criteria 1 and 10.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "avgord/report.hpp"

using namespace avgord;

namespace {

int failures = 0;

void line(int number, const std::string& label, bool pass, const std::string& detail = "") {
  std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const SuiteResult& suite_named(const CorpusReport& report, const std::string& prefix) {
  for (const SuiteResult& s : report.suites)
    if (s.name.rfind(prefix, 0) == 0) return s;
  std::fprintf(stderr, "missing suite: %s\n", prefix.c_str());
  std::exit(2);
}

const ClassificationReport& group_named(const CorpusReport& report, const std::string& spec) {
  for (const GroupResult& g : report.groups)
    if (g.ok && g.spec == spec) return g.report;
  std::fprintf(stderr, "missing corpus group: %s\n", spec.c_str());
  std::exit(2);
}

}  // namespace

int main() {
  // ---- criterion 1: exact psi oracle over the seven reference records ----
  {
    auto start = std::chrono::steady_clock::now();
    auto checks = verify_known_psi();
    double elapsed = seconds_since(start);
    bool all_exact = true;
    std::string detail;
    for (const auto& c : checks) {
      if (!c.order_ok || !c.psi_ok) {
        all_exact = false;
        detail += c.spec + ": |G| " + std::to_string(c.actual_order) +
                  (c.order_ok ? " (confirmed)" : " != stated " + std::to_string(c.expected_order)) +
                  ", psi recomputed " + std::to_string(c.actual_psi) + " vs stated " +
                  std::to_string(c.expected_psi) + "; ";
      }
    }
    bool fast_enough = elapsed < 10.0;
    if (!detail.empty())
      detail +=
          "order confirmed first, so the mismatch is an erratum in the stated reference "
          "value, not an enumeration defect (S5 brute force gives 471)";
    detail += (detail.empty() ? "" : "; ") + std::string("elapsed ") + std::to_string(elapsed) + "s";
    line(1, "exact psi oracle (7 reference groups, < 10 s)", all_exact && fast_enough, detail);
  }

  // one single-threaded corpus pass feeds criteria 2-9 and the scan budget
  VerifyOptions options;
  options.jobs = 1;
  auto corpus_start = std::chrono::steady_clock::now();
  CorpusReport corpus = verify_corpus(default_corpus_specs(), options);
  double corpus_seconds = seconds_since(corpus_start);

  // ---- criterion 2: boundary exactness at 211/60 ----
  {
    const ClassificationReport& a5 = group_named(corpus, "A5");
    bool ok = a5.o == Rational(211, 60) && a5.boundary_exemption && !a5.solvable;
    std::string detail = "o(A5) = " + a5.o.str();
    for (const GroupResult& g : corpus.groups) {
      if (!g.ok || g.spec == "A5") continue;
      if (g.report.o <= Rational(211, 60)) {
        bool fine = g.report.solvable ||
                    (g.report.o == Rational(211, 60) && g.report.a5_certificate);
        if (!fine) {
          ok = false;
          detail += "; unexplained sub-boundary group " + g.spec;
        }
      }
    }
    line(2, "boundary exactness: A5 exempt, all others at or below 211/60 solvable or certified",
         ok, detail);
  }

  // ---- criterion 3: low-threshold sweep (13/6) ----
  {
    bool ok = true;
    std::string detail;
    int hits = 0;
    for (const GroupResult& g : corpus.groups) {
      if (!g.ok) continue;
      const ClassificationReport& r = g.report;
      if (!(r.o <= Rational(13, 6))) continue;
      ++hits;
      bool elementary = r.elementary_abelian_2 &&
                        r.o == Rational(2) - Rational(1, static_cast<std::int64_t>(r.order));
      bool s3 = r.o == Rational(13, 6) && r.s3_certificate;
      if (!(elementary || s3)) {
        ok = false;
        detail += g.spec + " violates; ";
      }
    }
    detail += std::to_string(hits) + " groups at or below 13/6";
    line(3, "low-threshold sweep: o <= 13/6 forces elementary-abelian-2 or the S3 case", ok,
         detail);
  }

  // ---- criterion 4: floor suite + coprime products ----
  {
    const SuiteResult& floor = suite_named(corpus, "average-order floor");
    const SuiteResult& odd = suite_named(corpus, "odd-order floor");
    const SuiteResult& coprime = suite_named(corpus, "coprime product");
    bool ok = floor.fail == 0 && odd.fail == 0 && coprime.fail == 0 && corpus.coprime_pairs >= 20;
    line(4, "floor bounds and coprime-product multiplicativity",
         ok, std::to_string(corpus.coprime_pairs) + " coprime pairs, zero violations");
  }

  // ---- criterion 5: quotient suite ----
  {
    const SuiteResult& q = suite_named(corpus, "quotient monotonicity");
    bool ok = q.fail == 0 && corpus.normal_instances >= 100;
    line(5, "coset-order divisibility and strict quotient monotonicity", ok,
         std::to_string(corpus.normal_instances) + " (G, N) instances, zero violations");
  }

  // ---- criterion 6: non-solvable bounds with A5 equality ----
  {
    const SuiteResult& bounds = suite_named(corpus, "non-solvable bounds");
    const ClassificationReport& a5 = group_named(corpus, "A5");
    bool equalities = a5.i2 == 15 && a5.i3 == 20 && 15 == (4 * 60) / 15 - 1 &&
                      20 == (7 * 60) / 20 - 1;
    bool ok = bounds.fail == 0 && equalities;
    line(6, "non-solvable floors and density bounds; A5 attains both equalities", ok,
         "i2(A5) = " + std::to_string(a5.i2) + ", i3(A5) = " + std::to_string(a5.i3));
  }

  // ---- criterion 7: inversion suite ----
  {
    const SuiteResult& translation = suite_named(corpus, "inverted-set translation");
    const SuiteResult& two_ninths = suite_named(corpus, "trivial-radical two-ninths");

    GroupPtr s5 = EnumeratedGroup::enumerate("S5");
    MaxInnerRatio s5_best = max_inner_inversion_ratio(*s5);
    // stated bound: <= 1/6. The brute-force scan maximizes |S(inner(x))|/|G|
    // with S(theta) = {g : theta(g) = g^-1} (self-inverse elements included,
    // as the definitions require), which already reaches (1 + i2)/|G| =
    // 26/120 = 13/60 at x = e. The 1/6 figure is exact only for the strict
    // count excluding self-inverse elements, so this clause cannot hold under
    // the stated semantics; it is asserted as written and reported honestly.
    bool s5_ok = s5_best.ratio <= Rational(1, 6);

    GroupPtr a5 = EnumeratedGroup::enumerate("A5");
    Rational a5_identity = inversion_ratio(*a5, identity_automorphism(*a5));
    bool a5_ok = a5_identity == Rational(4, 15);

    bool ok = translation.fail == 0 && two_ninths.fail == 0 && s5_ok && a5_ok;
    std::string detail = "translation identity: " + std::to_string(translation.fail) +
                         " failures; 2/9 sweep: " + std::to_string(two_ninths.fail) +
                         " failures; identity ratio of A5 = " + a5_identity.str() +
                         "; max inner ratio of S5 = " + s5_best.ratio.str() + " at " +
                         s5->element_repr(s5_best.witness);
    if (!s5_ok)
      detail +=
          " -- exceeds the stated 1/6 because S(theta) includes self-inverse elements "
          "(the strict count tops out at exactly 1/6; 13/60 < 2/9 keeps every "
          "downstream use valid); reference bound appears to be an erratum";
    line(7, "inversion suite: translation identity, S5 max inner ratio <= 1/6, A5 ratio, 2/9", ok,
         detail);
  }

  // ---- criterion 8: index-3 instance on A5 x C3 ----
  {
    GroupPtr g = EnumeratedGroup::enumerate("A5 x C3");
    std::vector<int> gens(g->generator_indices().begin(), g->generator_indices().begin() + 2);
    ElementSet n = generated_subgroup(*g, gens);
    Index3Report rep = check_index3_bound(*g, n);
    // o(G) = 1237/180 by enumeration, cross-checked by an independent
    // lcm-convolution of the factor spectra (|A5| and |C3| share the prime 3,
    // so psi is not multiplicative here)
    bool ok = n.size() == 60 && rep.status == Index3Status::holds &&
              rep.o_g == Rational(1237, 180) && rep.o_n == Rational(211, 60) &&
              rep.bound == Rational(757, 60) && rep.o_n < rep.bound && rep.o_g > Rational(11, 3);
    line(8, "index-3 bound instance on A5 x C3, exact arithmetic", ok,
         "o(G) = " + rep.o_g.str() + ", o(N) = " + rep.o_n.str() + ", bound = " + rep.bound.str());
  }

  // ---- criterion 9: spectrum property suite ----
  {
    const SuiteResult& spectrum = suite_named(corpus, "spectrum sanity");
    const SuiteResult& lagrange = suite_named(corpus, "element orders divide");
    bool ok = spectrum.fail == 0 && lagrange.fail == 0 &&
              spectrum.pass + spectrum.fail >= 68;  // full corpus covered
    line(9, "spectrum properties over the full corpus", ok,
         std::to_string(spectrum.pass) + " groups checked");
  }

  // ---- criterion 10: performance floor ----
  {
    auto t1 = std::chrono::steady_clock::now();
    GroupPtr psl13 = EnumeratedGroup::enumerate("PSL(2,13)");
    double psl_seconds = seconds_since(t1);

    auto t2 = std::chrono::steady_clock::now();
    GroupPtr s7 = EnumeratedGroup::enumerate("S7");
    double s7_seconds = seconds_since(t2);

    bool ok = psl13->order() == 1092 && psl_seconds < 1.0 && s7->order() == 5040 &&
              s7_seconds < 5.0 && corpus_seconds < 300.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "PSL(2,13) %.3fs, S7 %.3fs, corpus+suites %.1fs",
                  psl_seconds, s7_seconds, corpus_seconds);
    line(10, "performance floor (1 s / 5 s / 300 s single-threaded)", ok, buf);
  }

  // corpus-wide consistency is implied by criteria 2-9 but stated once
  std::printf("%s  corpus consistency: %s\n", corpus.consistent ? "PASS" : "FAIL",
              corpus.consistent ? "no INCONSISTENT verdict, no suite failure"
                                : "inconsistency detected");
  if (!corpus.consistent) ++failures;

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
