#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avgord/inversion.hpp"
#include "avgord/stats.hpp"

namespace avgord {

/// The exact rational thresholds the classification compares against.
/// 13/6 < 311/100 < 211/60 < 71/20; decimals in output are display only.
namespace thresholds {
inline Rational low() { return Rational(13, 6); }                // average order of S3
inline Rational solvable_bound() { return Rational(211, 60); }   // average order of A5
inline Rational simple_floor() { return Rational(71, 20); }      // 3.55
inline Rational nonsolvable_floor() { return Rational(311, 100); }
inline Rational index3_offset() { return Rational(8, 3); }
}  // namespace thresholds

/// One consistency check inside a ClassificationReport. `detail` always
/// cites both sides of the comparison.
struct Verdict {
  std::string name;
  bool applicable = false;
  bool pass = true;
  std::string detail;
};

/// Per-group verdict sheet: exact order statistics plus the solvability
/// classification checks. `consistent` is false only if some applicable
/// check failed, which would be a counterexample to a proven theorem and
/// therefore indicates a bug or an erratum, never an expected state.
struct ClassificationReport {
  std::string spec;
  std::uint64_t order = 0;
  std::uint64_t psi = 0;
  Rational o;
  bool solvable = false;
  OrderSpectrum spectrum;
  std::uint64_t i2 = 0;
  std::uint64_t i3 = 0;

  bool elementary_abelian_2 = false;
  bool s3_certificate = false;  // order 6 and non-abelian
  bool a5_certificate = false;  // order 60 and simple
  std::vector<std::string> certificates() const;

  std::vector<Verdict> verdicts;
  bool consistent = true;
  /// Set when o equals 211/60 exactly on a certified simple group of
  /// order 60, the one allowed non-solvable case at the boundary.
  bool boundary_exemption = false;
};

ClassificationReport classify(const EnumeratedGroup& g);

/// Exact bound check for a normal subgroup of index 3 in a non-solvable
/// group: o(N) < 3*(o(G) - 8/3) and o(G) > 11/3. Returns not_applicable
/// when G is solvable; errors when N is not normal of index exactly 3.
enum class Index3Status { holds, violated, not_applicable };
struct Index3Report {
  Index3Status status = Index3Status::not_applicable;
  Rational o_g;
  Rational o_n;
  Rational bound;  // 3*(o(G) - 8/3)
  std::string detail;
};
Index3Report check_index3_bound(const EnumeratedGroup& g, const ElementSet& n);

/// Reference psi values re-verified by enumeration in the acceptance suite.
struct KnownPsiRecord {
  std::string spec;
  std::uint64_t order = 0;
  std::uint64_t psi = 0;
  std::string source;
};
const std::vector<KnownPsiRecord>& known_psi_table();

struct KnownPsiCheck {
  std::string spec;
  std::uint64_t expected_order = 0, actual_order = 0;
  std::uint64_t expected_psi = 0, actual_psi = 0;
  bool order_ok = false, psi_ok = false;
};
/// Enumerates every table group and recomputes |G| (first) and psi.
std::vector<KnownPsiCheck> verify_known_psi(const EnumerateOptions& options = {});

/// Static registry of the non-abelian simple groups whose prime divisors
/// lie in {2,3,5,7,11,13}, keyed by |Pi(G)|. Parametric families are stored
/// as constraint strings, fixed groups with their orders; prime sets of
/// fixed entries are recomputed from the order at registry construction.
struct SimpleListEntry {
  int pi_size = 0;
  std::string name;
  bool parametric = false;
  std::uint64_t order = 0;       // 0 for parametric entries
  std::string constraint;        // empty for fixed entries
  std::vector<int> primes;       // empty for parametric entries
};
std::vector<SimpleListEntry> our_simple_list(int pi_size);

/// The fixed-entry members of the registry small enough to enumerate here.
/// Everything else in the list is data only.
std::vector<std::string> enumerable_simple_list_members();

// ---------------------------------------------------------------------------
// corpus verification

struct VerifyOptions {
  EnumerateOptions enumerate;
  int jobs = 1;
  bool verbose = false;
};

/// Aggregated outcome of one property suite over the corpus.
struct SuiteResult {
  std::string name;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t vacuous = 0;  // hypothesis never held
  std::vector<std::string> failures;
};

struct GroupResult {
  std::string spec;
  bool ok = false;
  bool resource_error = false;
  std::string error;
  ClassificationReport report;
};

struct CorpusReport {
  std::vector<GroupResult> groups;
  std::vector<SuiteResult> suites;
  bool consistent = true;        // no INCONSISTENT classification, no suite failure
  bool any_input_error = false;  // parse or precondition failure on some line
  bool any_resource_error = false;
  std::uint64_t coprime_pairs = 0;    // pairs exercised by the product suite
  std::uint64_t normal_instances = 0; // (G, N) pairs exercised by the quotient suite
  double seconds = 0.0;
};

/// Classifies every corpus group and runs the full property-suite battery
/// (floor bounds, quotient monotonicity, non-solvable bounds, inversion
/// identities and thresholds, spectrum sanity, registry checks).
/// Enumeration failures are reported per spec without aborting the sweep.
CorpusReport verify_corpus(const std::vector<std::string>& specs, const VerifyOptions& options = {});

/// The default desk-scale corpus; spans both sides of every threshold.
std::vector<std::string> default_corpus_specs(bool include_s8 = false);

/// Reads a corpus file: one spec per line, '#' comments, blank lines ignored.
std::vector<std::string> read_corpus_file(const std::string& path);

}  // namespace avgord
