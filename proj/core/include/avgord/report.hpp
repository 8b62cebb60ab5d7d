#pragma once

#include <optional>
#include <string>

#include "avgord/criterion.hpp"

namespace avgord {

/// Payload of the `stats` command.
struct StatsReport {
  std::string spec;
  std::uint64_t order = 0;
  std::uint64_t psi = 0;
  Rational o;
  OrderSpectrum spectrum;
  std::uint64_t i2 = 0;
  std::uint64_t i3 = 0;
};
StatsReport make_stats_report(const EnumeratedGroup& g);

/// Payload of the `series` command.
struct SeriesReport {
  std::string spec;
  std::vector<std::uint64_t> orders;
  bool solvable = false;
};
SeriesReport make_series_report(const EnumeratedGroup& g);

/// Payload of the `invert` command. The tested family is identity, all
/// inner maps and (on abelian groups) global inversion; `note` records that
/// limitation in every report.
struct InvertReport {
  std::string spec;
  std::string max_inner_witness;
  Rational max_inner_ratio;
  Rational identity_ratio;
  std::optional<Rational> inversion_ratio;  // abelian groups only
  std::string note;
};
InvertReport make_invert_report(const EnumeratedGroup& g);

std::string to_text(const StatsReport& r);
std::string to_json(const StatsReport& r);
std::string to_text(const ClassificationReport& r);
std::string to_json(const ClassificationReport& r);
std::string to_text(const SeriesReport& r);
std::string to_json(const SeriesReport& r);
std::string to_text(const InvertReport& r);
std::string to_json(const InvertReport& r);
std::string to_text(const CorpusReport& r, bool verbose = false);
std::string to_json(const CorpusReport& r);

}  // namespace avgord
