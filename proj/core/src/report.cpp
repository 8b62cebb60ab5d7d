#include "avgord/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace avgord {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", r.num()},
                      {"den", r.den()},
                      {"display", r.decimal(6)},
                      {"exact", std::to_string(r.num()) + "/" + std::to_string(r.den())}};
}

ordered_json spectrum_json(const OrderSpectrum& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& [order, count] : s.counts)
    arr.push_back(ordered_json{{"order", order}, {"count", count}});
  return arr;
}

std::string spectrum_text(const OrderSpectrum& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [order, count] : s.counts) {
    if (!first) out << " ";
    out << order << ":" << count;
    first = false;
  }
  return out.str();
}

std::string o_text(const Rational& o) {
  return o.str() + " (~= " + o.decimal(6) + "; display only, comparisons exact)";
}

}  // namespace

StatsReport make_stats_report(const EnumeratedGroup& g) {
  StatsReport r;
  r.spec = g.spec_text();
  r.order = static_cast<std::uint64_t>(g.order());
  r.spectrum = order_spectrum(g);
  r.psi = r.spectrum.psi();
  r.o = r.spectrum.average();
  r.i2 = r.spectrum.i_k(2);
  r.i3 = r.spectrum.i_k(3);
  return r;
}

SeriesReport make_series_report(const EnumeratedGroup& g) {
  SeriesReport r;
  r.spec = g.spec_text();
  for (const ElementSet& term : derived_series(g))
    r.orders.push_back(static_cast<std::uint64_t>(term.size()));
  r.solvable = r.orders.back() == 1;
  return r;
}

InvertReport make_invert_report(const EnumeratedGroup& g) {
  InvertReport r;
  r.spec = g.spec_text();
  MaxInnerRatio best = max_inner_inversion_ratio(g);
  r.max_inner_witness = g.element_repr(best.witness);
  r.max_inner_ratio = best.ratio;
  OrderSpectrum spec = order_spectrum(g);
  r.identity_ratio =
      Rational(static_cast<std::int64_t>(1 + spec.i_k(2)), static_cast<std::int64_t>(g.order()));
  if (g.is_abelian()) r.inversion_ratio = inversion_ratio(g, inversion_map(g));
  r.note =
      "tested family: identity, all inner automorphisms, and global inversion "
      "on abelian groups; outer automorphisms are not searched";
  return r;
}

std::string to_text(const StatsReport& r) {
  std::ostringstream out;
  out << "spec: " << r.spec << "\n"
      << "order: " << r.order << "\n"
      << "psi: " << r.psi << "\n"
      << "o: " << o_text(r.o) << "\n"
      << "spectrum: " << spectrum_text(r.spectrum) << "\n"
      << "i2: " << r.i2 << "\n"
      << "i3: " << r.i3 << "\n";
  return out.str();
}

std::string to_json(const StatsReport& r) {
  ordered_json j{{"spec", r.spec},          {"order", r.order}, {"psi", r.psi},
                 {"o", rational_json(r.o)}, {"spectrum", spectrum_json(r.spectrum)},
                 {"i2", r.i2},              {"i3", r.i3}};
  return j.dump(2);
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "spec: " << r.spec << "\n"
      << "order: " << r.order << "\n"
      << "psi: " << r.psi << "\n"
      << "o: " << o_text(r.o) << "\n"
      << "spectrum: " << spectrum_text(r.spectrum) << "\n"
      << "i2: " << r.i2 << "\n"
      << "i3: " << r.i3 << "\n"
      << "solvable: " << (r.solvable ? "yes" : "no") << "\n";
  auto certs = r.certificates();
  if (!certs.empty()) {
    out << "certificates:";
    for (const auto& c : certs) out << " [" << c << "]";
    out << "\n";
  }
  if (r.boundary_exemption) out << "boundary: o equals the 211/60 threshold exactly (exempt)\n";
  for (const Verdict& v : r.verdicts) {
    out << "verdict: " << v.name << ": "
        << (!v.applicable ? "n/a" : v.pass ? "pass" : "FAIL") << " (" << v.detail << ")\n";
  }
  out << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
  return out.str();
}

std::string to_json(const ClassificationReport& r) {
  ordered_json verdicts = ordered_json::array();
  for (const Verdict& v : r.verdicts)
    verdicts.push_back(ordered_json{
        {"name", v.name}, {"applicable", v.applicable}, {"pass", v.pass}, {"detail", v.detail}});
  ordered_json j{{"spec", r.spec},
                 {"order", r.order},
                 {"psi", r.psi},
                 {"o", rational_json(r.o)},
                 {"spectrum", spectrum_json(r.spectrum)},
                 {"i2", r.i2},
                 {"i3", r.i3},
                 {"solvable", r.solvable},
                 {"certificates", r.certificates()},
                 {"boundary_exemption", r.boundary_exemption},
                 {"verdicts", verdicts},
                 {"consistent", r.consistent}};
  return j.dump(2);
}

std::string to_text(const SeriesReport& r) {
  std::ostringstream out;
  out << "spec: " << r.spec << "\nderived series orders: [";
  for (std::size_t i = 0; i < r.orders.size(); ++i) out << (i ? ", " : "") << r.orders[i];
  out << "]\nsolvable: " << (r.solvable ? "yes" : "no") << "\n";
  return out.str();
}

std::string to_json(const SeriesReport& r) {
  ordered_json j{{"spec", r.spec}, {"orders", r.orders}, {"solvable", r.solvable}};
  return j.dump(2);
}

std::string to_text(const InvertReport& r) {
  std::ostringstream out;
  out << "spec: " << r.spec << "\n"
      << "max inner inversion ratio: " << r.max_inner_ratio.str() << " (~= "
      << r.max_inner_ratio.decimal(6) << ") at conjugator " << r.max_inner_witness << "\n"
      << "identity-map ratio (1+i2)/|G|: " << r.identity_ratio.str() << "\n";
  if (r.inversion_ratio)
    out << "inversion-map ratio: " << r.inversion_ratio->str() << "\n";
  out << "note: " << r.note << "\n";
  return out.str();
}

std::string to_json(const InvertReport& r) {
  ordered_json j{{"spec", r.spec},
                 {"max_inner", ordered_json{{"witness", r.max_inner_witness},
                                            {"ratio", rational_json(r.max_inner_ratio)}}},
                 {"identity_ratio", rational_json(r.identity_ratio)},
                 {"inversion_ratio",
                  r.inversion_ratio ? rational_json(*r.inversion_ratio) : ordered_json(nullptr)},
                 {"note", r.note}};
  return j.dump(2);
}

std::string to_text(const CorpusReport& r, bool verbose) {
  std::ostringstream out;

  // summary table sorted by average order, ascending
  std::vector<const GroupResult*> ordered;
  for (const GroupResult& g : r.groups) ordered.push_back(&g);
  std::stable_sort(ordered.begin(), ordered.end(), [](const GroupResult* a, const GroupResult* b) {
    if (a->ok != b->ok) return a->ok;
    if (!a->ok) return false;
    return a->report.o < b->report.o;
  });

  out << "groups (sorted by o ascending):\n";
  for (const GroupResult* g : ordered) {
    if (!g->ok) {
      out << "  " << g->spec << ": ERROR " << g->error << "\n";
      continue;
    }
    out << "  " << g->spec << ": |G| = " << g->report.order << ", psi = " << g->report.psi
        << ", o = " << g->report.o.str() << " (~= " << g->report.o.decimal(6) << ")"
        << (g->report.solvable ? ", solvable" : ", non-solvable")
        << (g->report.boundary_exemption ? ", boundary exemption" : "")
        << (g->report.consistent ? "" : ", INCONSISTENT") << "\n";
  }

  out << "suites:\n";
  for (const SuiteResult& s : r.suites) {
    out << "  " << s.name << ": pass " << s.pass << ", fail " << s.fail << ", vacuous "
        << s.vacuous << "\n";
    if (verbose || s.fail > 0)
      for (const std::string& f : s.failures) out << "    failure: " << f << "\n";
  }
  out << "coprime pairs tested: " << r.coprime_pairs << "\n"
      << "normal-subgroup instances tested: " << r.normal_instances << "\n"
      << "elapsed seconds: " << r.seconds << "\n"
      << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
  return out.str();
}

std::string to_json(const CorpusReport& r) {
  ordered_json groups = ordered_json::array();
  for (const GroupResult& g : r.groups) {
    if (!g.ok) {
      groups.push_back(ordered_json{{"spec", g.spec},
                                    {"error", g.error},
                                    {"resource_error", g.resource_error}});
      continue;
    }
    groups.push_back(ordered_json::parse(to_json(g.report)));
  }
  ordered_json suites = ordered_json::array();
  for (const SuiteResult& s : r.suites)
    suites.push_back(ordered_json{{"name", s.name},
                                  {"pass", s.pass},
                                  {"fail", s.fail},
                                  {"vacuous", s.vacuous},
                                  {"failures", s.failures}});
  ordered_json j{{"groups", groups},
                 {"suites", suites},
                 {"coprime_pairs", r.coprime_pairs},
                 {"normal_instances", r.normal_instances},
                 {"seconds", r.seconds},
                 {"consistent", r.consistent}};
  return j.dump(2);
}

}  // namespace avgord
