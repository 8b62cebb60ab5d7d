// avgord: exact order statistics and solvability classification for small
// finite groups.
//
// Commands:
//   stats  <spec>   order, psi, average order, order spectrum
//   verify <spec>   classification report against the rational thresholds
//   series <spec>   derived series orders and solvability
//   invert <spec>   inversion ratios over the tested automorphism family
//   scan   <file>   classify a corpus file and run every property suite
//
// Exit codes: 0 success/consistent, 2 input error, 3 inconsistency detected,
// 4 enumeration cap exceeded.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "avgord/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitResource = 4;

struct Options {
  std::string spec;
  std::string corpus_path;
  bool json = false;
  bool verbose = false;
  bool include_s8 = false;
  std::uint64_t cap = 2'000'000;
  int jobs = 1;
};

avgord::GroupPtr load(const Options& opt) {
  avgord::EnumerateOptions eo;
  eo.max_order = opt.cap;
  return avgord::EnumeratedGroup::enumerate(opt.spec, eo);
}

int run_stats(const Options& opt) {
  auto g = load(opt);
  avgord::StatsReport r = avgord::make_stats_report(*g);
  std::cout << (opt.json ? avgord::to_json(r) : avgord::to_text(r)) << "\n";
  return kExitOk;
}

int run_verify(const Options& opt) {
  auto g = load(opt);
  avgord::ClassificationReport r = avgord::classify(*g);
  std::cout << (opt.json ? avgord::to_json(r) : avgord::to_text(r)) << "\n";
  return r.consistent ? kExitOk : kExitInconsistent;
}

int run_series(const Options& opt) {
  auto g = load(opt);
  avgord::SeriesReport r = avgord::make_series_report(*g);
  std::cout << (opt.json ? avgord::to_json(r) : avgord::to_text(r)) << "\n";
  return kExitOk;
}

int run_invert(const Options& opt) {
  auto g = load(opt);
  avgord::InvertReport r = avgord::make_invert_report(*g);
  std::cout << (opt.json ? avgord::to_json(r) : avgord::to_text(r)) << "\n";
  return kExitOk;
}

int run_scan(const Options& opt) {
  std::vector<std::string> specs = avgord::read_corpus_file(opt.corpus_path);
  if (opt.include_s8) specs.push_back("S8");
  avgord::VerifyOptions vo;
  vo.enumerate.max_order = opt.cap;
  vo.jobs = opt.jobs;
  vo.verbose = opt.verbose;
  avgord::CorpusReport r = avgord::verify_corpus(specs, vo);
  std::cout << (opt.json ? avgord::to_json(r) : avgord::to_text(r, opt.verbose)) << "\n";
  if (!r.consistent) return kExitInconsistent;
  if (r.any_input_error) return kExitInput;
  if (r.any_resource_error) return kExitResource;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact order statistics and solvability classification for finite groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_flag("--verbose", opt.verbose, "more per-instance detail in reports");
  app.add_option("--cap", opt.cap, "enumeration cap (elements)")->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs, "parallel workers for corpus scans")
      ->check(CLI::PositiveNumber);
  app.add_flag("--include-s8", opt.include_s8, "append S8 to the scanned corpus (slow)");

  auto* stats = app.add_subcommand("stats", "order, psi, average order, spectrum");
  stats->add_option("spec", opt.spec, "group spec, e.g. \"A5\" or \"A5 x C7\"")->required();
  auto* verify = app.add_subcommand("verify", "classification report");
  verify->add_option("spec", opt.spec, "group spec")->required();
  auto* series = app.add_subcommand("series", "derived series and solvability");
  series->add_option("spec", opt.spec, "group spec")->required();
  auto* invert = app.add_subcommand("invert", "inversion ratio report");
  invert->add_option("spec", opt.spec, "group spec")->required();
  auto* scan = app.add_subcommand("scan", "classify a corpus file and run all property suites");
  scan->add_option("file", opt.corpus_path, "corpus file: one spec per line, '#' comments")
      ->required();
  // global flags may appear after the subcommand as well
  for (CLI::App* sub : {stats, verify, series, invert, scan}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message or the requested help text
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (stats->parsed()) return run_stats(opt);
    if (verify->parsed()) return run_verify(opt);
    if (series->parsed()) return run_series(opt);
    if (invert->parsed()) return run_invert(opt);
    if (scan->parsed()) return run_scan(opt);
  } catch (const avgord::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const avgord::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
