// superball: bounds on the exponential rate of translative lp-ball packing
// densities. Subcommands: bound, curve, figure, codes, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <stdexcept>
#include <string>

#include "superball/bounds.hpp"
#include "superball/curve.hpp"
#include "superball/types.hpp"
#include "superball/verify.hpp"
#include "superball/witness.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5EED;

std::string fmt12(double v) { return superball::curve::format_number(v); }

int cmd_bound(double p, const std::string& method_str,
              const std::string& format) {
  using namespace superball;
  const auto method = method_from_name(method_str);
  if (!method) {
    std::cerr << "unknown method '" << method_str
              << "' (expected new, rankin, kl_transfer, vdcs or composite)\n";
    return 2;
  }
  const PNorm pn(p);
  ExponentBound bound{};
  switch (*method) {
    case Method::kNew: bound = bounds::minimize_superball(pn); break;
    case Method::kRankin: bound = bounds::rankin_bound(pn); break;
    case Method::kKlTransfer: bound = bounds::kl_transfer_bound(pn); break;
    case Method::kVdcs: bound = bounds::vdcs_bound(pn); break;
    case Method::kComposite: bound = bounds::best_upper_bound(pn); break;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["p"] = bound.p;
    j["method"] = method_name(bound.method);
    j["value"] = bound.value;
    j["argmin"] =
        bound.argmin ? nlohmann::ordered_json(*bound.argmin) : nullptr;
    if (bound.winner) j["winner"] = method_name(*bound.winner);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "value  = " << fmt12(bound.value) << "\n";
    std::cout << "method = " << method_name(bound.method) << "\n";
    if (bound.winner) {
      std::cout << "winner = " << method_name(*bound.winner) << "\n";
    }
    if (bound.argmin) {
      std::cout << "argmin = " << fmt12(*bound.argmin) << "\n";
    }
  }
  return 0;
}

int cmd_curve(double p_min, double p_max, int samples,
              const std::string& out) {
  using namespace superball::curve;
  write_file(out, curve_to_csv(sample_curve(p_min, p_max, samples)));
  return 0;
}

int cmd_figure(double p_min, double p_max, int samples,
               const std::string& out) {
  using namespace superball::curve;
  write_file(out, curve_to_svg(sample_curve(p_min, p_max, samples)));
  return 0;
}

int cmd_codes(int n, double p, double d, int trials, std::uint64_t seed,
              const std::string& out) {
  using namespace superball;
  if (n < 2 || n > 16) {
    std::cerr << "codes: n must lie in [2, 16]\n";
    return 2;
  }
  const geometry::WitnessResult result =
      geometry::make_witness(n, PNorm(p), d, trials, seed);
  curve::write_file(out, geometry::witness_to_json(result.record, result.code));
  std::cout << "count  = " << result.record.count << "\n";
  if (result.record.oracle) {
    std::cout << "oracle = " << *result.record.oracle << "\n";
    std::cout << "chain  = " << (*result.record.chain_pass ? "pass" : "FAIL")
              << "\n";
  }
  if (result.record.chain_pass && !*result.record.chain_pass) {
    return 1;  // a chain violation signals a library bug, not bad usage
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, const std::string& level,
               const std::string& format) {
  using namespace superball::verify;
  const VerificationReport report = run_verification(
      seed, level == "full" ? Level::kFull : Level::kQuick);
  std::cout << (format == "json" ? report_to_json(report)
                                 : report_to_text(report));
  return report.total_failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds for translative lp-ball packing exponents"};
  app.require_subcommand(1);

  double p = 2.0;
  double p_min = 1.0;
  double p_max = 8.0;
  int samples = 701;
  int n = 2;
  double d = 0.5;
  int trials = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::string method = "composite";
  std::string format = "text";
  std::string level = "quick";
  std::string out;

  CLI::App* bound = app.add_subcommand("bound", "Evaluate one bound at one p");
  bound->add_option("--p", p, "lp exponent in [1, 1e6]")->required();
  bound->add_option("--method", method,
                    "new | rankin | kl_transfer | vdcs | composite");
  bound->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* curve =
      app.add_subcommand("curve", "Write the sampled bound table as CSV");
  curve->add_option("--p-min", p_min, "left end of the p range");
  curve->add_option("--p-max", p_max, "right end of the p range");
  curve->add_option("--samples", samples, "number of rows (>= 2)");
  curve->add_option("--out", out, "output CSV path")->required();

  CLI::App* figure =
      app.add_subcommand("figure", "Render the bound curves as a standalone SVG");
  figure->add_option("--p-min", p_min, "left end of the p range");
  figure->add_option("--p-max", p_max, "right end of the p range");
  figure->add_option("--samples", samples, "number of samples (>= 2)");
  figure->add_option("--out", out, "output SVG path")->required();

  CLI::App* codes = app.add_subcommand(
      "codes", "Greedy lp spherical-code witness search with JSON export");
  codes->add_option("--n", n, "dimension in [2, 16]")->required();
  codes->add_option("--p", p, "lp exponent")->required();
  codes->add_option("--d", d, "half separation, in (0, 1]")->required();
  codes->add_option("--trials", trials, "consecutive rejections before stopping");
  codes->add_option("--seed", seed, "random seed")->envname("SUPERBALL_SEED");
  codes->add_option("--out", out, "output JSON path")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Run every property suite and report pass/fail");
  verify->add_option("--seed", seed, "random seed")->envname("SUPERBALL_SEED");
  verify->add_option("--level", level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(p, method, format);
    if (curve->parsed()) return cmd_curve(p_min, p_max, samples, out);
    if (figure->parsed()) return cmd_figure(p_min, p_max, samples, out);
    if (codes->parsed()) return cmd_codes(n, p, d, trials, seed, out);
    if (verify->parsed()) return cmd_verify(seed, level, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
