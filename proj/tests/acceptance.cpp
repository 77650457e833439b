// Acceptance checklist runner: executes the numbered validation criteria at
// their pinned tolerances and prints one [PASS]/[FAIL] line per criterion.
// With no arguments every criterion runs; `acceptance N` runs one.
//
// Check 5 (large-p asymptotic consistency) is expected to FAIL: the o(1)
// term of the two-term expansion decays like ln ln p / ln p and still sits
// near -0.23 at p = 1e6, outside the +/-15% band the check pins. The line
// prints the measured ratio; see the project README for the analysis.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "superball/bounds.hpp"
#include "superball/geometry.hpp"
#include "superball/verify.hpp"
#include "superball/volumes.hpp"

using namespace superball;

namespace {

struct Criterion {
  int number;
  const char* name;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

// ---- criterion bodies ------------------------------------------------------

bool c1_kappa(std::string& detail) {
  const ExponentBound m = bounds::minimize_superball(PNorm(2.0));
  detail = fmt("value=%.9f (target -0.5990 +/- 5e-4), theta*=%.9f (target "
               "1.0995 +/- 1e-3)",
               m.value, *m.argmin);
  return std::abs(m.value - (-0.5990)) <= 5e-4 &&
         std::abs(*m.argmin - 1.0995) <= 1e-3;
}

bool c2_strictness(std::string& detail) {
  bool ok = true;
  double worst_gap = 1e9;
  double worst_endpoint = 0.0;
  for (double p : {2.0, 2.5, 3.0, 4.0, 8.0, 16.0, 64.0}) {
    const double value = bounds::minimize_superball(PNorm(p)).value;
    const double gap = -1.0 / p - 1e-6 - value;  // must stay positive
    worst_gap = std::min(worst_gap, gap);
    const double endpoint =
        bounds::superball_exponent(PNorm(p), Angle(Angle::kHalfPi)) + 1.0 / p;
    worst_endpoint = std::max(worst_endpoint, std::abs(endpoint));
    ok = ok && gap > 0.0 && std::abs(endpoint) <= 1e-12;
  }
  detail = fmt("min margin below -1/p-1e-6: %.3g, worst endpoint residual: "
               "%.3g",
               worst_gap, worst_endpoint);
  return ok;
}

bool c3_blichfeldt(std::string& detail) {
  const ExponentBound r = bounds::rankin_bound(PNorm(2.0));
  detail = fmt("rankin(2)=%.17g, argmin=%.17g", r.value, *r.argmin);
  return r.value == -0.5;
}

bool c4_crossover(std::string& detail) {
  double lo = 1.1, hi = 1.9;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gap = bounds::rankin_bound(PNorm(mid)).value -
                       bounds::kl_transfer_bound(PNorm(mid)).value;
    (gap < 0.0 ? lo : hi) = mid;
  }
  const double crossover = 0.5 * (lo + hi);
  detail = fmt("crossover p=%.6f (target 1.494 +/- 0.01)", crossover);
  return std::abs(crossover - 1.494) <= 0.01;
}

bool c5_large_p(std::string& detail) {
  const double p = 1e6;
  const ExponentBound m = bounds::minimize_superball(PNorm(p));
  const double ratio = (m.value + 1.0 / p) * p * p * std::log(p);
  const double limit = -1.0 / (2.0 * specialfn::kLn2);  // -1/ln4
  const double band_lo = limit * 1.15;
  const double band_hi = limit * 0.85;
  detail = fmt("ratio=%.6f required in [%.6f, %.6f] (= -1/ln4 * [0.85,1.15])",
               ratio, band_lo, band_hi);
  return ratio >= band_lo && ratio <= band_hi;
}

bool c6_near_2_slope(std::string& detail) {
  const bounds::KlOptimum& opt = bounds::kl_optimum();
  const double eps = 1e-3;
  const double fd =
      (bounds::minimize_superball(PNorm(2.0 + eps)).value - opt.kappa) / eps;
  const double formula = -0.5 * std::log2(std::sin(0.5 * opt.theta));
  detail = fmt("fd slope=%.6f, formula=%.6f, |diff|=%.2g; deviation from "
               "printed 0.4650 is %+.4f (reported, not asserted)",
               fd, formula, std::abs(fd - formula), formula - 0.4650);
  return std::abs(fd - formula) <= 5e-3;
}

bool c7_transfer_fuzz(std::string& detail) {
  const auto suite = verify::run_transfer_fuzz(
      0x5EED, 1000000, [](double x, double y, double p) {
        return geometry::transfer_margin(x, y, PNorm(p));
      });
  detail = fmt("cases=%ld failures=%ld", suite.cases_run, suite.failures);
  if (suite.failures > 0 && suite.first_counterexample) {
    detail += " first: " + *suite.first_counterexample;
  }
  return suite.failures == 0;
}

bool c8_circle_chain(std::string& detail) {
  long violations = 0;
  long cells = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (double p : {2.0, 3.0, 4.0, 6.0, 8.0}) {
      for (double d : {0.2, 0.3, 0.5, 0.7, 0.9}) {
        const geometry::LpCode code =
            geometry::greedy_code(2, PNorm(p), d, 100000, seed);
        const double d2 = std::min(1.0, std::pow(d, 0.5 * p));
        const int cap =
            geometry::circle_code_capacity(2.0 * std::asin(d2));
        ++cells;
        if (static_cast<int>(code.size()) > cap) ++violations;
      }
    }
  }
  detail = fmt("grid cells x seeds=%ld, violations=%ld", cells, violations);
  return violations == 0;
}

bool c9_volumes(std::string& detail) {
  double worst_z = 0.0;
  bool ok = true;
  std::uint64_t stream = 0x5EED;
  for (int n : {2, 3, 4, 5}) {
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      const auto mc = volumes::monte_carlo_volume(n, PNorm(p), 1000000,
                                                  ++stream);
      const double closed =
          volumes::log2_ball_volume(n, PNorm(p), 1.0).log2_volume;
      const double z = std::abs(mc.log2_volume - closed) / mc.std_error;
      worst_z = std::max(worst_z, z);
      ok = ok && z <= 3.0;
    }
  }
  double worst_residual = 0.0;
  for (double p : {1.0, 1.5, 2.0, 4.0, 8.0}) {
    const double residual =
        std::abs(volumes::normalized_log_volume(10000, PNorm(p)) -
                 bounds::b_exponent(PNorm(p)));
    worst_residual = std::max(worst_residual, residual);
    ok = ok && residual <= 2e-3;
  }
  detail = fmt("worst MC z-score=%.2f (limit 3), worst b-residual=%.2g "
               "(limit 2e-3)",
               worst_z, worst_residual);
  return ok;
}

// ---- criterion 10: drives the CLI binary -----------------------------------

#ifndef SUPERBALL_CLI_PATH
#error "SUPERBALL_CLI_PATH must point at the superball binary"
#endif

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + SUPERBALL_CLI_PATH + "\" " +
                          args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// Vertex of `id` nearest to p0, in data coordinates.
bool polyline_vertex_near(const std::string& svg, const std::string& id,
                          double p0, double* p_out, double* v_out) {
  const auto pos = svg.find("id=\"" + id + "\"");
  if (pos == std::string::npos) return false;
  const auto points_pos = svg.find("points=\"", pos);
  if (points_pos == std::string::npos) return false;
  const auto points_end = svg.find('"', points_pos + 8);
  std::istringstream in(svg.substr(points_pos + 8, points_end - points_pos - 8));
  std::string pair;
  double best_dp = 1e300;
  while (in >> pair) {
    const auto comma = pair.find(',');
    const double p = std::stod(pair.substr(0, comma));
    const double v = std::stod(pair.substr(comma + 1));
    if (std::abs(p - p0) < best_dp) {
      best_dp = std::abs(p - p0);
      *p_out = p;
      *v_out = v;
    }
  }
  return best_dp < 0.011;
}

bool c10_figure(std::string& detail) {
  if (run_cli("figure --p-min 1 --p-max 8 --out acceptance_fig.svg") != 0) {
    detail = "figure command failed";
    return false;
  }
  const std::string svg = slurp("acceptance_fig.svg");
  double p_at = 0.0, v_at = 0.0;
  double solid_p = 0.0, solid_v = 1e300;
  for (const char* id : {"solid-low", "solid-high"}) {
    if (polyline_vertex_near(svg, id, 2.0, &p_at, &v_at) &&
        std::abs(p_at - 2.0) < std::abs(solid_p - 2.0)) {
      solid_p = p_at;
      solid_v = v_at;
    }
  }
  const bool solid_ok = std::abs(solid_v - (-0.5990)) <= 1e-3;
  // Caption roles: the dashed curve carries the previous bounds, -1/p on
  // the right regime and the Rankin bound on the left.
  double dash_p = 0.0, dash_v = 0.0;
  const bool dashed_hi_ok =
      polyline_vertex_near(svg, "dashed-high", 4.0, &dash_p, &dash_v) &&
      std::abs(dash_v - (-0.25)) <= 1e-6;
  double dash_lo_p = 0.0, dash_lo_v = 0.0;
  const bool dashed_lo_ok =
      polyline_vertex_near(svg, "dashed-low", 1.0, &dash_lo_p, &dash_lo_v) &&
      std::abs(dash_lo_v - (-0.42887832864)) <= 1e-3;
  const bool dash_attr_ok =
      svg.find("stroke-dasharray") != std::string::npos;

  if (run_cli("curve --p-min 1 --p-max 8 --samples 701 "
              "--out acceptance_a.csv") != 0 ||
      run_cli("curve --p-min 1 --p-max 8 --samples 701 "
              "--out acceptance_b.csv") != 0) {
    detail = "curve command failed";
    return false;
  }
  const std::string csv = slurp("acceptance_a.csv");
  const bool deterministic = !csv.empty() && csv == slurp("acceptance_b.csv");

  std::remove("acceptance_fig.svg");
  std::remove("acceptance_a.csv");
  std::remove("acceptance_b.csv");

  detail = fmt("solid at p=%.4f: %.6f (target -0.5990 +/- 1e-3), dashed "
               "roles %s, csv byte-identical %s",
               solid_p, solid_v,
               (dashed_hi_ok && dashed_lo_ok && dash_attr_ok) ? "ok" : "BAD",
               deterministic ? "yes" : "NO");
  return solid_ok && dashed_hi_ok && dashed_lo_ok && dash_attr_ok &&
         deterministic;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "kappa_KL reproduction", 1.0, c1_kappa},
      {2, "strict improvement over -1/p", 5.0, c2_strictness},
      {3, "Blichfeldt endpoint: rankin(2) = -1/2 exactly", 1.0, c3_blichfeldt},
      {4, "rankin/kl_transfer crossover near 1.494", 5.0, c4_crossover},
      {5, "large-p asymptotic consistency at p = 1e6", 1.0, c5_large_p},
      {6, "near-2 slope against the stored theta*", 1.0, c6_near_2_slope},
      {7, "transfer-inequality fuzz, 1e6 triples", 10.0, c7_transfer_fuzz},
      {8, "circle chain bound on the (p, d) grid, 3 seeds", 30.0,
       c8_circle_chain},
      {9, "volume oracle agreement (Monte Carlo + b residuals)", 60.0,
       c9_volumes},
      {10, "figure and curve reproduction via the CLI", 5.0, c10_figure},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool in_time = elapsed < c.time_limit_s;
    const bool pass = ok && in_time;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s | %s | %.2fs%s\n",
                pass ? "PASS" : "FAIL", c.number, c.name, detail.c_str(),
                elapsed,
                in_time ? "" : fmt(" (over %.0fs limit)", c.time_limit_s).c_str());
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
