#include "superball/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <json.hpp>

#include "superball/bounds.hpp"
#include "superball/geometry.hpp"
#include "superball/rng.hpp"
#include "superball/specialfn.hpp"
#include "superball/volumes.hpp"

namespace superball::verify {

namespace {

using geometry::LpVector;
using geometry::PointMatrix;

std::string describe(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

class Suite {
public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& counterexample) {
    ++result_.cases_run;
    if (!ok) {
      ++result_.failures;
      if (!result_.first_counterexample) {
        result_.first_counterexample = counterexample();
      }
    }
  }

  SuiteResult take() { return std::move(result_); }

private:
  SuiteResult result_;
};

// ---- specialfn ----------------------------------------------------------

SuiteResult specialfn_factorial() {
  Suite s("specialfn.factorial");
  double log2_fact = 0.0;  // log2((k-1)!)
  for (int k = 1; k <= 30; ++k) {
    const double got = specialfn::log2_gamma(k);
    const double err = std::abs(got - log2_fact);
    const double tol = 1e-12 * std::max(1.0, log2_fact);
    s.check(err <= tol, [&] {
      return describe("k=%d log2_gamma=%.17g expected=%.17g", k, got,
                      log2_fact);
    });
    log2_fact += std::log2(static_cast<double>(k));
  }
  return s.take();
}

SuiteResult specialfn_duplication(std::uint64_t seed, long cases) {
  Suite s("specialfn.duplication");
  Rng rng(seed);
  constexpr double kHalfLog2Pi = 0.8257480647361594;  // log2(sqrt(pi))
  for (long i = 0; i < cases; ++i) {
    const double x = rng.uniform(0.5, 50.0);
    const double lhs = specialfn::log2_gamma(2.0 * x);
    const double rhs = specialfn::log2_gamma(x) +
                       specialfn::log2_gamma(x + 0.5) + (2.0 * x - 1.0) -
                       kHalfLog2Pi;
    s.check(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)),
            [&] { return describe("x=%.17g lhs=%.17g rhs=%.17g", x, lhs, rhs); });
  }
  return s.take();
}

SuiteResult specialfn_monotonic() {
  Suite s("specialfn.monotonic");
  double prev = specialfn::log2_gamma(2.0);
  for (double x = 2.25; x <= 200.0; x += 0.25) {
    const double cur = specialfn::log2_gamma(x);
    s.check(cur > prev,
            [&] { return describe("log2_gamma not increasing at x=%.17g", x); });
    prev = cur;
  }
  return s.take();
}

// ---- bounds --------------------------------------------------------------

SuiteResult bounds_endpoint_identity() {
  Suite s("bounds.endpoint_identity");
  for (double p : {2.0, 2.5, 3.0, 4.0, 8.0, 16.0, 64.0, 1e3, 1e6}) {
    const double got =
        bounds::superball_exponent(PNorm(p), Angle(Angle::kHalfPi));
    s.check(std::abs(got + 1.0 / p) <= 1e-12, [&] {
      return describe("p=%.17g f(pi/2)=%.17g vs -1/p=%.17g", p, got, -1.0 / p);
    });
  }
  return s.take();
}

SuiteResult bounds_strict_improvement() {
  Suite s("bounds.strict_improvement");
  for (double p : {2.0, 2.5, 3.0, 4.0, 8.0, 16.0, 64.0}) {
    const double value = bounds::minimize_superball(PNorm(p)).value;
    s.check(value < -1.0 / p - 1e-6, [&] {
      return describe("p=%.17g min=%.17g not below -1/p - 1e-6", p, value);
    });
  }
  return s.take();
}

SuiteResult bounds_stitch_at_2() {
  Suite s("bounds.stitch_at_2");
  const double lhs = bounds::minimize_superball(PNorm(2.0)).value;
  const double rhs = bounds::kl_transfer_bound(PNorm(2.0)).value;
  s.check(std::abs(lhs - rhs) <= 1e-12,
          [&] { return describe("min=%.17g transfer=%.17g", lhs, rhs); });
  return s.take();
}

SuiteResult bounds_optimizer_sanity(std::uint64_t seed, long per_p) {
  Suite s("bounds.optimizer_sanity");
  Rng rng(seed);
  for (double p : {2.0, 3.0, 4.0, 8.0}) {
    const ExponentBound best = bounds::minimize_superball(PNorm(p));
    for (long i = 0; i < per_p; ++i) {
      const double theta = rng.uniform(1e-6, Angle::kHalfPi);
      const double other = bounds::superball_exponent(PNorm(p), Angle(theta));
      s.check(best.value <= other + 1e-12, [&] {
        return describe("p=%.17g theta=%.17g f=%.17g below optimum %.17g", p,
                        theta, other, best.value);
      });
    }
  }
  return s.take();
}

SuiteResult bounds_rankin_feasibility() {
  Suite s("bounds.rankin_feasibility");
  for (int i = 0; i <= 100; ++i) {
    const double p = 1.0 + i / 100.0;
    const ExponentBound r = bounds::rankin_bound(PNorm(p));
    const double hi = (1.0 + 1.0 / p) / 3.0;
    s.check(r.argmin && *r.argmin >= 0.5 - 1e-12 && *r.argmin <= hi + 1e-12,
            [&] {
              return describe("p=%.17g argmin=%.17g outside [0.5, %.17g]", p,
                              r.argmin.value_or(-1.0), hi);
            });
  }
  return s.take();
}

SuiteResult bounds_kl_transfer_offset() {
  Suite s("bounds.kl_transfer_offset");
  const double expected =
      bounds::kl_optimum().kappa - bounds::b_exponent(PNorm(2.0));
  for (int i = 0; i <= 100; ++i) {
    const double p = 1.0 + i / 100.0;
    const double offset = bounds::kl_transfer_bound(PNorm(p)).value -
                          bounds::b_exponent(PNorm(p));
    s.check(std::abs(offset - expected) <= 1e-12, [&] {
      return describe("p=%.17g offset=%.17g expected=%.17g", p, offset,
                      expected);
    });
  }
  return s.take();
}

SuiteResult bounds_continuity_at_2() {
  Suite s("bounds.continuity_at_2");
  const double at = bounds::best_upper_bound(PNorm(2.0)).value;
  const double left = bounds::best_upper_bound(PNorm(2.0 - 1e-9)).value;
  const double right = bounds::best_upper_bound(PNorm(2.0 + 1e-9)).value;
  s.check(std::abs(left - at) <= 1e-6,
          [&] { return describe("left=%.17g at=%.17g", left, at); });
  s.check(std::abs(right - at) <= 1e-6,
          [&] { return describe("right=%.17g at=%.17g", right, at); });
  return s.take();
}

// ---- geometry ------------------------------------------------------------

SuiteResult geometry_twist_norm(std::uint64_t seed, long cases) {
  Suite s("geometry.twist_norm");
  Rng rng(seed);
  for (long i = 0; i < cases; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform() * 7);
    const double p = rng.uniform(1.0, 64.0);
    const double q = rng.uniform(1.0, p);
    LpVector x(n);
    for (int k = 0; k < n; ++k) x[k] = rng.uniform(-1.0, 1.0);
    const double norm = geometry::lp_norm(x, PNorm(p));
    if (norm == 0.0) continue;
    x /= norm;
    const LpVector t = geometry::twist(x, PNorm(p), PNorm(q));
    const double tn = geometry::lp_norm(t, PNorm(q));
    s.check(std::abs(tn - 1.0) <= geometry::kGeomSlack, [&] {
      return describe("n=%d p=%.17g q=%.17g |twist|_q=%.17g", n, p, q, tn);
    });
  }
  return s.take();
}

SuiteResult geometry_code_transfer(std::uint64_t seed) {
  Suite s("geometry.code_transfer");
  for (double p : {2.0, 3.0, 4.0, 8.0}) {
    const geometry::LpCode code =
        geometry::greedy_code(3, PNorm(p), 0.35, 4000, seed);
    const geometry::LpCode twisted = geometry::code_twist(code, PNorm(2.0));
    const double half_p = 0.5 * p;
    for (Eigen::Index i = 0; i < code.size(); ++i) {
      for (Eigen::Index j = i + 1; j < code.size(); ++j) {
        const double dp = geometry::lp_norm(
            (code.points().row(i) - code.points().row(j)).transpose(),
            code.p());
        const double d2 = (twisted.points().row(i) - twisted.points().row(j))
                              .norm();
        const double floor_val =
            std::exp2(1.0 - half_p) * std::pow(dp, half_p);
        s.check(d2 >= floor_val - geometry::kGeomSlack, [&] {
          return describe("p=%.17g pair(%ld,%ld) l2=%.17g floor=%.17g", p,
                          static_cast<long>(i), static_cast<long>(j), d2,
                          floor_val);
        });
      }
    }
  }
  return s.take();
}

SuiteResult geometry_lift_monotonic(std::uint64_t seed, long cases) {
  Suite s("geometry.lift_monotonic");
  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    const int n = 2 + static_cast<int>(rng.uniform() * 4);
    const int count = 3 + static_cast<int>(rng.uniform() * 6);
    const double p = rng.uniform(1.0, 8.0);
    PointMatrix centers(count, n);
    for (int i = 0; i < count; ++i) {
      LpVector x(n);
      for (int k = 0; k < n; ++k) x[k] = rng.uniform(-1.0, 1.0);
      const double norm = geometry::lp_norm(x, PNorm(p));
      if (norm > 0.0) x *= rng.uniform() / norm;  // strictly inside the ball
      centers.row(i) = x.transpose();
    }
    const geometry::LpCode lifted = geometry::lift_to_sphere(centers, PNorm(p));
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        const double before = geometry::lp_norm(
            (centers.row(i) - centers.row(j)).transpose(), PNorm(p));
        const double after = geometry::lp_norm(
            (lifted.points().row(i) - lifted.points().row(j)).transpose(),
            PNorm(p));
        s.check(after >= before - geometry::kGeomSlack, [&] {
          return describe("p=%.17g pair(%d,%d) before=%.17g after=%.17g", p,
                          i, j, before, after);
        });
      }
    }
  }
  return s.take();
}

SuiteResult geometry_circle_chain(std::uint64_t seed, int seeds) {
  Suite s("geometry.circle_chain");
  for (int sdx = 0; sdx < seeds; ++sdx) {
    for (double p : {2.0, 3.0, 4.0, 6.0, 8.0}) {
      for (double d : {0.2, 0.3, 0.5, 0.7, 0.9}) {
        const geometry::LpCode code =
            geometry::greedy_code(2, PNorm(p), d, 20000, seed + sdx);
        const double d2 = std::min(1.0, std::pow(d, 0.5 * p));
        const int cap = geometry::circle_code_capacity(2.0 * std::asin(d2));
        s.check(static_cast<int>(code.size()) <= cap, [&] {
          return describe("p=%.17g d=%.17g witness=%ld oracle=%d", p, d,
                          static_cast<long>(code.size()), cap);
        });
      }
    }
  }
  return s.take();
}

SuiteResult geometry_superadditivity(std::uint64_t seed, long cases) {
  Suite s("geometry.superadditivity");
  Rng rng(seed);
  for (long i = 0; i < cases; ++i) {
    const double w = rng.uniform_pos();
    const double z = rng.uniform_pos();
    const double e = 0.5 * rng.uniform(2.0, 64.0);
    const double lhs = std::pow(w + z, e);
    const double rhs = std::pow(w, e) + std::pow(z, e);
    s.check(lhs >= rhs - 1e-9 * std::max(1.0, lhs), [&] {
      return describe("w=%.17g z=%.17g p/2=%.17g lhs=%.17g rhs=%.17g", w, z,
                      e, lhs, rhs);
    });
  }
  return s.take();
}

// ---- volumes ---------------------------------------------------------------

SuiteResult volumes_mc_agreement(std::uint64_t seed, std::int64_t samples,
                                 bool full_grid) {
  Suite s("volumes.mc_agreement");
  const std::vector<int> ns =
      full_grid ? std::vector<int>{1, 2, 3, 4, 5} : std::vector<int>{1, 2, 3};
  const std::vector<double> ps = full_grid
                                     ? std::vector<double>{1.0, 1.5, 2.0, 3.0, 4.0}
                                     : std::vector<double>{1.0, 2.0, 4.0};
  std::uint64_t stream = seed;
  for (int n : ns) {
    for (double p : ps) {
      const auto mc = volumes::monte_carlo_volume(n, PNorm(p), samples,
                                                  ++stream);
      const double closed =
          volumes::log2_ball_volume(n, PNorm(p), 1.0).log2_volume;
      const double tol = 3.0 * mc.std_error + 1e-12;
      s.check(std::abs(mc.log2_volume - closed) <= tol, [&] {
        return describe("n=%d p=%.17g mc=%.17g closed=%.17g 3se=%.17g", n, p,
                        mc.log2_volume, closed, tol);
      });
    }
  }
  return s.take();
}

SuiteResult volumes_normalized_residual() {
  Suite s("volumes.normalized_residual");
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0}) {
    const double residual = std::abs(volumes::normalized_log_volume(10000, PNorm(p)) -
                                     bounds::b_exponent(PNorm(p)));
    s.check(residual <= 2e-3, [&] {
      return describe("p=%.17g residual=%.17g", p, residual);
    });
  }
  return s.take();
}

SuiteResult volumes_containment(std::uint64_t seed, long cases) {
  Suite s("volumes.containment");
  Rng rng(seed);
  for (long i = 0; i < cases; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform() * 7);
    const double p = rng.uniform(1.0, 8.0);
    const double q = rng.uniform(p, 8.0);
    LpVector x(n);
    for (int k = 0; k < n; ++k) x[k] = rng.uniform(-1.0, 1.0);
    // Scale onto the boundary of B_q^n(n^{1/q}), the hardest case.
    const double mq =
        std::pow(n, -1.0 / q) * geometry::lp_norm(x, PNorm(q));
    if (mq == 0.0) continue;
    x *= rng.uniform() / mq;
    const double mp = std::pow(n, -1.0 / p) * geometry::lp_norm(x, PNorm(p));
    s.check(mp <= 1.0 + 1e-12, [&] {
      return describe("n=%d p=%.17g q=%.17g Mp=%.17g", n, p, q, mp);
    });
  }
  return s.take();
}

SuiteResult volumes_power_mean(std::uint64_t seed, long cases) {
  Suite s("volumes.power_mean");
  Rng rng(seed);
  for (long i = 0; i < cases; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform() * 8);
    const double p = rng.uniform(1.0, 8.0);
    const double q = rng.uniform(p, 8.0);
    LpVector x(n);
    for (int k = 0; k < n; ++k) x[k] = rng.uniform(-1.0, 1.0);
    const double gap = volumes::power_mean_check(x, PNorm(p), PNorm(q));
    s.check(gap >= -1e-12, [&] {
      return describe("n=%d p=%.17g q=%.17g gap=%.17g", n, p, q, gap);
    });
  }
  return s.take();
}

}  // namespace

SuiteResult run_transfer_fuzz(
    std::uint64_t seed, long cases,
    const std::function<double(double, double, double)>& margin) {
  Suite s("geometry.transfer_fuzz");
  Rng rng(seed);
  for (long i = 0; i < cases; ++i) {
    double x = rng.uniform(-2.0, 2.0);
    double y = rng.uniform(-2.0, 2.0);
    const double p = rng.uniform(2.0, 64.0);
    const double scale = std::max(std::abs(x), std::abs(y));
    if (scale > 0.0) {
      x /= scale;
      y /= scale;
    }
    const double m = margin(x, y, p);
    s.check(m >= -1e-10, [&] {
      return describe("x=%.17g y=%.17g p=%.17g margin=%.17g", x, y, p, m);
    });
  }
  return s.take();
}

VerificationReport run_verification(std::uint64_t seed, Level level) {
  const bool full = level == Level::kFull;
  const auto t0 = std::chrono::steady_clock::now();

  VerificationReport report;
  report.seed = seed;

  report.suites.push_back(specialfn_factorial());
  report.suites.push_back(specialfn_duplication(seed + 1, 100));
  report.suites.push_back(specialfn_monotonic());

  report.suites.push_back(bounds_endpoint_identity());
  report.suites.push_back(bounds_strict_improvement());
  report.suites.push_back(bounds_stitch_at_2());
  report.suites.push_back(bounds_optimizer_sanity(seed + 2, full ? 1000 : 200));
  report.suites.push_back(bounds_rankin_feasibility());
  report.suites.push_back(bounds_kl_transfer_offset());
  report.suites.push_back(bounds_continuity_at_2());

  report.suites.push_back(run_transfer_fuzz(
      seed + 3, full ? 1000000 : 10000, [](double x, double y, double p) {
        return geometry::transfer_margin(x, y, PNorm(p));
      }));
  report.suites.push_back(geometry_twist_norm(seed + 4, full ? 10000 : 1000));
  report.suites.push_back(geometry_code_transfer(seed + 5));
  report.suites.push_back(geometry_lift_monotonic(seed + 6, full ? 1000 : 100));
  report.suites.push_back(geometry_circle_chain(seed + 7, full ? 3 : 1));
  report.suites.push_back(
      geometry_superadditivity(seed + 8, full ? 100000 : 10000));

  report.suites.push_back(
      volumes_mc_agreement(seed + 9, full ? 1000000 : 100000, full));
  report.suites.push_back(volumes_normalized_residual());
  report.suites.push_back(volumes_containment(seed + 10, full ? 10000 : 1000));
  report.suites.push_back(volumes_power_mean(seed + 11, full ? 100000 : 10000));

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string report_to_text(const VerificationReport& report) {
  std::string out;
  char line[256];
  for (const SuiteResult& s : report.suites) {
    std::snprintf(line, sizeof(line), "%-28s cases=%-8ld failures=%ld\n",
                  s.name.c_str(), s.cases_run, s.failures);
    out += line;
    if (s.first_counterexample) {
      out += "  counterexample: " + *s.first_counterexample + "\n";
    }
  }
  std::snprintf(line, sizeof(line),
                "seed=%llu elapsed=%.2fs total_failures=%ld\n",
                static_cast<unsigned long long>(report.seed),
                report.elapsed_seconds, report.total_failures());
  out += line;
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = report.seed;
  j["elapsed_seconds"] = report.elapsed_seconds;
  j["total_failures"] = report.total_failures();
  auto suites = nlohmann::ordered_json::array();
  for (const SuiteResult& s : report.suites) {
    nlohmann::ordered_json item;
    item["name"] = s.name;
    item["cases_run"] = s.cases_run;
    item["failures"] = s.failures;
    item["first_counterexample"] =
        s.first_counterexample ? nlohmann::ordered_json(*s.first_counterexample)
                               : nullptr;
    suites.push_back(std::move(item));
  }
  j["suites"] = std::move(suites);
  return j.dump(2);
}

}  // namespace superball::verify
