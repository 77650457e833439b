#ifndef SUPERBALL_VOLUMES_HPP
#define SUPERBALL_VOLUMES_HPP

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>

#include "superball/geometry.hpp"
#include "superball/specialfn.hpp"
#include "superball/types.hpp"

namespace superball::volumes {

/// log2 of an lp-ball volume. All volume arithmetic stays in log space;
/// vol B_p^n underflows a double by n ~ 300.
struct VolumeResult {
  double log2_volume;
  int n;
  double p;
  double radius;
};

/// log2 vol B_p^n(radius) = n log2 radius + n + n log2 Gamma(1 + 1/p)
/// - log2 Gamma(1 + n/p), for 1 <= n <= 1e5.
inline VolumeResult log2_ball_volume(int n, PNorm p, double radius) {
  if (n < 1 || n > 100000) {
    throw std::domain_error("log2_ball_volume: n must lie in [1, 1e5]");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::domain_error("log2_ball_volume: radius must be positive");
  }
  const double inv_p = 1.0 / p.value();
  const double value = n * std::log2(radius) + n +
                       n * specialfn::log2_gamma(1.0 + inv_p) -
                       specialfn::log2_gamma(1.0 + n * inv_p);
  return VolumeResult{value, n, p.value(), radius};
}

/// (1/n) log2 vol B_p^n(n^{1/p}); converges to b_exponent(p) as n grows.
inline double normalized_log_volume(int n, PNorm p) {
  const double radius = std::pow(static_cast<double>(n), 1.0 / p.value());
  return log2_ball_volume(n, p, radius).log2_volume / n;
}

/// Monte Carlo estimate of log2 vol B_p^n by uniform sampling in [-1, 1]^n.
/// `std_error` is the standard error propagated into log2 space.
/// Deterministic given the seed.
struct MonteCarloVolume {
  double log2_volume;
  double std_error;
  std::int64_t hits;
  std::int64_t samples;
};

MonteCarloVolume monte_carlo_volume(int n, PNorm p, std::int64_t samples,
                                    std::uint64_t seed);

/// Power-mean gap M_q(x) - M_p(x) with M_r(x) = n^{-1/r} ||x||_r.
/// Non-negative for p <= q up to ~1e-12 roundoff; this is the pointwise
/// form of the scaled-ball nesting B_p^n(n^{1/p}) >= B_q^n(n^{1/q}).
template <typename Derived>
double power_mean_check(const Eigen::MatrixBase<Derived>& x, PNorm p,
                        PNorm q) {
  if (p.value() > q.value()) {
    throw std::domain_error("power_mean_check: requires p <= q");
  }
  const double n = static_cast<double>(x.size());
  const double mq = std::pow(n, -1.0 / q.value()) * geometry::lp_norm(x, q);
  const double mp = std::pow(n, -1.0 / p.value()) * geometry::lp_norm(x, p);
  return mq - mp;
}

}  // namespace superball::volumes

#endif  // SUPERBALL_VOLUMES_HPP
