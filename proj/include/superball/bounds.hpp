#ifndef SUPERBALL_BOUNDS_HPP
#define SUPERBALL_BOUNDS_HPP

#include <cmath>
#include <stdexcept>

#include "superball/golden.hpp"
#include "superball/specialfn.hpp"
#include "superball/types.hpp"

namespace superball::bounds {

namespace detail {

//t * log2(t) extended to all t >= 0 with the 0 * log2(0) = 0 convention.
// Unlike specialfn::xlog2x this helper is not clamped to [0, 1]; the
// entropy-like terms below need arguments above 1 for small angles.
inline double tlog2t(double t) { return t > 0.0 ? t * std::log2(t) : 0.0; }

// Optimization domain for the angle parameter. The bound diverges to +inf
// as theta -> 0, so the scan is clamped away from zero.
inline constexpr double kThetaScanLow = 1e-6;
inline constexpr int kScanPoints = 4096;
inline constexpr double kXtol = 1e-12;

}  // namespace detail

/// The spherical-code rate exponent a(theta) in bits. Writing
/// v = (1 - sin theta) / (2 sin theta), this equals
/// (1 + v) log2(1 + v) - v log2(v). Near theta = pi/2 the difference
/// 1 - sin(theta) is formed as 2 sin^2(pi/4 - theta/2), which keeps the
/// evaluation fully accurate where the large-p optimum lives.
inline double kl_exponent(Angle theta) {
  const double t = theta.value();
  const double half_complement = 0.5 * (Angle::kHalfPi - t);
  const double st = std::sin(t);
  const double sh = std::sin(half_complement);
  const double v = sh * sh / st;  // = (1 - sin t) / (2 sin t)
  const double first = (1.0 + v) * std::log1p(v) * specialfn::kLog2E;
  return first - detail::tlog2t(v);
}

/// Euclidean packing exponent bound at angle theta:
/// a(theta) + log2 sin(theta/2).
inline double sphere_exponent(Angle theta) {
  return kl_exponent(theta) + std::log2(std::sin(0.5 * theta.value()));
}

/// The lp packing exponent bound at angle theta for p >= 2:
/// a(theta) + (2/p) log2 sin(theta/2). At p = 2 this is sphere_exponent.
inline double superball_exponent(PNorm p, Angle theta) {
  if (p.value() < 2.0) {
    throw std::domain_error(
        "superball_exponent: valid only for p >= 2 (the exponent bound does "
        "not hold below 2), got p = " + std::to_string(p.value()));
  }
  return kl_exponent(theta) +
         (2.0 / p.value()) * std::log2(std::sin(0.5 * theta.value()));
}

/// Minimize superball_exponent(p, .) over theta in (0, pi/2].
/// Pre-scan of 4096 points on (1e-6, pi/2], then golden-section refinement
/// of the bracketing cell down to |dtheta| <= 1e-12.
inline ExponentBound minimize_superball(PNorm p) {
  if (p.value() < 2.0) {
    throw std::domain_error(
        "minimize_superball: valid only for p >= 2, got p = " +
        std::to_string(p.value()));
  }
  const auto f = [&](double t) { return superball_exponent(p, Angle(t)); };
  const ScalarMin m = scan_then_golden(f, detail::kThetaScanLow,
                                       Angle::kHalfPi, detail::kScanPoints,
                                       detail::kXtol);
  return ExponentBound{m.value, Method::kNew, m.argmin, p.value(),
                       std::nullopt};
}

/// The Euclidean optimum (kappa_KL, theta_KL), computed once from
/// minimize_superball(2) and frozen. Every consumer shares this single
/// source of truth.
struct KlOptimum {
  double kappa;
  double theta;
};

inline const KlOptimum& kl_optimum() {
  static const KlOptimum opt = [] {
    const ExponentBound b = minimize_superball(PNorm(2.0));
    return KlOptimum{b.value, *b.argmin};
  }();
  return opt;
}

/// Normalized volume exponent b(p) = 1 + log2 Gamma(1 + 1/p)
/// + (1/p) log2(p e), in bits.
inline double b_exponent(PNorm p) {
  const double pv = p.value();
  const double inv_p = 1.0 / pv;
  return 1.0 + specialfn::log2_gamma(1.0 + inv_p) +
         inv_p * (std::log(pv) + 1.0) * specialfn::kLog2E;
}

namespace detail {

// Rankin objective as a function of r = 1/q for fixed p.
inline double rankin_objective(double p, double r) {
  const double b_p = b_exponent(PNorm(p));
  const double b_q = b_exponent(PNorm(1.0 / r));
  return b_p - b_q - 1.0 + 1.0 / p +
         (r - 1.0 / p) * std::log2((2.0 - r) / (1.0 - r));
}

}  // namespace detail

/// Rankin's bound for 1 <= p <= 2: the infimum over 1/q in
/// [1/2, (1 + 1/p)/3] of b(p) - b(q) - 1 + 1/p
/// + (1/q - 1/p) log2((2 - 1/q)/(1 - 1/q)). The minimizing 1/q is recorded
/// as the argmin. At p = 2 the feasible interval degenerates to the single
/// point 1/q = 1/2 and the value is exactly -1/2.
inline ExponentBound rankin_bound(PNorm p) {
  const double pv = p.value();
  if (pv > 2.0) {
    throw std::domain_error("rankin_bound: valid only for 1 <= p <= 2, got " +
                            std::to_string(pv));
  }
  const double lo = 0.5;
  const double hi = (1.0 + 1.0 / pv) / 3.0;
  if (hi <= lo) {
    return ExponentBound{detail::rankin_objective(pv, lo), Method::kRankin, lo,
                         pv, std::nullopt};
  }
  const auto f = [&](double r) { return detail::rankin_objective(pv, r); };
  const ScalarMin m =
      scan_then_golden(f, lo, hi, detail::kScanPoints, detail::kXtol);
  return ExponentBound{m.value, Method::kRankin, m.argmin, pv, std::nullopt};
}

/// Transfer of the Euclidean optimum down to 1 <= p <= 2:
/// kappa_KL - b(2) + b(p). The b-terms cancel exactly at p = 2.
inline ExponentBound kl_transfer_bound(PNorm p) {
  const double pv = p.value();
  if (pv > 2.0) {
    throw std::domain_error(
        "kl_transfer_bound: valid only for 1 <= p <= 2, got " +
        std::to_string(pv));
  }
  const double value =
      kl_optimum().kappa - b_exponent(PNorm(2.0)) + b_exponent(p);
  return ExponentBound{value, Method::kKlTransfer, std::nullopt, pv,
                       std::nullopt};
}

/// The classical baseline -1/p, valid for p >= 2.
inline ExponentBound vdcs_bound(PNorm p) {
  if (p.value() < 2.0) {
    throw std::domain_error("vdcs_bound: valid only for p >= 2, got " +
                            std::to_string(p.value()));
  }
  return ExponentBound{-1.0 / p.value(), Method::kVdcs, std::nullopt,
                       p.value(), std::nullopt};
}

/// Composite of two candidate bounds; the candidates arrive in tie-break
/// order ({new, rankin, kl_transfer, vdcs}), so strict < keeps the earlier
/// one on ties.
inline ExponentBound compose_bounds(const ExponentBound& first,
                                    const ExponentBound& second) {
  const ExponentBound& win = second.value < first.value ? second : first;
  return ExponentBound{win.value, Method::kComposite, win.argmin, win.p,
                       win.method};
}

/// Best available upper bound at p: min(rankin, kl_transfer) for p < 2 and
/// min(theta-optimized, -1/p) for p >= 2.
inline ExponentBound best_upper_bound(PNorm p) {
  if (p.value() < 2.0) {
    return compose_bounds(rankin_bound(p), kl_transfer_bound(p));
  }
  return compose_bounds(minimize_superball(p), vdcs_bound(p));
}

/// Two-term large-p expansion -1/p - 1/(ln 4 * p^2 * ln p), used only to
/// cross-validate the optimizer. Meaningless below p = 10.
inline double asymptotic_large_p(PNorm p) {
  const double pv = p.value();
  if (pv < 10.0) {
    throw std::domain_error("asymptotic_large_p: requires p >= 10, got " +
                            std::to_string(pv));
  }
  const double ln4 = 2.0 * specialfn::kLn2;
  return -1.0 / pv - 1.0 / (ln4 * pv * pv * std::log(pv));
}

/// Fixed-angle bound at p = 2 + epsilon with theta held at theta_KL:
/// kappa_KL - (eps / (2 + eps)) log2 sin(theta_KL / 2). Admits epsilon = 0,
/// where it returns kappa_KL exactly.
inline double asymptotic_near_2(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::domain_error(
        "asymptotic_near_2: epsilon must lie in [0, 1], got " +
        std::to_string(epsilon));
  }
  const KlOptimum& opt = kl_optimum();
  return opt.kappa -
         (epsilon / (2.0 + epsilon)) * std::log2(std::sin(0.5 * opt.theta));
}

}  // namespace superball::bounds

#endif  // SUPERBALL_BOUNDS_HPP
