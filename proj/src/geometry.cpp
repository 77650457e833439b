#include "superball/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

#include "superball/rng.hpp"

namespace superball::geometry {

namespace {

constexpr double kPi = 3.141592653589793;

// Acceptance threshold for witness separation: relative slack absorbs the
// rounding of normalized points, keeping exact-contact configurations
// (antipodes, hexagon) admissible.
double separation_floor(double d) { return 2.0 * d * (1.0 - 1e-12); }

// Uniform direction on the unit lp sphere: each coordinate is drawn from
// the p-generalized normal (density ~ exp(-|t|^p)) via the representation
// |t| = Gamma(1 + 1/p)^{1/p} * U, then the vector is normalized.
LpVector sample_direction(Rng& rng, int n, PNorm p) {
  LpVector v(n);
  for (;;) {
    for (int i = 0; i < n; ++i) {
      const double g = rng.gamma(1.0 + 1.0 / p.value());
      const double mag = std::pow(g, 1.0 / p.value()) * rng.uniform_pos();
      v[i] = rng.coin() ? mag : -mag;
    }
    const double norm = lp_norm(v, p);
    if (norm > 0.0 && std::isfinite(norm)) return v / norm;
  }
}

// Point on the unit lp circle at direction angle t.
LpVector circle_point(double t, PNorm p) {
  LpVector v(2);
  v[0] = std::cos(t);
  v[1] = std::sin(t);
  return v / lp_norm(v, p);
}

double circle_angle(const LpVector& x) { return std::atan2(x[1], x[0]); }

// First parameter offset delta in (0, pi] (signed by `dir`) at which the lp
// chord from `base` (sitting at direction angle t0) reaches `target`, found
// by a coarse scan and bisection. The chord is measured against `base`
// itself so the acceptance check later recomputes the identical distance.
// Returns false when even the antipode (delta = pi) stays below target.
bool contact_offset(const LpVector& base, double t0, int dir, PNorm p,
                    double target, double* delta_out) {
  const auto chord = [&](double delta) {
    return lp_norm(base - circle_point(t0 + dir * delta, p), p);
  };
  constexpr int kSteps = 2048;
  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  for (int k = 1; k <= kSteps; ++k) {
    const double delta = kPi * k / kSteps;
    if (chord(delta) >= target) {
      hi = delta;
      lo = kPi * (k - 1) / kSteps;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) return false;
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (chord(mid) >= target ? hi : lo) = mid;
  }
  *delta_out = hi;
  return true;
}

}  // namespace

LpCode code_twist(const LpCode& code, PNorm q) {
  if (std::abs(code.radius() - 1.0) > kGeomSlack) {
    throw std::domain_error("code_twist: requires a unit-radius code");
  }
  PointMatrix out(code.size(), code.dimension());
  for (Eigen::Index i = 0; i < code.size(); ++i) {
    out.row(i) = twist(code.points().row(i).transpose(), code.p(), q);
  }
  return LpCode(q, 1.0, std::move(out));
}

LpCode lift_to_sphere(const PointMatrix& centers, PNorm p) {
  PointMatrix out(centers.rows(), centers.cols() + 1);
  for (Eigen::Index i = 0; i < centers.rows(); ++i) {
    const double norm = lp_norm(centers.row(i).transpose(), p);
    if (norm > 1.0 + kGeomSlack) {
      throw std::domain_error(
          "lift_to_sphere: center outside the unit ball (||x||_p > 1)");
    }
    const double power_sum =
        centers.row(i).cwiseAbs().array().pow(p.value()).sum();
    out.row(i).head(centers.cols()) = centers.row(i);
    out(i, centers.cols()) =
        std::pow(std::max(0.0, 1.0 - power_sum), 1.0 / p.value());
  }
  return LpCode(p, 1.0, std::move(out));
}

LpCode greedy_code(int n, PNorm p, double d, int trials, std::uint64_t seed) {
  if (n < 2) throw std::domain_error("greedy_code: requires dimension n >= 2");
  if (!(d > 0.0 && d <= 1.0)) {
    throw std::domain_error("greedy_code: requires d in (0, 1]");
  }
  if (trials < 1) throw std::domain_error("greedy_code: requires trials >= 1");

  Rng rng(seed);
  const double floor_dist = separation_floor(d);
  std::vector<LpVector> accepted;
  std::deque<LpVector> derived;

  const auto fits = [&](const LpVector& c) {
    for (const LpVector& a : accepted) {
      if (lp_norm(c - a, p) < floor_dist) return false;
    }
    return true;
  };

  const auto spawn_derived = [&](const LpVector& x) {
    derived.push_back(-x);
    if (n == 2) {
      const double t0 = circle_angle(x);
      for (int dir : {+1, -1}) {
        double delta = 0.0;
        if (contact_offset(x, t0, dir, p, floor_dist, &delta)) {
          derived.push_back(circle_point(t0 + dir * delta, p));
        }
      }
    }
  };

  int rejections = 0;
  while (!derived.empty() || rejections < trials) {
    LpVector c;
    const bool is_random = derived.empty();
    if (is_random) {
      c = sample_direction(rng, n, p);
    } else {
      c = derived.front();
      derived.pop_front();
    }
    if (fits(c)) {
      accepted.push_back(c);
      spawn_derived(c);
      if (is_random) rejections = 0;
    } else if (is_random) {
      ++rejections;
    }
  }

  PointMatrix pts(static_cast<Eigen::Index>(accepted.size()), n);
  for (Eigen::Index i = 0; i < pts.rows(); ++i) pts.row(i) = accepted[i];
  return LpCode(p, 1.0, std::move(pts));
}

int circle_code_capacity(double theta) {
  if (!(theta > 0.0 && theta <= kPi)) {
    throw std::domain_error("circle_code_capacity: theta must lie in (0, pi]");
  }
  // The nudge keeps exact divisors (e.g. theta = pi/3) from rounding down.
  return static_cast<int>(std::floor(2.0 * kPi / theta + 1e-9));
}

}  // namespace superball::geometry
