#ifndef SUPERBALL_GEOMETRY_HPP
#define SUPERBALL_GEOMETRY_HPP

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "superball/types.hpp"

namespace superball::geometry {

/// Points are dense real vectors; codes store one point per row.
using LpVector = Eigen::VectorXd;
using PointMatrix = Eigen::MatrixXd;

/// Absolute slack for geometric predicates on O(1)-scale data. p-th powers
/// amplify roundoff, so inputs are kept normalized before comparisons.
inline constexpr double kGeomSlack = 1e-9;

/// lp norm, max-factored so that large p neither overflows nor underflows.
template <typename Derived>
double lp_norm(const Eigen::MatrixBase<Derived>& x, PNorm p) {
  const double m = x.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  const double s = (x.cwiseAbs() / m).array().pow(p.value()).sum();
  return m * std::pow(s, 1.0 / p.value());
}

/// Coordinatewise signed power map x_i -> sgn(x_i) |x_i|^{p/q} carrying the
/// lp sphere onto the lq sphere (sgn(0) = 0, so the map is odd). Requires
/// q <= p; the distance-transfer inequality runs in that direction only.
template <typename Derived>
LpVector twist(const Eigen::MatrixBase<Derived>& x, PNorm p, PNorm q) {
  if (q.value() > p.value()) {
    throw std::domain_error("twist: requires 1 <= q <= p");
  }
  const double e = p.value() / q.value();
  LpVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    out[i] = xi == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(xi), e), xi);
  }
  return out;
}

/// Margin of the scalar transfer inequality for p >= 2:
/// |x* - y*| - 2^{1-p/2} |x - y|^{p/2} with x* = sgn(x)|x|^{p/2}.
/// Non-negative up to floating slack of order 1e-12 (1 + |x| + |y|)^p.
inline double transfer_margin(double x, double y, PNorm p) {
  if (p.value() < 2.0) {
    throw std::domain_error("transfer_margin: requires p >= 2");
  }
  const double half_p = 0.5 * p.value();
  const auto star = [&](double t) {
    return t == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(t), half_p), t);
  };
  return std::abs(star(x) - star(y)) -
         std::exp2(1.0 - half_p) * std::pow(std::abs(x - y), half_p);
}

/// A finite set of points on the lp sphere of the given radius, with the
/// minimum pairwise lp distance cached at construction. Instances are
/// immutable.
class LpCode {
public:
  LpCode(PNorm p, double radius, PointMatrix points)
      : p_(p), radius_(radius), points_(std::move(points)) {
    if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
      throw std::domain_error("LpCode: radius must be positive and finite");
    }
    if (points_.rows() < 1) {
      throw std::domain_error("LpCode: at least one point required");
    }
    if (!points_.allFinite()) {
      throw std::domain_error("LpCode: all coordinates must be finite");
    }
    for (Eigen::Index i = 0; i < points_.rows(); ++i) {
      const double r = lp_norm(points_.row(i).transpose(), p_);
      if (std::abs(r - radius_) > kGeomSlack * radius_) {
        throw std::domain_error(
            "LpCode: point off the sphere (|norm - radius| too large)");
      }
    }
    if (points_.rows() >= 2) {
      min_distance_ = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < points_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < points_.rows(); ++j) {
          const double d =
              lp_norm((points_.row(i) - points_.row(j)).transpose(), p_);
          if (d < min_distance_) min_distance_ = d;
        }
      }
    }
  }

  PNorm p() const { return p_; }
  double radius() const { return radius_; }
  const PointMatrix& points() const { return points_; }
  Eigen::Index size() const { return points_.rows(); }
  int dimension() const { return static_cast<int>(points_.cols()); }

  double min_distance() const {
    if (points_.rows() < 2) {
      throw std::domain_error(
          "LpCode::min_distance: needs at least two points");
    }
    return min_distance_;
  }

private:
  PNorm p_;
  double radius_;
  PointMatrix points_;
  double min_distance_ = std::numeric_limits<double>::quiet_NaN();
};

/// Twist a unit-radius lp code into an lq code (q <= p). Pairwise
/// separation 2d becomes at least 2 d^{p/q}.
LpCode code_twist(const LpCode& code, PNorm q);

/// Lift centers with ||x||_p <= 1 onto the unit lp sphere one dimension up
/// by appending the coordinate (1 - ||x||_p^p)^{1/p}. Pairwise distances
/// never decrease. `centers` holds one point per row.
LpCode lift_to_sphere(const PointMatrix& centers, PNorm p);

/// Maximal-code witness search on the unit lp sphere: seeded random
/// candidates accepted when at least 2d away from every accepted point,
/// stopping after `trials` consecutive rejections. Accepted points spawn
/// derived candidates (the antipode, and for n = 2 the two contact
/// positions along the lp circle), which lets the search saturate the
/// configurations random sampling alone cannot, such as the antipodal pair
/// at d = 1 and the hexagon at (p, d) = (2, 1/2). The result size is a
/// valid lower-bound witness for A_p(n, d). Deterministic given the seed.
LpCode greedy_code(int n, PNorm p, double d, int trials, std::uint64_t seed);

/// Exact circle oracle: the maximum number of points on a circle with
/// pairwise angular separation at least theta, i.e. floor(2 pi / theta)
/// for theta in (0, pi].
int circle_code_capacity(double theta);

}  // namespace superball::geometry

#endif  // SUPERBALL_GEOMETRY_HPP
