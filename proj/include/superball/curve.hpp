#ifndef SUPERBALL_CURVE_HPP
#define SUPERBALL_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "superball/types.hpp"

namespace superball::curve {

/// One sampled row of the bound table. Columns that do not apply at this p
/// (rankin/q_star/kl_transfer above 2, vdcs/new_bound/theta_star below 2)
/// are left empty.
struct CurveRow {
  double p;
  std::optional<double> vdcs;
  std::optional<double> new_bound;
  std::optional<double> theta_star;
  std::optional<double> rankin;
  std::optional<double> q_star;
  std::optional<double> kl_transfer;
  double best;
  Method best_method;
};

struct BoundCurve {
  std::vector<CurveRow> rows;
  double p_min;
  double p_max;
};

/// Shortest representation capped at 12 significant digits ("%.12g"):
/// deterministic and more precise than every tolerance downstream.
std::string format_number(double value);

/// Sample every bound over [p_min, p_max] at `samples` evenly spaced points
/// (endpoints included, strictly increasing p).
BoundCurve sample_curve(double p_min, double p_max, int samples);

inline constexpr const char* kCsvHeader =
    "p,vdcs,new_bound,theta_star,rankin,q_star,kl_transfer,best,best_method";

/// Render the curve as CSV. Byte-identical output for identical inputs.
std::string curve_to_csv(const BoundCurve& curve);

/// Standalone SVG plot of the curve: per regime, a dashed blue polyline for
/// the previous best bound (-1/p above 2, Rankin below) and a solid red one
/// for the bound derived from the spherical-code exponent. The polylines
/// live in a group whose transform maps data coordinates to the canvas, so
/// their vertices are the raw (p, bound) samples.
std::string curve_to_svg(const BoundCurve& curve);

/// Write a file or throw std::runtime_error with the failing path.
void write_file(const std::string& path, const std::string& contents);

}  // namespace superball::curve

#endif  // SUPERBALL_CURVE_HPP
