#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "superball/curve.hpp"

namespace superball::curve {

namespace {

// Canvas layout (pixels).
constexpr double kWidth = 840.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 78.0;
constexpr double kRight = 810.0;
constexpr double kTop = 56.0;
constexpr double kBottom = 496.0;

constexpr const char* kDashedColor = "#1f77b4";  // previous best: dashed blue
constexpr const char* kSolidColor = "#d62728";   // new bound: solid red

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Series {
  const char* id;
  bool dashed;
  std::vector<std::pair<double, double>> pts;
};

void append_polyline(std::string& svg, const Series& s, double dash_unit) {
  if (s.pts.size() < 2) return;
  svg += "    <polyline id=\"";
  svg += s.id;
  svg += "\" fill=\"none\" stroke=\"";
  svg += s.dashed ? kDashedColor : kSolidColor;
  svg += "\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"";
  if (s.dashed) {
    // Dash pattern expressed in data units so it survives the group
    // transform at roughly constant on-screen size.
    svg += " stroke-dasharray=\"" + format_number(6.0 * dash_unit) + " " +
           format_number(4.0 * dash_unit) + "\"";
  }
  svg += " points=\"";
  bool first = true;
  for (const auto& [p, v] : s.pts) {
    if (!first) svg += ' ';
    first = false;
    svg += format_number(p);
    svg += ',';
    svg += format_number(v);
  }
  svg += "\"/>\n";
}

double nice_step(double span, double target_ticks) {
  const double raw = span / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (mag * m >= raw) return mag * m;
  }
  return mag * 10.0;
}

}  // namespace

std::string curve_to_svg(const BoundCurve& curve) {
  Series dashed_low{"dashed-low", true, {}};
  Series solid_low{"solid-low", false, {}};
  Series dashed_high{"dashed-high", true, {}};
  Series solid_high{"solid-high", false, {}};

  double v_lo = std::numeric_limits<double>::infinity();
  double v_hi = -std::numeric_limits<double>::infinity();
  const auto track = [&](double v) {
    v_lo = std::min(v_lo, v);
    v_hi = std::max(v_hi, v);
  };
  for (const CurveRow& row : curve.rows) {
    if (row.rankin) {
      dashed_low.pts.emplace_back(row.p, *row.rankin);
      track(*row.rankin);
    }
    if (row.kl_transfer) {
      solid_low.pts.emplace_back(row.p, *row.kl_transfer);
      track(*row.kl_transfer);
    }
    if (row.vdcs) {
      dashed_high.pts.emplace_back(row.p, *row.vdcs);
      track(*row.vdcs);
    }
    if (row.new_bound) {
      solid_high.pts.emplace_back(row.p, *row.new_bound);
      track(*row.new_bound);
    }
  }
  if (!std::isfinite(v_lo)) {
    v_lo = -1.0;
    v_hi = 0.0;
  }

  // Pad the value range outward onto a 0.05 grid for stable tick labels.
  v_lo = 0.05 * std::floor(v_lo / 0.05 - 0.5);
  v_hi = 0.05 * std::ceil(v_hi / 0.05 + 0.5);

  const double sx = (kRight - kLeft) / (curve.p_max - curve.p_min);
  const double sy = (kBottom - kTop) / (v_hi - v_lo);
  const double tx = kLeft - sx * curve.p_min;
  const double ty = kBottom + sy * v_lo;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) +
         "\" height=\"" + px(kHeight) + "\" viewBox=\"0 0 " + px(kWidth) +
         " " + px(kHeight) + "\">\n";
  svg += "  <title>Upper bounds on the lp-ball packing exponent</title>\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes and ticks (pixel space).
  svg += "  <g stroke=\"#333333\" stroke-width=\"1\">\n";
  svg += "    <line x1=\"" + px(kLeft) + "\" y1=\"" + px(kBottom) +
         "\" x2=\"" + px(kRight) + "\" y2=\"" + px(kBottom) + "\"/>\n";
  svg += "    <line x1=\"" + px(kLeft) + "\" y1=\"" + px(kTop) + "\" x2=\"" +
         px(kLeft) + "\" y2=\"" + px(kBottom) + "\"/>\n";
  svg += "  </g>\n";

  svg += "  <g font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">\n";
  const double x_step = nice_step(curve.p_max - curve.p_min, 8.0);
  for (double t = std::ceil(curve.p_min / x_step) * x_step;
       t <= curve.p_max + 1e-9 * x_step; t += x_step) {
    const double x = tx + sx * t;
    svg += "    <line x1=\"" + px(x) + "\" y1=\"" + px(kBottom) + "\" x2=\"" +
           px(x) + "\" y2=\"" + px(kBottom + 5) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "    <text x=\"" + px(x) + "\" y=\"" + px(kBottom + 20) +
           "\" text-anchor=\"middle\">" + format_number(t) + "</text>\n";
  }
  const double y_step = nice_step(v_hi - v_lo, 8.0);
  for (double t = std::ceil(v_lo / y_step) * y_step; t <= v_hi + 1e-9 * y_step;
       t += y_step) {
    const double y = ty - sy * t;
    svg += "    <line x1=\"" + px(kLeft - 5) + "\" y1=\"" + px(y) +
           "\" x2=\"" + px(kLeft) + "\" y2=\"" + px(y) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "    <text x=\"" + px(kLeft - 9) + "\" y=\"" + px(y + 4) +
           "\" text-anchor=\"end\">" + format_number(t) + "</text>\n";
  }
  svg += "    <text x=\"" + px(0.5 * (kLeft + kRight)) + "\" y=\"" +
         px(kBottom + 44) + "\" text-anchor=\"middle\" font-size=\"15\">p"
         "</text>\n";
  svg += "    <text x=\"20\" y=\"" + px(0.5 * (kTop + kBottom)) +
         "\" text-anchor=\"middle\" font-size=\"15\" transform=\"rotate(-90 "
         "20 " +
         px(0.5 * (kTop + kBottom)) +
         ")\">upper bound on the packing exponent (bits/dimension)</text>\n";
  svg += "  </g>\n";

  // Data curves: vertices are raw (p, bound) samples.
  const double dash_unit = 1.0 / sx;
  svg += "  <g transform=\"translate(" + px(tx) + " " + px(ty) + ") scale(" +
         format_number(sx) + " " + format_number(-sy) + ")\">\n";
  append_polyline(svg, dashed_low, dash_unit);
  append_polyline(svg, solid_low, dash_unit);
  append_polyline(svg, dashed_high, dash_unit);
  append_polyline(svg, solid_high, dash_unit);
  svg += "  </g>\n";

  // Legend.
  const double lx = kRight - 240.0;
  const double ly = kTop + 14.0;
  svg += "  <g font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">\n";
  svg += "    <line x1=\"" + px(lx) + "\" y1=\"" + px(ly) + "\" x2=\"" +
         px(lx + 36) + "\" y2=\"" + px(ly) + "\" stroke=\"" + kDashedColor +
         "\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
  svg += "    <text x=\"" + px(lx + 44) + "\" y=\"" + px(ly + 4) +
         "\">previous best upper bound</text>\n";
  svg += "    <line x1=\"" + px(lx) + "\" y1=\"" + px(ly + 22) + "\" x2=\"" +
         px(lx + 36) + "\" y2=\"" + px(ly + 22) + "\" stroke=\"" +
         kSolidColor + "\" stroke-width=\"2\"/>\n";
  svg += "    <text x=\"" + px(lx + 44) + "\" y=\"" + px(ly + 26) +
         "\">new upper bound</text>\n";
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace superball::curve
