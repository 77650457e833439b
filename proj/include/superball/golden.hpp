#ifndef SUPERBALL_GOLDEN_HPP
#define SUPERBALL_GOLDEN_HPP

#include <algorithm>
#include <cmath>
#include <utility>

namespace superball {

struct ScalarMin {
  double argmin = 0.0;
  double value = 0.0;
};

/// Golden-section search on [a, b], shrinking the bracket until its width is
/// at most xtol. The function is evaluated at the bracket endpoints as well,
/// so boundary minima are returned exactly.
template <typename F>
ScalarMin golden_section_minimize(F&& f, double a, double b, double xtol) {
  constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  if (b < a) std::swap(a, b);

  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }

  ScalarMin best{c, fc};
  if (fd < best.value) best = {d, fd};
  const double fa = f(a);
  if (fa < best.value) best = {a, fa};
  const double fb = f(b);
  if (fb < best.value) best = {b, fb};
  return best;
}

/// Uniform pre-scan of `scan_points` samples on [a, b] followed by
/// golden-section refinement of the bracketing cell. The scan guards against
/// missing a basin when unimodality is unknown; the refinement supplies the
/// precision.
template <typename F>
ScalarMin scan_then_golden(F&& f, double a, double b, int scan_points,
                           double xtol) {
  if (b < a) std::swap(a, b);
  if (b - a <= xtol || scan_points < 3) {
    return golden_section_minimize(f, a, b, xtol);
  }

  int best_i = 0;
  double best_v = f(a);
  const double span = b - a;
  for (int i = 1; i < scan_points; ++i) {
    const double x =
        (i == scan_points - 1) ? b : a + span * i / (scan_points - 1);
    const double v = f(x);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }

  const double step = span / (scan_points - 1);
  const double lo = std::max(a, a + step * (best_i - 1));
  const double hi = std::min(b, a + step * (best_i + 1));
  return golden_section_minimize(f, lo, hi, xtol);
}

}  // namespace superball

#endif  // SUPERBALL_GOLDEN_HPP
