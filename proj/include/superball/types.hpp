#ifndef SUPERBALL_TYPES_HPP
#define SUPERBALL_TYPES_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace superball {

/// Validated exponent of an lp norm. The library works on p in [1, 1e6];
/// p = infinity (cubes) is excluded, and beyond 1e6 every bound here is
/// numerically indistinguishable from -1/p.
class PNorm {
public:
  static constexpr double kMin = 1.0;
  static constexpr double kMax = 1e6;

  explicit PNorm(double p) : p_(p) {
    if (!std::isfinite(p) || p < kMin || p > kMax) {
      throw std::domain_error("PNorm: p must be finite and in [1, 1e6], got " +
                              std::to_string(p));
    }
  }

  double value() const { return p_; }

private:
  double p_;
};

/// Angle parameter theta in (0, pi/2]. The right endpoint is admitted as the
/// analytic closure where the packing exponent bound equals -1/p.
class Angle {
public:
  static constexpr double kHalfPi = 1.5707963267948966;

  explicit Angle(double theta) : theta_(theta) {
    if (!std::isfinite(theta) || theta <= 0.0 || theta > kHalfPi) {
      throw std::domain_error("Angle: theta must lie in (0, pi/2], got " +
                              std::to_string(theta));
    }
  }

  double value() const { return theta_; }

private:
  double theta_;
};

/// Which bound produced a value.
enum class Method { kNew, kRankin, kKlTransfer, kVdcs, kComposite };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::kNew: return "new";
    case Method::kRankin: return "rankin";
    case Method::kKlTransfer: return "kl_transfer";
    case Method::kVdcs: return "vdcs";
    case Method::kComposite: return "composite";
  }
  return "?";
}

inline std::optional<Method> method_from_name(const std::string& s) {
  if (s == "new") return Method::kNew;
  if (s == "rankin") return Method::kRankin;
  if (s == "kl_transfer") return Method::kKlTransfer;
  if (s == "vdcs") return Method::kVdcs;
  if (s == "composite") return Method::kComposite;
  return std::nullopt;
}

/// An upper bound on the packing exponent gamma_p, in bits per dimension.
/// `argmin` carries theta* for the theta-optimized bound and 1/q* for the
/// Rankin bound; `winner` is set only for composite results.
struct ExponentBound {
  double value = 0.0;
  Method method = Method::kNew;
  std::optional<double> argmin;
  double p = 2.0;
  std::optional<Method> winner;
};

}  // namespace superball

#endif  // SUPERBALL_TYPES_HPP
