#include "superball/volumes.hpp"

#include <cmath>
#include <limits>

#include "superball/rng.hpp"

namespace superball::volumes {

MonteCarloVolume monte_carlo_volume(int n, PNorm p, std::int64_t samples,
                                    std::uint64_t seed) {
  if (n < 1 || n > 10) {
    // Acceptance probability scales like vol / 2^n; past n = 10 the
    // estimator is too noisy to act as an oracle.
    throw std::domain_error("monte_carlo_volume: n must lie in [1, 10]");
  }
  if (samples < 10000) {
    throw std::domain_error("monte_carlo_volume: needs at least 1e4 samples");
  }

  Rng rng(seed);
  const double pv = p.value();
  std::int64_t hits = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    double power_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      power_sum += std::pow(std::abs(rng.uniform(-1.0, 1.0)), pv);
    }
    if (power_sum <= 1.0) ++hits;
  }

  const double fraction =
      static_cast<double>(hits) / static_cast<double>(samples);
  if (hits == 0) {
    return MonteCarloVolume{-std::numeric_limits<double>::infinity(),
                            std::numeric_limits<double>::infinity(), 0,
                            samples};
  }
  const double se_fraction =
      std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(samples));
  const double se_log2 = se_fraction / (fraction * specialfn::kLn2);
  return MonteCarloVolume{n + std::log2(fraction), se_log2, hits, samples};
}

}  // namespace superball::volumes
