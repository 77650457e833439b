#ifndef SUPERBALL_VERIFY_HPP
#define SUPERBALL_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace superball::verify {

enum class Level { kQuick, kFull };

struct SuiteResult {
  std::string name;
  long cases_run = 0;
  long failures = 0;
  std::optional<std::string> first_counterexample;
};

struct VerificationReport {
  std::vector<SuiteResult> suites;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;

  long total_failures() const {
    long total = 0;
    for (const SuiteResult& s : suites) total += s.failures;
    return total;
  }
};

/// Run every property suite. Quick level trims the fuzz case counts; full
/// runs the complete campaign (1e6 transfer triples, 1e6-sample Monte Carlo
/// volume checks, three greedy seeds per grid point).
VerificationReport run_verification(std::uint64_t seed, Level level);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

/// Transfer-inequality fuzz with an injectable margin function, so a broken
/// margin is detectable by tests of the harness itself. Inputs are drawn
/// from [-2, 2]^2 x [2, 64] and scaled onto the unit box before evaluation
/// (the margin obeys margin(ax, ay, p) = a^{p/2} margin(x, y, p), and p-th
/// powers of O(1) inputs keep roundoff below the 1e-10 slack).
SuiteResult run_transfer_fuzz(
    std::uint64_t seed, long cases,
    const std::function<double(double, double, double)>& margin);

}  // namespace superball::verify

#endif  // SUPERBALL_VERIFY_HPP
