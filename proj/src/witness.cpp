#include "superball/witness.hpp"

#include <cmath>
#include <json.hpp>

namespace superball::geometry {

std::string witness_to_json(const WitnessRecord& record, const LpCode& code) {
  nlohmann::ordered_json j;
  j["n"] = record.n;
  j["p"] = record.p;
  j["d"] = record.d;
  j["count"] = record.count;
  j["seed"] = record.seed;
  j["oracle"] =
      record.oracle ? nlohmann::ordered_json(*record.oracle) : nullptr;
  j["chain_pass"] =
      record.chain_pass ? nlohmann::ordered_json(*record.chain_pass) : nullptr;
  auto points = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < code.size(); ++i) {
    auto point = nlohmann::ordered_json::array();
    for (int c = 0; c < code.dimension(); ++c) {
      point.push_back(code.points()(i, c));
    }
    points.push_back(std::move(point));
  }
  j["points"] = std::move(points);
  return j.dump();
}

WitnessResult make_witness(int n, PNorm p, double d, int trials,
                           std::uint64_t seed) {
  LpCode code = greedy_code(n, p, d, trials, seed);
  WitnessRecord record{n,    p.value(),    d,
                       static_cast<int>(code.size()), seed, std::nullopt,
                       std::nullopt};
  if (n == 2 && p.value() >= 2.0) {
    // Twisting to the circle turns separation 2d into at least 2 d^{p/2};
    // the exact circle oracle then caps the witness size from above.
    const double d2 = std::pow(d, 0.5 * p.value());
    const int capacity =
        circle_code_capacity(2.0 * std::asin(std::min(1.0, d2)));
    bool pass = record.count <= capacity;
    if (code.size() >= 2) {
      const LpCode twisted = code_twist(code, PNorm(2.0));
      pass = pass && twisted.min_distance() >= 2.0 * d2 - kGeomSlack;
    }
    record.oracle = capacity;
    record.chain_pass = pass;
  }
  return WitnessResult{record, std::move(code)};
}

}  // namespace superball::geometry
