#ifndef SUPERBALL_WITNESS_HPP
#define SUPERBALL_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "superball/geometry.hpp"

namespace superball::geometry {

/// Witness export for a greedy code search. For 2-dimensional codes with
/// p >= 2, `oracle` carries the exact circle capacity at the twisted
/// separation and `chain_pass` whether the witness respects it; both are
/// null otherwise.
struct WitnessRecord {
  int n;
  double p;
  double d;
  int count;
  std::uint64_t seed;
  std::optional<int> oracle;
  std::optional<bool> chain_pass;
};

/// Serialize as JSON: {"n":..,"p":..,"d":..,"count":..,"seed":..,
/// "oracle":..|null,"chain_pass":..|null,"points":[[...],...]}.
std::string witness_to_json(const WitnessRecord& record, const LpCode& code);

struct WitnessResult {
  WitnessRecord record;
  LpCode code;
};

/// Run the full witness pipeline: greedy search, and for n = 2, p >= 2 the
/// twist-to-circle chain check against the exact capacity oracle.
WitnessResult make_witness(int n, PNorm p, double d, int trials,
                           std::uint64_t seed);

}  // namespace superball::geometry

#endif  // SUPERBALL_WITNESS_HPP
