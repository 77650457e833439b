#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "superball/bounds.hpp"
#include "superball/curve.hpp"
#include "superball/witness.hpp"

using namespace superball;
using namespace superball::curve;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("curve rows follow the regime rules") {
  const BoundCurve curve = sample_curve(1.0, 8.0, 141);
  CHECK(curve.rows.size() == 141);
  double prev = 0.0;
  for (const CurveRow& row : curve.rows) {
    CHECK(row.p > prev);
    prev = row.p;
    if (row.p < 2.0) {
      CHECK(!row.vdcs);
      CHECK(!row.new_bound);
      CHECK(row.rankin);
      CHECK(row.kl_transfer);
      CHECK(row.best ==
            std::min(*row.rankin, *row.kl_transfer));
    } else if (row.p > 2.0) {
      CHECK(!row.rankin);
      CHECK(!row.kl_transfer);
      CHECK(row.vdcs);
      CHECK(row.new_bound);
      CHECK(row.best == std::min(*row.new_bound, *row.vdcs));
    } else {
      CHECK(row.vdcs);
      CHECK(row.new_bound);
      CHECK(row.rankin);
      CHECK(row.kl_transfer);
    }
    CHECK(row.best <= 0.0);
  }
}

TEST_CASE("curve matches the direct bound evaluations") {
  const BoundCurve curve = sample_curve(1.0, 4.0, 31);
  for (const CurveRow& row : curve.rows) {
    const ExponentBound best = bounds::best_upper_bound(PNorm(row.p));
    CHECK(std::abs(row.best - best.value) <= 1e-12);
    CHECK(row.best_method == *best.winner);
    if (row.new_bound) {
      CHECK(std::abs(*row.new_bound -
                     bounds::minimize_superball(PNorm(row.p)).value) <= 1e-12);
    }
    if (row.rankin) {
      CHECK(std::abs(*row.rankin - bounds::rankin_bound(PNorm(row.p)).value) <=
            1e-12);
    }
  }
}

TEST_CASE("crossover between the sub-2 methods lands near 1.494") {
  const BoundCurve curve = sample_curve(1.0, 2.0, 501);
  double crossing = 0.0;
  for (size_t i = 1; i < curve.rows.size(); ++i) {
    const CurveRow& a = curve.rows[i - 1];
    const CurveRow& b = curve.rows[i];
    if (!a.rankin || !b.rankin) continue;
    const double ga = *a.rankin - *a.kl_transfer;
    const double gb = *b.rankin - *b.kl_transfer;
    if (ga < 0.0 && gb >= 0.0) crossing = 0.5 * (a.p + b.p);
  }
  CHECK(std::abs(crossing - 1.494) <= 0.01);
}

TEST_CASE("best bound is continuous across p = 2 in a sampled curve") {
  const BoundCurve curve = sample_curve(1.9, 2.1, 201);
  for (size_t i = 1; i < curve.rows.size(); ++i) {
    CHECK(std::abs(curve.rows[i].best - curve.rows[i - 1].best) <= 1e-3);
  }
  // Tight two-sided limit right at the seam.
  const double at = bounds::best_upper_bound(PNorm(2.0)).value;
  CHECK(std::abs(bounds::best_upper_bound(PNorm(2.0 - 1e-9)).value - at) <=
        1e-6);
  CHECK(std::abs(bounds::best_upper_bound(PNorm(2.0 + 1e-9)).value - at) <=
        1e-6);
}

TEST_CASE("CSV schema, emptiness pattern, and determinism") {
  const BoundCurve curve = sample_curve(1.0, 8.0, 71);
  const std::string csv = curve_to_csv(curve);
  const auto lines = split(csv, '\n');
  CHECK(lines[0] == kCsvHeader);
  CHECK(lines.size() == 72);  // header + 71 rows
  const auto first = split(lines[1], ',');
  REQUIRE(first.size() == 9);
  CHECK(first[0] == "1");
  CHECK(first[1].empty());  // vdcs empty at p = 1
  CHECK(first[2].empty());
  CHECK(!first[4].empty());  // rankin present
  CHECK(first[8] == "rankin");
  const auto last = split(lines[71], ',');
  CHECK(last[0] == "8");
  CHECK(last[1] == "-0.125");
  CHECK(last[4].empty());  // rankin empty at p = 8
  CHECK(last[8] == "new");
  // Deterministic byte-for-byte.
  CHECK(curve_to_csv(sample_curve(1.0, 8.0, 71)) == csv);
}

TEST_CASE("format_number uses up to 12 significant digits") {
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(-0.599055766860) == "-0.59905576686");
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("SVG carries four data polylines with the caption roles") {
  const BoundCurve curve = sample_curve(1.0, 8.0, 701);
  const std::string svg = curve_to_svg(curve);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") !=
        std::string::npos);
  for (const char* id : {"dashed-low", "solid-low", "dashed-high",
                         "solid-high"}) {
    CHECK(svg.find("id=\"" + std::string(id) + "\"") != std::string::npos);
  }
  // Dashed curves carry the dash pattern; solid ones do not.
  const auto dashed_pos = svg.find("id=\"dashed-high\"");
  const auto dashed_end = svg.find('\n', dashed_pos);
  CHECK(svg.substr(dashed_pos, dashed_end - dashed_pos)
            .find("stroke-dasharray") != std::string::npos);
  const auto solid_pos = svg.find("id=\"solid-high\"");
  const auto solid_end = svg.find('\n', solid_pos);
  CHECK(svg.substr(solid_pos, solid_end - solid_pos)
            .find("stroke-dasharray") == std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("SVG solid curve passes through the Euclidean optimum") {
  const BoundCurve curve = sample_curve(1.0, 8.0, 701);
  const std::string svg = curve_to_svg(curve);
  // Pull the vertex nearest to p = 2 out of the two solid polylines.
  double best_dp = 1e9;
  double value_at_2 = 0.0;
  for (const char* id : {"solid-low", "solid-high"}) {
    const auto pos = svg.find("id=\"" + std::string(id) + "\"");
    REQUIRE(pos != std::string::npos);
    const auto points_pos = svg.find("points=\"", pos);
    const auto points_end = svg.find('"', points_pos + 8);
    std::istringstream in(svg.substr(points_pos + 8, points_end - points_pos - 8));
    std::string pair;
    while (in >> pair) {
      const auto comma = pair.find(',');
      const double p = std::stod(pair.substr(0, comma));
      const double v = std::stod(pair.substr(comma + 1));
      if (std::abs(p - 2.0) < best_dp) {
        best_dp = std::abs(p - 2.0);
        value_at_2 = v;
      }
    }
  }
  CHECK(best_dp <= 0.011);
  CHECK(std::abs(value_at_2 - (-0.5990)) <= 1e-3);
}

TEST_CASE("degenerate figure range emits a valid SVG with one regime") {
  const BoundCurve curve = sample_curve(2.0, 2.0001, 11);
  const std::string svg = curve_to_svg(curve);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("id=\"solid-high\"") != std::string::npos);
  CHECK(svg.find("id=\"solid-low\"") == std::string::npos);
}

TEST_CASE("sample_curve validates its range") {
  CHECK_THROWS_AS(sample_curve(2.0, 1.0, 10), std::domain_error);
  CHECK_THROWS_AS(sample_curve(0.5, 2.0, 10), std::domain_error);
  CHECK_THROWS_AS(sample_curve(1.0, 8.0, 1), std::domain_error);
}

TEST_CASE("witness JSON schema") {
  const auto result = geometry::make_witness(2, PNorm(2.0), 0.5, 20000, 1);
  const std::string json =
      geometry::witness_to_json(result.record, result.code);
  CHECK(json.find("\"n\":2") != std::string::npos);
  CHECK(json.find("\"count\":6") != std::string::npos);
  CHECK(json.find("\"oracle\":6") != std::string::npos);
  CHECK(json.find("\"chain_pass\":true") != std::string::npos);
  CHECK(json.find("\"points\":[[") != std::string::npos);

  // Higher dimensions have no circle oracle.
  const auto result3 = geometry::make_witness(3, PNorm(2.0), 0.5, 2000, 1);
  const std::string json3 =
      geometry::witness_to_json(result3.record, result3.code);
  CHECK(json3.find("\"oracle\":null") != std::string::npos);
  CHECK(json3.find("\"chain_pass\":null") != std::string::npos);
}
