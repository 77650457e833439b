#include "superball/curve.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "superball/bounds.hpp"

namespace superball::curve {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

namespace {

std::string opt_cell(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

CurveRow make_row(double p) {
  CurveRow row{};
  row.p = p;
  const PNorm pn(p);
  std::optional<ExponentBound> best;
  if (p <= 2.0) {
    const ExponentBound r = bounds::rankin_bound(pn);
    const ExponentBound k = bounds::kl_transfer_bound(pn);
    row.rankin = r.value;
    row.q_star = r.argmin;
    row.kl_transfer = k.value;
    best = bounds::compose_bounds(r, k);
  }
  if (p >= 2.0) {
    const ExponentBound m = bounds::minimize_superball(pn);
    const ExponentBound v = bounds::vdcs_bound(pn);
    row.new_bound = m.value;
    row.theta_star = m.argmin;
    row.vdcs = v.value;
    best = bounds::compose_bounds(m, v);  // the p >= 2 rule governs at p = 2
  }
  row.best = best->value;
  row.best_method = *best->winner;
  return row;
}

}  // namespace

BoundCurve sample_curve(double p_min, double p_max, int samples) {
  if (!(p_min >= PNorm::kMin && p_max <= PNorm::kMax && p_min < p_max)) {
    throw std::domain_error(
        "sample_curve: need 1 <= p_min < p_max <= 1e6");
  }
  if (samples < 2) {
    throw std::domain_error("sample_curve: need at least 2 samples");
  }
  BoundCurve curve{{}, p_min, p_max};
  curve.rows.reserve(samples);
  const double span = p_max - p_min;
  double previous = -1.0;
  for (int i = 0; i < samples; ++i) {
    const double p =
        (i == samples - 1) ? p_max : p_min + span * i / (samples - 1);
    if (p <= previous) continue;  // collapse duplicate grid points
    previous = p;
    curve.rows.push_back(make_row(p));
  }
  return curve;
}

std::string curve_to_csv(const BoundCurve& curve) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const CurveRow& row : curve.rows) {
    out += format_number(row.p);
    out += ',';
    out += opt_cell(row.vdcs);
    out += ',';
    out += opt_cell(row.new_bound);
    out += ',';
    out += opt_cell(row.theta_star);
    out += ',';
    out += opt_cell(row.rankin);
    out += ',';
    out += opt_cell(row.q_star);
    out += ',';
    out += opt_cell(row.kl_transfer);
    out += ',';
    out += format_number(row.best);
    out += ',';
    out += method_name(row.best_method);
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  file << contents;
  file.flush();
  if (!file) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace superball::curve
