#include "cli/report.hpp"

#include <cmath>
#include <sstream>

namespace motive {

using nlohmann::ordered_json;

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

ordered_json to_json(const ReportDocument& doc) {
  const auto& r = doc.report;
  const auto& diag = r.diagnostics;
  ordered_json j;
  j["p"] = r.spec.p;
  j["n"] = r.spec.n;
  j["m"] = r.spec.m;
  j["dim_x"] = r.spec.d;
  j["dim_y"] = r.spec.dim_y;
  j["shift_range"] = r.spec.shift_range;
  j["multiplicities"] = r.multiplicities;
  j["residual"] = r.residual.coeffs();
  j["diagnostics"] = {
      {"residual_nonnegative", diag.residual_nonnegative},
      {"residual_palindromic", diag.residual_palindromic},
      {"residual_unit_ends", diag.residual_unit_ends},
      {"duality_consistent", diag.duality_consistent},
      {"computed_kmax", r.computed_kmax},
  };
  // Millisecond resolution keeps the printed value short and stable.
  j["elapsed_ms"] = std::round(doc.elapsed_ms * 1000.0) / 1000.0;
  return j;
}

ReportDocument report_from_json(const ordered_json& j) {
  ReportDocument doc;
  auto& r = doc.report;
  r.spec = motivic::GeometrySpec::make(j.at("p").get<int>(), j.at("n").get<int>(), j.at("m").get<int>());
  if (j.at("dim_x").get<int>() != r.spec.d || j.at("dim_y").get<int>() != r.spec.dim_y ||
      j.at("shift_range").get<int>() != r.spec.shift_range)
    throw std::invalid_argument("report dimensions do not match (p, n, m)");
  r.multiplicities = j.at("multiplicities").get<std::vector<std::int64_t>>();
  r.residual = motivic::PoincarePoly(j.at("residual").get<std::vector<std::int64_t>>());
  const auto& diag = j.at("diagnostics");
  r.diagnostics.residual_nonnegative = diag.at("residual_nonnegative").get<bool>();
  r.diagnostics.residual_palindromic = diag.at("residual_palindromic").get<bool>();
  r.diagnostics.residual_unit_ends = diag.at("residual_unit_ends").get<bool>();
  r.diagnostics.duality_consistent = diag.at("duality_consistent").get<bool>();
  r.computed_kmax = diag.at("computed_kmax").get<int>();
  doc.elapsed_ms = j.at("elapsed_ms").get<double>();
  return doc;
}

std::string to_text(const motivic::DecompositionReport& r, std::optional<double> elapsed_ms) {
  const auto& s = r.spec;
  const auto& diag = r.diagnostics;
  std::ostringstream out;
  out << "X(" << s.p << "^" << s.m << ", D), deg D = " << s.p << "^" << s.n << ": dim X(1, D) = " << s.d
      << ", dim Y = " << s.dim_y << ", shift range = " << s.shift_range << "\n";
  out << "multiplicities a_0..a_" << s.shift_range << ":";
  for (auto a : r.multiplicities) out << ' ' << a;
  out << "\n";
  out << "computed for k <= " << r.computed_kmax;
  if (r.computed_kmax < s.shift_range) out << ", remaining entries by duality";
  out << "\n";
  out << "residual: " << r.residual.to_string() << "\n";
  out << "residual rank: " << r.residual.total() << "\n";
  out << "diagnostics: residual_nonnegative=" << yes_no(diag.residual_nonnegative)
      << " residual_palindromic=" << yes_no(diag.residual_palindromic)
      << " residual_unit_ends=" << yes_no(diag.residual_unit_ends)
      << " duality_consistent=" << yes_no(diag.duality_consistent) << "\n";
  if (elapsed_ms) out << "elapsed: " << *elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace motive
