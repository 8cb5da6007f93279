// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "edcount/serialize.hpp"

namespace edcount {

using nlohmann::json;

json to_json(const CountReport& report) {
  return json{{"p", report.p},
              {"n", report.n},
              {"d", report.d},
              {"affine", report.affine_count},
              {"projective", report.projective_count},
              {"legendre", report.legendre_d},
              {"criterion_residue", report.criterion_residue},
              {"trace", report.trace_T},
              {"supersingular", report.supersingular},
              {"method", to_string(report.method)}};
}

CountReport count_report_from_json(const json& j) {
  CountReport report;
  report.p = j.at("p").get<u64>();
  report.n = j.at("n").get<unsigned>();
  report.d = j.at("d").get<u64>();
  report.affine_count = j.at("affine").get<u64>();
  report.projective_count = j.at("projective").get<u64>();
  report.legendre_d = j.at("legendre").get<int>();
  report.criterion_residue = j.at("criterion_residue").get<u64>();
  report.trace_T = j.at("trace").get<i64>();
  report.supersingular = j.at("supersingular").get<bool>();
  report.method = count_method_from_string(j.at("method").get<std::string>());
  return report;
}

json to_json(const ScanRecord& record) {
  json j{{"p", record.p},
         {"d", record.d},
         {"legendre", record.legendre_d},
         {"supersingular", record.supersingular},
         {"affine", record.affine_count},
         {"projective", record.projective_count},
         {"method", record.budget_exceeded ? "budget-exceeded"
                                           : to_string(record.method)},
         {"oracle_verified", record.oracle_verified}};
  if (record.embedding_degree)
    j["embedding_degree"] = *record.embedding_degree;
  else
    j["embedding_degree"] = nullptr;
  return j;
}

ScanRecord scan_record_from_json(const json& j) {
  ScanRecord record;
  record.p = j.at("p").get<u64>();
  record.d = j.at("d").get<u64>();
  record.legendre_d = j.at("legendre").get<int>();
  record.supersingular = j.at("supersingular").get<bool>();
  record.affine_count = j.at("affine").get<u64>();
  record.projective_count = j.at("projective").get<u64>();
  if (!j.at("embedding_degree").is_null())
    record.embedding_degree = j.at("embedding_degree").get<unsigned>();
  std::string method = j.at("method").get<std::string>();
  if (method == "budget-exceeded")
    record.budget_exceeded = true;
  else
    record.method = count_method_from_string(method);
  record.oracle_verified = j.at("oracle_verified").get<bool>();
  return record;
}

json to_json(const TwistReport& report) {
  return json{{"p", report.p},
              {"d", report.d},
              {"d_inverse", report.d_inverse},
              {"legendre", report.legendre_d},
              {"order_d", report.order_d},
              {"order_d_inverse", report.order_d_inverse},
              {"relation", report.legendre_d == 1 ? "equal" : "sum=2p+2"},
              {"holds", report.holds},
              {"oracle_verified", report.oracle_verified}};
}

json to_json(const BijectionReport& report) {
  return json{{"p", report.p},
              {"d", report.d},
              {"edwards_affine", report.edwards_affine},
              {"montgomery_affine", report.montgomery_affine},
              {"edwards_special", report.edwards_special},
              {"montgomery_special", report.montgomery_special},
              {"mapped_pairs", report.mapped_pairs},
              {"bijective", report.bijective},
              {"supersingular", report.supersingular},
              {"montgomery_affine_is_p", report.montgomery_affine_is_p},
              {"failures", report.failures}};
}

json to_json(const FieldElement& element) {
  if (element.field().degree() == 1) return element.residue();
  json coeffs = json::array();
  for (u64 c : element.coeffs()) coeffs.push_back(c);
  return json{{"coeffs", coeffs},
              {"reduction_poly", element.field().reduction_poly()}};
}

json to_json(const AffinePoint& point) {
  return json{{"x", to_json(point.x)}, {"y", to_json(point.y)}};
}

json to_json(const SpecialPointTable& table) {
  json m = json::array(), e = json::array();
  for (const AffinePoint& pt : table.montgomery_side) m.push_back(to_json(pt));
  for (const AffinePoint& pt : table.edwards_side) e.push_back(to_json(pt));
  return json{{"montgomery_side", m}, {"edwards_side", e}};
}

json make_envelope(const std::string& command, json inputs, json results,
                   bool oracle_verified) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"oracle_verified", oracle_verified}};
}

std::string scan_to_csv(std::span<const ScanRecord> records) {
  std::string out(kScanCsvHeader);
  out += '\n';
  for (const ScanRecord& rec : records) {
    out += std::to_string(rec.p);
    out += ',';
    out += std::to_string(rec.d);
    out += ',';
    out += std::to_string(rec.legendre_d);
    out += ',';
    out += rec.supersingular ? "true" : "false";
    out += ',';
    out += std::to_string(rec.affine_count);
    out += ',';
    out += std::to_string(rec.projective_count);
    out += ',';
    out += rec.embedding_degree ? std::to_string(*rec.embedding_degree)
                                : std::string("none");
    out += ',';
    out += rec.budget_exceeded ? "budget-exceeded" : to_string(rec.method);
    out += ',';
    out += rec.oracle_verified ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace edcount
