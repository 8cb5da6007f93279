// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_SERIALIZE_HPP_
#define EDCOUNT_SERIALIZE_HPP_

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "edcount/analysis.hpp"
#include "edcount/birational.hpp"
#include "edcount/counting.hpp"

namespace edcount {

inline constexpr const char* kSchemaVersion = "1.0";

// Fixed column set of the scan CSV, in order.
inline constexpr const char* kScanCsvHeader =
    "p,d,legendre,supersingular,affine,projective,embedding_degree,method,"
    "oracle_verified";

nlohmann::json to_json(const CountReport& report);
CountReport count_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScanRecord& record);
ScanRecord scan_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TwistReport& report);
nlohmann::json to_json(const BijectionReport& report);
nlohmann::json to_json(const SpecialPointTable& table);

// Field elements serialize as decimal residues for degree-1 fields and as
// coefficient lists (constant term first) otherwise.
nlohmann::json to_json(const FieldElement& element);
nlohmann::json to_json(const AffinePoint& point);

// Top-level document wrapper shared by every JSON-producing command.
nlohmann::json make_envelope(const std::string& command,
                             nlohmann::json inputs, nlohmann::json results,
                             bool oracle_verified);

// Scan rows as CSV: fixed header, LF line endings, locale-free decimal
// integers. Byte-identical for identical inputs.
std::string scan_to_csv(std::span<const ScanRecord> records);

}  // namespace edcount

#endif  // EDCOUNT_SERIALIZE_HPP_
