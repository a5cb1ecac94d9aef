#pragma once

#include <string>

#include <json.hpp>

#include "totlab/folio/check.hpp"
#include "totlab/ineq.hpp"
#include "totlab/pgood.hpp"

namespace totlab::io {

using Json = nlohmann::ordered_json;

// Arbitrary-precision values travel as decimal strings in JSON so reports
// stay exact and byte-stable.
Json pgood_json(const pgood::PGoodReport& r);
std::string pgood_line(const pgood::PGoodReport& r);

Json scan_json(const ineq::ScanReport& r);
std::string scan_csv(const ineq::ScanReport& r);
std::string scan_plain(const ineq::ScanReport& r);

Json structure_report_json(const folio::StructureReport& r);

// Subset JSON-Schema validator covering what the shipped schemas use:
// type (string or list), properties, required, items, enum, pattern,
// additionalProperties (boolean).
bool validate_schema(const nlohmann::json& schema, const nlohmann::json& value, std::string& error);

}  // namespace totlab::io
