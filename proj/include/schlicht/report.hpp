// Report serialization: JSON builders for every result type, a flat CSV
// rendering with identical numeric content, and a structural validator for
// the shipped report schema.
#pragma once

#include <string>

#include <json.hpp>

#include "schlicht/audit.hpp"
#include "schlicht/families.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/search.hpp"

namespace schlicht {

nlohmann::json complex_to_json(Complex z);

/// Provenance summary of a function: label, family, params, certification,
/// order, and the leading coefficients.
nlohmann::json function_summary(const SchlichtFunction& f);

nlohmann::json table_to_json(const GrunskyTable& table);
nlohmann::json extremum_to_json(const ExtremumReport& report);
nlohmann::json audit_to_json(const AuditReport& report);
nlohmann::json search_to_json(const SearchResult& result);

/// Assemble the versioned report envelope
/// {schema_version, command, inputs, results, timings}.
nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           nlohmann::json results, double total_seconds);

/// Flatten a report into "path,value" CSV rows. Numbers are rendered with 17
/// significant digits so they parse back to the identical double.
std::string report_to_csv(const nlohmann::json& report);

/// Check a report against the shipped schema (envelope plus the per-command
/// results contract). Returns false and fills `error` on the first failure.
bool validate_report(const nlohmann::json& report, const nlohmann::json& schema,
                     std::string* error);

}  // namespace schlicht
