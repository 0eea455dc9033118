// JSON/CSV report rendering and schema validation.

#include "schlicht/report.hpp"

#include <cstdio>

namespace schlicht {

using nlohmann::json;

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json function_summary(const SchlichtFunction& f) {
    json coeffs = json::array();
    const int head = std::min(f.order(), 8);
    for (int n = 1; n <= head; ++n) coeffs.push_back(complex_to_json(f.a(n)));
    return json{{"label", f.label},
                {"family", family_name(f.family_tag)},
                {"params", f.params},
                {"certified", f.certified},
                {"order", f.order()},
                {"head_coefficients", coeffs}};
}

json table_to_json(const GrunskyTable& table) {
    json entries = json::array();
    for (const auto& [key, value] : table.entries) {
        entries.push_back(json{{"r", key.first},
                               {"s", key.second},
                               {"re", value.real()},
                               {"im", value.imag()}});
    }
    return json{{"source", table.source}, {"max_index", table.max_index}, {"entries", entries}};
}

json extremum_to_json(const ExtremumReport& report) {
    json out{{"arg", report.arg},
             {"value", report.value},
             {"claimed", report.claimed},
             {"discrepancy", report.discrepancy},
             {"grid_resolution", report.grid_resolution},
             {"refined_tolerance", report.refined_tolerance}};
    if (report.monotone_decreasing_on_grid.has_value())
        out["monotone_decreasing_on_grid"] = *report.monotone_decreasing_on_grid;
    return out;
}

json audit_to_json(const AuditReport& report) {
    return json{{"function_id", report.function_id},
                {"certified", report.certified},
                {"h22", complex_to_json(report.h22)},
                {"h31", complex_to_json(report.h31)},
                {"h22_from_table", complex_to_json(report.h22_from_table)},
                {"h31_from_table", complex_to_json(report.h31_from_table)},
                {"h31_from_table_w15sq", complex_to_json(report.h31_from_table_w15sq)},
                {"b1", report.b1},
                {"b2", report.b2},
                {"b3", report.b3},
                {"b3_identity_form", report.b3_identity_form},
                {"a5_residual_w15sq", complex_to_json(report.a5_residual_w15sq)},
                {"chain_residuals", report.chain_residuals}};
}

json search_to_json(const SearchResult& result) {
    json history = json::array();
    for (const auto& [restart, value] : result.history)
        history.push_back(json{{"restart", restart}, {"value", value}});
    return json{{"best_value", result.best_value},
                {"best_params", result.best_params},
                {"best_function", function_summary(result.best_function)},
                {"evals_used", result.evals_used},
                {"budget_exhausted", result.budget_exhausted},
                {"history", history}};
}

json make_report(const std::string& command, json inputs, json results, double total_seconds) {
    return json{{"schema_version", "1"},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"timings", json{{"total_seconds", total_seconds}}}};
}

namespace {

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void flatten(const json& node, const std::string& path, std::string& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            flatten(value, path.empty() ? key : path + "." + key, out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node) flatten(value, path + "." + std::to_string(i++), out);
        if (node.empty()) out += path + ",\n";
    } else {
        out += path;
        out += ',';
        if (node.is_number_float())
            out += format_number(node.get<double>());
        else if (node.is_boolean())
            out += node.get<bool>() ? "true" : "false";
        else if (node.is_string())
            out += node.get<std::string>();
        else
            out += node.dump();
        out += '\n';
    }
}

bool fail(std::string* error, const std::string& message) {
    if (error) *error = message;
    return false;
}

bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    return false;
}

bool validate_node(const json& value, const json& node, const json& defs,
                   const std::string& path, std::string* error) {
    const json* schema = &node;
    if (schema->contains("$ref")) {
        const std::string name = schema->at("$ref").get<std::string>().substr(1);
        if (!defs.contains(name)) return fail(error, path + ": unresolved $ref " + name);
        schema = &defs.at(name);
    }
    if (schema->contains("type")) {
        const std::string type = schema->at("type").get<std::string>();
        if (!type_matches(value, type))
            return fail(error, path + ": expected " + type + ", got " + value.type_name());
    }
    if (schema->contains("enum")) {
        bool found = false;
        for (const auto& candidate : schema->at("enum"))
            if (candidate == value) found = true;
        if (!found) return fail(error, path + ": value not in enum");
    }
    if (schema->contains("required")) {
        for (const auto& key : schema->at("required")) {
            const std::string name = key.get<std::string>();
            if (!value.contains(name))
                return fail(error, path + ": missing required key '" + name + "'");
        }
    }
    if (schema->contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema->at("properties").items())
            if (value.contains(key) &&
                !validate_node(value.at(key), sub, defs, path + "." + key, error))
                return false;
    }
    if (schema->contains("items") && value.is_array()) {
        std::size_t i = 0;
        for (const auto& item : value) {
            if (!validate_node(item, schema->at("items"), defs,
                               path + "." + std::to_string(i), error))
                return false;
            ++i;
        }
    }
    return true;
}

}  // namespace

std::string report_to_csv(const json& report) {
    std::string out = "path,value\n";
    flatten(report, "", out);
    return out;
}

bool validate_report(const json& report, const json& schema, std::string* error) {
    static const json empty = json::object();
    const json& defs = schema.contains("definitions") ? schema.at("definitions") : empty;
    if (!schema.contains("envelope")) return fail(error, "schema has no envelope section");
    if (!validate_node(report, schema.at("envelope"), defs, "$", error)) return false;

    const std::string command = report.at("command").get<std::string>();
    if (!schema.contains("results_by_command") ||
        !schema.at("results_by_command").contains(command))
        return fail(error, "schema has no results contract for command '" + command + "'");
    return validate_node(report.at("results"), schema.at("results_by_command").at(command),
                         defs, "$.results", error);
}

}  // namespace schlicht
