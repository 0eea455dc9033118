// End-to-end tests of the schlicht binary: option handling, config files,
// exit codes, report schema validation, and JSON/CSV consistency.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schlicht/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("schlicht_cli_tests_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path capture = scratch_dir() / ("run_" + std::to_string(counter++) + ".out");
    const std::string cmd =
        std::string(SCHLICHT_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    std::ifstream in(capture);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

json run_json(const std::string& args, int expected_exit = 0) {
    const RunResult r = run_cli(args);
    INFO(r.output);
    REQUIRE(r.exit_code == expected_exit);
    return json::parse(r.output);
}

const json& shipped_schema() {
    static const json schema = [] {
        std::ifstream in(SCHLICHT_SCHEMA_PATH);
        REQUIRE(in.good());
        json s;
        in >> s;
        return s;
    }();
    return schema;
}

void check_schema(const json& report) {
    std::string error;
    const bool ok = schlicht::validate_report(report, shipped_schema(), &error);
    INFO(error);
    CHECK(ok);
}

double table_entry(const json& report, int r, int s, const char* part) {
    for (const auto& entry : report.at("results").at("table").at("entries"))
        if (entry.at("r") == r && entry.at("s") == s) return entry.at(part).get<double>();
    REQUIRE(false);
    return 0.0;
}

void collect_numbers(const json& node, const std::string& path,
                     std::vector<std::pair<std::string, double>>& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            collect_numbers(value, path.empty() ? key : path + "." + key, out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node)
            collect_numbers(value, path + "." + std::to_string(i++), out);
    } else if (node.is_number()) {
        out.emplace_back(path, node.get<double>());
    }
}

}  // namespace

TEST_CASE("grunsky command emits the Koebe table") {
    const json report = run_json("grunsky --family koebe --order 12 --max-index 5");
    check_schema(report);
    CHECK(report.at("command") == "grunsky");
    CHECK(table_entry(report, 1, 1, "re") == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(table_entry(report, 3, 3, "re") == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(std::abs(table_entry(report, 1, 3, "re")) < 1e-10);
    CHECK(report.at("results").at("function").at("certified") == true);
}

TEST_CASE("grunsky command on the identity and the 3-fold map") {
    const json ident = run_json("grunsky --family identity");
    check_schema(ident);
    for (const auto& entry : ident.at("results").at("table").at("entries")) {
        CHECK(std::abs(entry.at("re").get<double>()) < 1e-12);
        CHECK(std::abs(entry.at("im").get<double>()) < 1e-12);
    }

    const json k3 = run_json("grunsky --family kfold --params 3");
    CHECK(std::abs(table_entry(k3, 1, 1, "re")) < 1e-12);  // a2 = 0 forces w11 = 0
}

TEST_CASE("verify command passes on certified inputs") {
    const json report = run_json("verify --family koebe");
    check_schema(report);
    CHECK(report.at("results").at("pass") == true);
    for (const auto& value : report.at("results").at("relation_residual_moduli"))
        CHECK(value.get<double>() < 1e-10);
    const json ident = run_json("verify --family identity");
    CHECK(ident.at("results").at("pass") == true);
}

TEST_CASE("verify command flags uncertified input without failing the run") {
    const json report = run_json("verify --family raw --params 1,3,0,0,0");
    check_schema(report);
    CHECK(report.at("results").at("function").at("certified") == false);
    CHECK(report.at("results").at("pass") == false);
    double min_residual = 0.0;
    for (const auto& probe : report.at("results").at("probe_residuals"))
        min_residual = std::min(min_residual, probe.at("residual").get<double>());
    CHECK(min_residual < 0.0);  // the wrapped coefficients are not univalent
}

TEST_CASE("audit command reports the chain and extremum pair") {
    const json report = run_json("audit --family koebe");
    check_schema(report);
    const json& f = report.at("results").at("functions").at(0);
    CHECK(f.at("chain_residuals").at("h22_headline_slack").get<double>() ==
          doctest::Approx(8.0 / 3.0).epsilon(1e-9));
    CHECK(report.at("results").at("phi_extremum").at("value").get<double>() ==
          doctest::Approx(2.0).epsilon(1e-9));
    const double psi_value = report.at("results").at("psi_extremum").at("value").get<double>();
    const double psi_disc =
        report.at("results").at("psi_extremum").at("discrepancy").get<double>();
    CHECK(psi_disc == doctest::Approx(psi_value - 1.0).epsilon(1e-12));

    const json k3 = run_json("audit --family kfold --params 3");
    const json& g = k3.at("results").at("functions").at(0);
    const double h31_re = g.at("h31").at("re").get<double>();
    const double h31_im = g.at("h31").at("im").get<double>();
    CHECK(std::hypot(h31_re + 4.0 / 9.0, h31_im) < 1e-10);
}

TEST_CASE("audit handles a functions array from the config file") {
    const fs::path cfg_path = scratch_dir() / "audit_batch.json";
    std::ofstream(cfg_path) << R"({"audit": {"functions": [
        {"family": "koebe", "params": [0]},
        {"family": "kfold", "params": [3]},
        {"family": "herglotz", "params": [0.5, 0.0, 0.5, 3.14159]}
    ]}})";
    const json report = run_json("audit --config " + cfg_path.string());
    check_schema(report);
    CHECK(report.at("results").at("functions").size() == 3);
}

TEST_CASE("audit refuses too-small truncation with the order exit code") {
    CHECK(run_cli("audit --family koebe --order 8").exit_code == 3);
}

TEST_CASE("insufficient order surfaces as exit code 3") {
    CHECK(run_cli("grunsky --family koebe --order 4 --max-index 5").exit_code == 3);
}

TEST_CASE("config problems surface as exit code 2") {
    CHECK(run_cli("grunsky --family martian").exit_code == 2);
    CHECK(run_cli("grunsky --family kfold --params 2.5").exit_code == 2);
    CHECK(run_cli("grunsky --family koebe --format yaml").exit_code == 2);
    CHECK(run_cli("search --objective nope").exit_code == 2);
    CHECK(run_cli("verify --family herglotz --params 0.7,0.0,0.7,1.0").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);

    const fs::path broken = scratch_dir() / "broken.json";
    std::ofstream(broken) << "{ not json";
    CHECK(run_cli("grunsky --config " + broken.string()).exit_code == 2);
}

TEST_CASE("search command recovers the single-atom value and is deterministic") {
    const std::string args =
        "search --family herglotz --atoms 1 --objective abs_h22 --restarts 8 --seed 42";
    const json first = run_json(args);
    check_schema(first);
    CHECK(first.at("results").at("best_value").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(first.at("results").at("best_function").at("certified") == true);

    const json second = run_json(args);
    CHECK(first.at("results").at("history") == second.at("results").at("history"));
    CHECK(first.at("results").at("best_value") == second.at("results").at("best_value"));
}

TEST_CASE("config file drives a run and flags override it") {
    const fs::path cfg_path = scratch_dir() / "sweep.json";
    std::ofstream(cfg_path) << R"({"grunsky": {"family": "kfold", "params": [3], "max_index": 5}})";
    const json from_config = run_json("grunsky --config " + cfg_path.string());
    CHECK(from_config.at("inputs").at("family") == "kfold");
    CHECK(std::abs(table_entry(from_config, 1, 1, "re")) < 1e-12);

    const json overridden =
        run_json("grunsky --config " + cfg_path.string() + " --family koebe --params 0");
    CHECK(overridden.at("inputs").at("family") == "koebe");
    CHECK(table_entry(overridden, 1, 1, "re") == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("reports write to files and CSV carries identical numbers") {
    const fs::path json_path = scratch_dir() / "report.json";
    const fs::path csv_path = scratch_dir() / "report.csv";
    REQUIRE(run_cli("audit --family kfold --params 3 --out " + json_path.string()).exit_code ==
            0);
    REQUIRE(run_cli("audit --family kfold --params 3 --format csv --out " + csv_path.string())
                .exit_code == 0);

    std::ifstream json_in(json_path);
    json report;
    json_in >> report;
    check_schema(report);

    std::ifstream csv_in(csv_path);
    std::string line;
    std::getline(csv_in, line);
    REQUIRE(line == "path,value");
    std::map<std::string, std::string> rows;
    while (std::getline(csv_in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        rows[line.substr(0, comma)] = line.substr(comma + 1);
    }

    std::vector<std::pair<std::string, double>> numbers;
    collect_numbers(report, "", numbers);
    CHECK(numbers.size() >= 40);
    std::size_t compared = 0;
    for (const auto& [path, value] : numbers) {
        if (path.rfind("timings", 0) == 0) continue;  // wall time differs between runs
        REQUIRE(rows.count(path) == 1);
        CHECK(std::stod(rows.at(path)) == value);
        ++compared;
    }
    CHECK(compared >= 40);
}
