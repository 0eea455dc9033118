// schlicht: command-line front end. Subcommands compute Grunsky tables,
// verify the coefficient identities and inequality probes, audit the full
// bound chain, and search family parameter spaces for extremal Hankel
// values. Reports go to JSON or CSV; see schemas/report.schema.json.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schlicht/audit.hpp"
#include "schlicht/families.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/hankel.hpp"
#include "schlicht/report.hpp"
#include "schlicht/search.hpp"

namespace {

using nlohmann::json;
using namespace schlicht;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitInsufficientOrder = 3;

constexpr double kResidualThreshold = 1e-9;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_config(const std::string& path, const std::string& command) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json parsed;
    try {
        in >> parsed;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse failure: " + std::string(e.what()));
    }
    if (!parsed.is_object()) throw ConfigError("config root must be a JSON object");
    json section = parsed.value(command, json::object());
    if (!section.is_object()) throw ConfigError("config section '" + command + "' must be an object");
    return section;
}

// Flags override config file values; config overrides defaults.
template <typename T>
T pick(const CLI::Option* flag, const T& flag_value, const json& cfg, const char* key,
       const T& fallback) {
    if (flag != nullptr && flag->count() > 0) return flag_value;
    if (cfg.contains(key)) {
        try {
            return cfg.at(key).get<T>();
        } catch (const json::exception& e) {
            throw ConfigError("config key '" + std::string(key) + "': " + e.what());
        }
    }
    return fallback;
}

SchlichtFunction build_family(const std::string& family, const std::vector<double>& params,
                              int order) {
    if (family == "identity") {
        if (!params.empty()) throw BadParametrization("identity takes no parameters");
        return identity_function(order);
    }
    if (family == "koebe") {
        if (params.size() > 1) throw BadParametrization("koebe takes at most one angle");
        return koebe_rotation(params.empty() ? 0.0 : params[0], order);
    }
    if (family == "kfold" || family == "kfold_koebe") {
        if (params.size() != 1) throw BadParametrization("kfold takes exactly one parameter k");
        const double k = params[0];
        if (k < 1.0 || k != static_cast<double>(static_cast<int>(k)))
            throw BadParametrization("kfold parameter k must be a positive integer");
        return kfold_koebe(static_cast<int>(k), order);
    }
    if (family == "herglotz" || family == "convex-herglotz" || family == "convex_herglotz") {
        if (params.size() < 2 || params.size() % 2 != 0)
            throw BadParametrization(
                "herglotz parameters are weight,angle pairs: w1,t1,w2,t2,...");
        HerglotzAtoms atoms;
        for (std::size_t i = 0; i < params.size(); i += 2) {
            atoms.weights.push_back(params[i]);
            atoms.points.push_back(std::polar(1.0, params[i + 1]));
        }
        SchlichtFunction starlike = starlike_from_herglotz(atoms, order);
        if (family == "herglotz") return starlike;
        return convex_from_starlike(starlike, order);
    }
    if (family == "raw") {
        if (params.empty()) throw BadParametrization("raw takes the coefficients a1,a2,...");
        std::vector<Complex> a;
        a.reserve(params.size());
        for (double value : params) a.emplace_back(value, 0.0);
        return raw_coefficients(a, order);
    }
    throw BadParametrization("unknown family '" + family + "'");
}

void write_output(const json& report, const std::string& out, const std::string& format) {
    std::string text;
    if (format == "json")
        text = report.dump(2) + "\n";
    else if (format == "csv")
        text = report_to_csv(report);
    else
        throw ConfigError("format must be json or csv");
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out);
    if (!file) throw ConfigError("cannot write output file '" + out + "'");
    file << text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct CommandOptions {
    std::string config_path;
    std::string family = "koebe";
    std::vector<double> params;
    int order = 12;
    int max_index = 5;
    std::string out = "-";
    std::string format = "json";
    std::uint64_t seed = 0;
    int probes = 6;
    int atoms = 4;
    std::string objective = "abs_h22";
    int restarts = 8;
    long max_evals = 50000;

    CLI::Option* family_opt = nullptr;
    CLI::Option* params_opt = nullptr;
    CLI::Option* order_opt = nullptr;
    CLI::Option* max_index_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* probes_opt = nullptr;
    CLI::Option* atoms_opt = nullptr;
    CLI::Option* objective_opt = nullptr;
    CLI::Option* restarts_opt = nullptr;
    CLI::Option* max_evals_opt = nullptr;
};

void add_common_options(CLI::App* cmd, CommandOptions& opts, bool with_family) {
    cmd->add_option("--config", opts.config_path, "JSON config file; flags override it");
    if (with_family) {
        opts.family_opt = cmd->add_option("--family", opts.family,
                                          "identity|koebe|kfold|herglotz|convex-herglotz|raw");
        opts.params_opt =
            cmd->add_option("--params", opts.params, "family parameters, comma separated")
                ->delimiter(',');
    }
    opts.order_opt = cmd->add_option("--order", opts.order, "series truncation order");
    opts.out_opt = cmd->add_option("--out", opts.out, "output path, - for stdout");
    opts.format_opt = cmd->add_option("--format", opts.format, "json|csv");
    opts.seed_opt = cmd->add_option("--seed", opts.seed, "RNG seed");
}

json inputs_echo(const std::string& family, const std::vector<double>& params, int order,
                 std::uint64_t seed) {
    return json{{"family", family}, {"params", params}, {"order", order}, {"seed", seed}};
}

int run_grunsky(const CommandOptions& raw) {
    const auto start = std::chrono::steady_clock::now();
    const json cfg = load_config(raw.config_path, "grunsky");
    const std::string family = pick(raw.family_opt, raw.family, cfg, "family", raw.family);
    const auto params = pick(raw.params_opt, raw.params, cfg, "params", raw.params);
    const int order = pick(raw.order_opt, raw.order, cfg, "order", raw.order);
    const int max_index = pick(raw.max_index_opt, raw.max_index, cfg, "max_index", raw.max_index);
    const std::string out = pick(raw.out_opt, raw.out, cfg, "out", raw.out);
    const std::string format = pick(raw.format_opt, raw.format, cfg, "format", raw.format);

    const SchlichtFunction f = build_family(family, params, order);
    const GrunskyTable table = grunsky_table(f, max_index);

    json inputs = inputs_echo(family, params, order, 0);
    inputs["max_index"] = max_index;
    json results{{"function", function_summary(f)}, {"table", table_to_json(table)}};
    write_output(make_report("grunsky", inputs, results, seconds_since(start)), out, format);
    return kExitOk;
}

int run_verify(const CommandOptions& raw) {
    const auto start = std::chrono::steady_clock::now();
    const json cfg = load_config(raw.config_path, "verify");
    const std::string family = pick(raw.family_opt, raw.family, cfg, "family", raw.family);
    const auto params = pick(raw.params_opt, raw.params, cfg, "params", raw.params);
    const int order = pick(raw.order_opt, raw.order, cfg, "order", raw.order);
    const std::uint64_t seed = pick(raw.seed_opt, raw.seed, cfg, "seed", raw.seed);
    const int probe_count = pick(raw.probes_opt, raw.probes, cfg, "probes", raw.probes);
    const std::string out = pick(raw.out_opt, raw.out, cfg, "out", raw.out);
    const std::string format = pick(raw.format_opt, raw.format, cfg, "format", raw.format);

    const SchlichtFunction f = build_family(family, params, order);
    const GrunskyTable table = grunsky_table(f, 5);
    const CoefficientRelations relations = verify_coefficient_relations(f, table);

    json probe_results = json::array();
    double min_probe_residual = 0.0;
    auto run_probe = [&](const InequalityProbe& probe, const std::string& name) {
        const double residual = grunsky_residual(table, probe);
        min_probe_residual = std::min(min_probe_residual, residual);
        probe_results.push_back(json{{"name", name}, {"residual", residual}});
    };
    const auto canonical = canonical_probes(table);
    run_probe(canonical.at(0), "x=(1,0,0)");
    run_probe(canonical.at(1), "x=(0,1,0)");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < probe_count; ++i) {
        InequalityProbe probe;
        probe.outer_terms = 3;
        probe.x.resize(3);
        double norm_sq = 0.0;
        for (auto& entry : probe.x) {
            entry = Complex(normal(rng), normal(rng));
            norm_sq += std::norm(entry);
        }
        for (auto& entry : probe.x) entry /= std::sqrt(norm_sq);
        run_probe(probe, "random" + std::to_string(i));
    }

    json moduli = json::array();
    for (const Complex& r : relations.residuals) moduli.push_back(std::abs(r));
    const bool pass = relations.max_residual_modulus() < kResidualThreshold &&
                      min_probe_residual >= -kResidualThreshold;

    json results{{"function", function_summary(f)},
                 {"relation_residual_moduli", moduli},
                 {"a5_residual_w15sq", complex_to_json(relations.a5_residual_w15sq)},
                 {"probe_residuals", probe_results},
                 {"threshold", kResidualThreshold},
                 {"pass", pass}};
    json inputs = inputs_echo(family, params, order, seed);
    inputs["probes"] = probe_count;
    write_output(make_report("verify", inputs, results, seconds_since(start)), out, format);

    if (!f.certified) return kExitOk;  // informational run, flagged in the report
    return pass ? kExitOk : kExitVerificationFailure;
}

int run_audit(const CommandOptions& raw) {
    const auto start = std::chrono::steady_clock::now();
    const json cfg = load_config(raw.config_path, "audit");
    const int order = pick(raw.order_opt, raw.order, cfg, "order", raw.order);
    const std::string out = pick(raw.out_opt, raw.out, cfg, "out", raw.out);
    const std::string format = pick(raw.format_opt, raw.format, cfg, "format", raw.format);
    if (order < 10)
        throw InsufficientOrder(
            "audit refuses order < 10: the (3,5) table entries need total bivariate degree 8 "
            "plus margin");

    // Functions come from the config's `functions` array when present,
    // otherwise from the --family/--params flags.
    std::vector<SchlichtFunction> functions;
    json inputs{{"order", order}};
    if (cfg.contains("functions")) {
        if (!cfg.at("functions").is_array())
            throw ConfigError("audit config key 'functions' must be an array");
        for (const json& entry : cfg.at("functions")) {
            const std::string family = entry.value("family", std::string{});
            const std::vector<double> params =
                entry.value("params", std::vector<double>{});
            functions.push_back(build_family(family, params, order));
        }
        inputs["functions"] = cfg.at("functions");
    } else {
        const std::string family = pick(raw.family_opt, raw.family, cfg, "family", raw.family);
        const auto params = pick(raw.params_opt, raw.params, cfg, "params", raw.params);
        functions.push_back(build_family(family, params, order));
        inputs["family"] = family;
        inputs["params"] = params;
    }

    const AuditContext context = AuditContext::make();
    json audited = json::array();
    for (const SchlichtFunction& f : functions) {
        if (!f.certified)
            std::cerr << "warning: auditing non-certified input '" << f.label
                      << "'; residual signs are informational only\n";
        audited.push_back(audit_to_json(audit_chain(f, context)));
    }

    json results{{"functions", audited},
                 {"phi_extremum", extremum_to_json(context.phi_extremum)},
                 {"psi_extremum", extremum_to_json(context.psi_extremum)}};
    write_output(make_report("audit", inputs, results, seconds_since(start)), out, format);
    return kExitOk;
}

int run_search(const CommandOptions& raw) {
    const auto start = std::chrono::steady_clock::now();
    const json cfg = load_config(raw.config_path, "search");
    SearchSpec spec;
    const std::string family_name_in =
        pick(raw.family_opt, raw.family, cfg, "family", std::string("herglotz"));
    if (family_name_in == "herglotz")
        spec.family = SearchFamily::herglotz;
    else if (family_name_in == "convex-herglotz" || family_name_in == "convex_herglotz")
        spec.family = SearchFamily::convex_herglotz;
    else
        throw BadParametrization("search family must be herglotz or convex-herglotz");
    spec.atoms = pick(raw.atoms_opt, raw.atoms, cfg, "atoms", raw.atoms);
    spec.objective = pick(raw.objective_opt, raw.objective, cfg, "objective", raw.objective);
    spec.restarts = pick(raw.restarts_opt, raw.restarts, cfg, "restarts", raw.restarts);
    spec.seed = pick(raw.seed_opt, raw.seed, cfg, "seed", raw.seed);
    spec.max_evals = pick(raw.max_evals_opt, raw.max_evals, cfg, "max_evals", raw.max_evals);
    spec.truncation = pick(raw.order_opt, raw.order, cfg, "order", raw.order);
    const std::string out = pick(raw.out_opt, raw.out, cfg, "out", raw.out);
    const std::string format = pick(raw.format_opt, raw.format, cfg, "format", raw.format);
    spec.validate();

    const SearchResult result = multi_start_search(spec);

    json inputs{{"family", search_family_name(spec.family)},
                {"atoms", spec.atoms},
                {"objective", spec.objective},
                {"restarts", spec.restarts},
                {"seed", spec.seed},
                {"max_evals", spec.max_evals},
                {"order", spec.truncation}};
    write_output(make_report("search", inputs, search_to_json(result), seconds_since(start)),
                 out, format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grunsky/Hankel coefficient analysis for univalent functions"};
    app.require_subcommand(1);

    CommandOptions grunsky_opts, verify_opts, audit_opts, search_opts;

    CLI::App* grunsky_cmd = app.add_subcommand("grunsky", "write the Grunsky table of a function");
    add_common_options(grunsky_cmd, grunsky_opts, true);
    grunsky_opts.max_index_opt =
        grunsky_cmd->add_option("--max-index", grunsky_opts.max_index, "largest odd index");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check the coefficient identities and inequality probes");
    add_common_options(verify_cmd, verify_opts, true);
    verify_opts.probes_opt =
        verify_cmd->add_option("--probes", verify_opts.probes, "number of random probes");

    CLI::App* audit_cmd = app.add_subcommand("audit", "evaluate the full bound chain");
    add_common_options(audit_cmd, audit_opts, true);

    CLI::App* search_cmd =
        app.add_subcommand("search", "multi-start search for extremal functional values");
    add_common_options(search_cmd, search_opts, false);
    search_opts.family_opt = search_cmd->add_option(
        "--family", search_opts.family, "herglotz|convex-herglotz");
    search_opts.atoms_opt = search_cmd->add_option("--atoms", search_opts.atoms, "atom count");
    search_opts.objective_opt =
        search_cmd->add_option("--objective", search_opts.objective,
                               "abs_h22|abs_h31|abs_fekete_szego");
    search_opts.restarts_opt =
        search_cmd->add_option("--restarts", search_opts.restarts, "restart count");
    search_opts.max_evals_opt =
        search_cmd->add_option("--max-evals", search_opts.max_evals, "total evaluation budget");

    // Search has no build-a-function --family default; point it at herglotz.
    search_opts.family = "herglotz";

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (grunsky_cmd->parsed()) return run_grunsky(grunsky_opts);
        if (verify_cmd->parsed()) return run_verify(verify_opts);
        if (audit_cmd->parsed()) return run_audit(audit_opts);
        if (search_cmd->parsed()) return run_search(search_opts);
        return kExitConfigError;
    } catch (const InsufficientOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsufficientOrder;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
