// Multi-start extremal search.

#include "schlicht/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "schlicht/hankel.hpp"
#include "schlicht/optim.hpp"

namespace schlicht {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

HerglotzAtoms decode_atoms(int k, const std::vector<double>& params) {
    HerglotzAtoms atoms;
    atoms.weights.resize(static_cast<std::size_t>(k));
    atoms.points.resize(static_cast<std::size_t>(k));
    double top = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) top = std::max(top, params[static_cast<std::size_t>(i)]);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
        const double w = std::exp(params[static_cast<std::size_t>(i)] - top);
        atoms.weights[static_cast<std::size_t>(i)] = w;
        sum += w;
    }
    for (double& w : atoms.weights) w /= sum;
    for (int i = 0; i < k; ++i)
        atoms.points[static_cast<std::size_t>(i)] =
            std::polar(1.0, params[static_cast<std::size_t>(k + i)]);
    return atoms;
}

}  // namespace

std::string search_family_name(SearchFamily family) {
    switch (family) {
        case SearchFamily::herglotz: return "herglotz";
        case SearchFamily::convex_herglotz: return "convex-herglotz";
    }
    return "unknown";
}

const std::vector<std::string>& objective_names() {
    static const std::vector<std::string> names = {"abs_h22", "abs_h31", "abs_fekete_szego"};
    return names;
}

double objective_value(const std::string& objective, const SchlichtFunction& f) {
    if (objective == "abs_h22") return std::abs(h22_direct(f));
    if (objective == "abs_h31") return std::abs(h31_direct(f));
    if (objective == "abs_fekete_szego") return std::abs(f.a(3) - f.a(2) * f.a(2));
    throw BadParametrization("unknown objective '" + objective + "'");
}

void SearchSpec::validate() const {
    if (atoms < 1 || atoms > 16) throw BadParametrization("atom count must be in 1..16");
    if (restarts < 1) throw BadParametrization("restarts must be >= 1");
    if (max_evals < restarts) throw BadParametrization("max_evals must be >= restarts");
    if (truncation < 5) throw BadParametrization("truncation must be >= 5");
    // Reject unknown objectives up front rather than at the first evaluation.
    const auto& names = objective_names();
    if (std::find(names.begin(), names.end(), objective) == names.end())
        throw BadParametrization("unknown objective '" + objective + "'");
}

SchlichtFunction decode_parameters(const SearchSpec& spec, const std::vector<double>& params) {
    if (static_cast<int>(params.size()) != spec.parameter_count())
        throw BadParametrization("expected " + std::to_string(spec.parameter_count()) +
                                 " raw parameters, got " + std::to_string(params.size()));
    const SchlichtFunction starlike =
        starlike_from_herglotz(decode_atoms(spec.atoms, params), spec.truncation);
    if (spec.family == SearchFamily::convex_herglotz)
        return convex_from_starlike(starlike, spec.truncation);
    return starlike;
}

double evaluate_objective(const SearchSpec& spec, const std::vector<double>& params) {
    if (static_cast<int>(params.size()) != spec.parameter_count())
        throw BadParametrization("expected " + std::to_string(spec.parameter_count()) +
                                 " raw parameters, got " + std::to_string(params.size()));
    try {
        const double value = objective_value(spec.objective, decode_parameters(spec, params));
        if (!std::isfinite(value)) return -std::numeric_limits<double>::infinity();
        return value;
    } catch (const InvalidAtoms&) {
        return -std::numeric_limits<double>::infinity();
    }
}

SearchResult multi_start_search(const SearchSpec& spec) {
    spec.validate();
    const int dim = spec.parameter_count();
    const long budget_per_restart = std::max<long>(1, spec.max_evals / spec.restarts);

    double best_value = -std::numeric_limits<double>::infinity();
    std::vector<double> best_params;
    std::vector<std::pair<int, double>> history;
    history.reserve(static_cast<std::size_t>(spec.restarts));
    long evals_used = 0;
    bool budget_exhausted = false;

    auto negative_objective = [&](std::span<const double> x) {
        return -evaluate_objective(spec, std::vector<double>(x.begin(), x.end()));
    };

    for (int restart = 0; restart < spec.restarts; ++restart) {
        std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(static_cast<std::uint64_t>(restart))));
        std::uniform_real_distribution<double> logit(-2.0, 2.0);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        std::vector<double> start(static_cast<std::size_t>(dim));
        for (int i = 0; i < spec.atoms; ++i) start[static_cast<std::size_t>(i)] = logit(rng);
        for (int i = spec.atoms; i < dim; ++i) start[static_cast<std::size_t>(i)] = angle(rng);

        const NelderMeadResult r =
            nelder_mead(negative_objective, start, 0.25, 1e-9, budget_per_restart);
        const double value = -r.value;
        evals_used += r.evals;
        if (!r.converged) budget_exhausted = true;
        history.emplace_back(restart, value);
        if (best_params.empty() || value > best_value + kTieTolerance) {
            best_value = value;
            best_params = r.x;
        }
    }

    SchlichtFunction best_function = decode_parameters(spec, best_params);
    return SearchResult{best_value,  std::move(best_params),   std::move(best_function),
                        evals_used,  budget_exhausted,         std::move(history)};
}

}  // namespace schlicht
