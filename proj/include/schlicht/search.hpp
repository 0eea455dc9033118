// Multi-start Nelder-Mead search over certified family parameter spaces for
// extremal coefficient functionals. Produces lower-bound witnesses only; a
// search result is evidence, not a supremum claim.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schlicht/families.hpp"

namespace schlicht {

enum class SearchFamily {
    herglotz,
    convex_herglotz,
};

std::string search_family_name(SearchFamily family);

/// Unconstrained parametrization: for k atoms the raw vector is
/// (k weight logits, k angles); weights decode through a softmax so any real
/// vector yields valid atoms. convex_herglotz applies the Alexander
/// transform after decoding.
struct SearchSpec {
    SearchFamily family = SearchFamily::herglotz;
    int atoms = 4;
    std::string objective = "abs_h22";
    int restarts = 8;
    std::uint64_t seed = 0;
    long max_evals = 50000;
    int truncation = 12;

    int parameter_count() const { return 2 * atoms; }
    /// Throws BadParametrization on out-of-range fields or an unknown
    /// objective name.
    void validate() const;
};

/// Objective names accepted by SearchSpec::objective.
const std::vector<std::string>& objective_names();

/// Value of the named functional on a function (always a modulus).
double objective_value(const std::string& objective, const SchlichtFunction& f);

/// Decode a raw parameter vector into the certified family member.
SchlichtFunction decode_parameters(const SearchSpec& spec, const std::vector<double>& params);

/// Objective at a raw parameter vector; atom decode failures and non-finite
/// values map to -infinity so the optimizer simply avoids them.
double evaluate_objective(const SearchSpec& spec, const std::vector<double>& params);

struct SearchResult {
    double best_value = 0.0;
    std::vector<double> best_params;
    SchlichtFunction best_function;
    long evals_used = 0;
    bool budget_exhausted = false;
    /// One entry per restart: (restart index, converged objective value).
    std::vector<std::pair<int, double>> history;
};

/// Run every restart with its own generator seeded from (seed, restart), keep
/// the best result; ties within 1e-12 go to the earlier restart. Bit-for-bit
/// deterministic for a fixed spec.
SearchResult multi_start_search(const SearchSpec& spec);

}  // namespace schlicht
