// Small derivative-free optimizers: golden-section in 1-D and Nelder-Mead
// in low dimension. Both are deterministic given their inputs.
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace schlicht {

/// Argmax of a unimodal-enough function on [lo, hi], bracketing until the
/// interval is narrower than tol.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    long evals = 0;
    bool converged = false;
};

/// Minimize f starting from x0 with an axis-aligned initial simplex of the
/// given scale. Standard reflection/expansion/contraction/shrink constants
/// (1, 2, 0.5, 0.5). Stops when the simplex value spread drops below tol
/// (converged = true) or the evaluation budget runs out (converged = false);
/// always returns the best point seen, including the degenerate budget = 1
/// case where only x0 was evaluated. NaN objective values are treated as
/// +infinity.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, double scale, double tol,
                             long max_evals);

}  // namespace schlicht
