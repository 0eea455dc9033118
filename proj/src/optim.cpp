// Derivative-free optimizers.

#include "schlicht/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "schlicht/errors.hpp"

namespace schlicht {

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
    if (!(lo <= hi)) throw DomainError("golden section needs lo <= hi");
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? c : d;
}

namespace {

double guarded(const std::function<double(std::span<const double>)>& f,
               std::span<const double> x) {
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, double scale, double tol,
                             long max_evals) {
    const std::size_t dim = x0.size();
    if (dim == 0) throw DomainError("nelder_mead needs at least one dimension");
    if (max_evals < 1) throw DomainError("nelder_mead needs a positive budget");

    NelderMeadResult result;
    long evals = 0;

    std::vector<std::vector<double>> simplex;
    std::vector<double> values;
    simplex.reserve(dim + 1);
    values.reserve(dim + 1);

    auto record_best = [&](const std::vector<double>& x, double v) {
        if (result.x.empty() || v < result.value) {
            result.x = x;
            result.value = v;
        }
    };

    // Initial vertex first so a budget of one eval still returns x0's value.
    simplex.emplace_back(x0.begin(), x0.end());
    values.push_back(guarded(f, simplex[0]));
    ++evals;
    record_best(simplex[0], values[0]);

    for (std::size_t i = 0; i < dim && evals < max_evals; ++i) {
        std::vector<double> v(x0.begin(), x0.end());
        v[i] += scale;
        simplex.push_back(v);
        values.push_back(guarded(f, simplex.back()));
        ++evals;
        record_best(simplex.back(), values.back());
    }

    if (simplex.size() < dim + 1) {
        result.evals = evals;
        result.converged = false;
        return result;
    }

    std::vector<std::size_t> order(dim + 1);
    auto sort_order = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    };

    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    while (evals < max_evals) {
        sort_order();
        const std::size_t best = order[0];
        const std::size_t worst = order[dim];
        const std::size_t second_worst = order[dim - 1];

        if (std::isfinite(values[best]) && values[worst] - values[best] <= tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t k = 0; k <= dim; ++k) {
            if (k == worst) continue;
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[k][i];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double t) {
            std::vector<double> x(dim);
            for (std::size_t i = 0; i < dim; ++i)
                x[i] = centroid[i] + t * (centroid[i] - simplex[worst][i]);
            return x;
        };

        std::vector<double> reflected = blend(kReflect);
        const double fr = guarded(f, reflected);
        ++evals;
        record_best(reflected, fr);

        if (fr < values[best] && evals < max_evals) {
            std::vector<double> expanded = blend(kExpand);
            const double fe = guarded(f, expanded);
            ++evals;
            record_best(expanded, fe);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second_worst]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
            continue;
        }
        if (evals >= max_evals) break;

        // Contract toward the better of the worst vertex and its reflection.
        const bool outside = fr < values[worst];
        std::vector<double> contracted = blend(outside ? kContract : -kContract);
        const double fco = guarded(f, contracted);
        ++evals;
        record_best(contracted, fco);
        if (fco < std::min(fr, values[worst])) {
            simplex[worst] = std::move(contracted);
            values[worst] = fco;
            continue;
        }

        // Shrink everything toward the best vertex.
        for (std::size_t k = 0; k <= dim && evals < max_evals; ++k) {
            if (k == best) continue;
            for (std::size_t i = 0; i < dim; ++i)
                simplex[k][i] = simplex[best][i] + kShrink * (simplex[k][i] - simplex[best][i]);
            values[k] = guarded(f, simplex[k]);
            ++evals;
            record_best(simplex[k], values[k]);
        }
    }

    result.evals = evals;
    return result;
}

}  // namespace schlicht
