// Grunsky table computation and identity checks.

#include "schlicht/grunsky.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schlicht {

namespace {
constexpr double kOddSupportTolerance = 1e-10;
}

Complex GrunskyTable::omega(int r, int s) const {
    if (r < 1 || s < 1 || r % 2 == 0 || s % 2 == 0)
        throw DomainError("table is indexed by positive odd pairs");
    if (r > max_index || s > max_index)
        throw InsufficientOrder("index (" + std::to_string(r) + "," + std::to_string(s) +
                                ") beyond table max index " + std::to_string(max_index));
    return entries.at({r, s});
}

double GrunskyTable::symmetry_defect() const {
    double worst = 0.0;
    for (const auto& [key, value] : entries)
        worst = std::max(worst, std::abs(value - entries.at({key.second, key.first})));
    return worst;
}

TruncatedSeries sqrt_transform(const SchlichtFunction& f) {
    const int n = f.order();
    // f(z^2)/z^2 as a series in w = z^2 has coefficients a_{m+1}; its square
    // root has constant term 1, and interleaving with zeros gives the odd
    // transform at doubled truncation.
    TruncatedSeries shifted(n - 1);
    for (int m = 0; m < n; ++m) shifted.set_coeff(m, f.a(m + 1));
    const TruncatedSeries root = series_pow(shifted, 0.5);
    TruncatedSeries out(2 * n - 1);
    for (int m = 0; m < n; ++m) out.set_coeff(2 * m + 1, root.coeff(m));
    return out;
}

GrunskyTable grunsky_table(const SchlichtFunction& f, int max_index) {
    if (max_index < 1 || max_index % 2 == 0)
        throw DomainError("max index must be odd and >= 1");
    if (f.order() < max_index + 1)
        throw InsufficientOrder("table to index " + std::to_string(max_index) +
                                " needs series order >= " + std::to_string(max_index + 1));

    const TruncatedSeries f2 = sqrt_transform(f);
    const int total_degree = 2 * max_index;
    const BivariateSeries kernel = divided_difference_kernel(f2, total_degree);
    const BivariateSeries log_kernel = bivariate_log(kernel);

    // An odd transform only populates even total degrees; a nonzero entry at
    // odd total degree means the pipeline broke, not that the input was bad.
    for (int i = 0; i <= total_degree; ++i)
        for (int j = 0; i + j <= total_degree; ++j)
            if ((i + j) % 2 == 1 && std::abs(log_kernel.coeff(i, j)) > kOddSupportTolerance)
                throw std::logic_error("odd-total-degree Grunsky entry did not vanish at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");

    GrunskyTable table;
    table.max_index = max_index;
    table.source = f.label;
    for (int r = 1; r <= max_index; r += 2)
        for (int s = 1; s <= max_index; s += 2)
            table.entries[{r, s}] = log_kernel.coeff(r, s);
    return table;
}

double CoefficientRelations::max_residual_modulus() const {
    double worst = 0.0;
    for (const Complex& r : residuals) worst = std::max(worst, std::abs(r));
    return worst;
}

CoefficientRelations verify_coefficient_relations(const SchlichtFunction& f,
                                                  const GrunskyTable& table) {
    if (table.max_index < 5)
        throw InsufficientOrder("relation check needs table indices through (3,5)");
    if (f.order() < 5)
        throw InsufficientOrder("relation check needs coefficients through a5");

    const Complex w11 = table.omega(1, 1);
    const Complex w13 = table.omega(1, 3);
    const Complex w33 = table.omega(3, 3);
    const Complex w15 = table.omega(1, 5);
    const Complex w35 = table.omega(3, 5);
    const Complex a2 = f.a(2), a3 = f.a(3), a4 = f.a(4), a5 = f.a(5);

    const Complex w11_2 = w11 * w11;
    const Complex w11_3 = w11_2 * w11;
    const Complex w11_4 = w11_2 * w11_2;

    CoefficientRelations out;
    out.residuals[0] = a2 - 2.0 * w11;
    out.residuals[1] = a3 - (2.0 * w13 + 3.0 * w11_2);
    out.residuals[2] = a4 - (2.0 * w33 + 8.0 * w11 * w13 + (10.0 / 3.0) * w11_3);
    out.residuals[3] =
        a5 - (2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w13 * w13 + 18.0 * w11_2 * w13 +
              (7.0 / 3.0) * w11_4);
    out.residuals[4] = 3.0 * w15 - 3.0 * w11 * w13 + w11_3 - 3.0 * w33;
    out.a5_residual_w15sq =
        a5 - (2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w15 * w15 + 18.0 * w11_2 * w13 +
              (7.0 / 3.0) * w11_4);
    return out;
}

double grunsky_residual(const GrunskyTable& table, const InequalityProbe& probe) {
    const int rows = static_cast<int>(probe.x.size());
    if (rows < 1) throw DimensionMismatch("probe vector must not be empty");
    if (probe.outer_terms < 1) throw DimensionMismatch("outer truncation must be >= 1");
    if (2 * rows - 1 > table.max_index)
        throw DimensionMismatch("probe length " + std::to_string(rows) +
                                " exceeds table max index " + std::to_string(table.max_index));
    if (2 * probe.outer_terms - 1 > table.max_index)
        throw DimensionMismatch("outer truncation " + std::to_string(probe.outer_terms) +
                                " exceeds table max index " + std::to_string(table.max_index));

    double lhs = 0.0;
    for (int q = 1; q <= probe.outer_terms; ++q) {
        Complex inner(0.0, 0.0);
        for (int p = 1; p <= rows; ++p)
            inner += table.omega(2 * p - 1, 2 * q - 1) * probe.x[static_cast<std::size_t>(p - 1)];
        lhs += (2.0 * q - 1.0) * std::norm(inner);
    }
    double rhs = 0.0;
    for (int p = 1; p <= rows; ++p)
        rhs += std::norm(probe.x[static_cast<std::size_t>(p - 1)]) / (2.0 * p - 1.0);
    return rhs - lhs;
}

std::vector<InequalityProbe> canonical_probes(const GrunskyTable& table) {
    const int q = (table.max_index + 1) / 2;
    std::vector<InequalityProbe> probes;
    if (q >= 1) {
        InequalityProbe e1;
        e1.x.assign(static_cast<std::size_t>(std::min(q, 3)), Complex(0.0, 0.0));
        e1.x[0] = Complex(1.0, 0.0);
        e1.outer_terms = q;
        probes.push_back(std::move(e1));
    }
    if (q >= 2) {
        InequalityProbe e3;
        e3.x.assign(static_cast<std::size_t>(std::min(q, 3)), Complex(0.0, 0.0));
        e3.x[1] = Complex(1.0, 0.0);
        e3.outer_terms = q;
        probes.push_back(std::move(e3));
    }
    return probes;
}

}  // namespace schlicht
