// Family constructors.

#include "schlicht/families.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace schlicht {

namespace {

constexpr double kAtomTolerance = 1e-12;

SchlichtFunction finish(TruncatedSeries coeffs, FamilyTag tag, std::vector<double> params,
                        bool certified, std::string label) {
    if (coeffs.coeff(0) != Complex(0.0, 0.0) || coeffs.coeff(1) != Complex(1.0, 0.0))
        throw NotNormalized("function must have a0 = 0 and a1 = 1");
    return SchlichtFunction{std::move(coeffs), tag, std::move(params), certified,
                            std::move(label)};
}

std::string format_param(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::identity: return "identity";
        case FamilyTag::koebe: return "koebe";
        case FamilyTag::kfold_koebe: return "kfold";
        case FamilyTag::herglotz_starlike: return "herglotz";
        case FamilyTag::convex: return "convex";
        case FamilyTag::raw: return "raw";
    }
    return "unknown";
}

void HerglotzAtoms::validate() const {
    if (weights.empty() || weights.size() != points.size())
        throw InvalidAtoms("atom weights and points must be non-empty and equal-length");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw InvalidAtoms("atom weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kAtomTolerance)
        throw InvalidAtoms("atom weights must sum to 1");
    for (const Complex& x : points)
        if (std::abs(std::abs(x) - 1.0) > kAtomTolerance)
            throw InvalidAtoms("atom points must be unimodular");
}

SchlichtFunction identity_function(int order) {
    if (order < 1) throw DomainError("order must be >= 1");
    TruncatedSeries s(order);
    s.set_coeff(1, Complex(1.0, 0.0));
    return finish(std::move(s), FamilyTag::identity, {}, true, "identity");
}

SchlichtFunction koebe_rotation(double theta, int order) {
    if (order < 1) throw DomainError("order must be >= 1");
    TruncatedSeries s(order);
    for (int n = 1; n <= order; ++n)
        s.set_coeff(n, static_cast<double>(n) * std::polar(1.0, (n - 1) * theta));
    return finish(std::move(s), FamilyTag::koebe, {theta}, true,
                  "koebe(theta=" + format_param(theta) + ")");
}

SchlichtFunction kfold_koebe(int k, int order) {
    if (k < 1) throw DomainError("fold count must be >= 1");
    if (order < 1) throw DomainError("order must be >= 1");
    TruncatedSeries s(order);
    // (1 - w)^{-2/k} = sum_m b_m w^m with b_0 = 1, b_{m+1} = b_m (2/k + m)/(m+1);
    // the function is z times that series evaluated at w = z^k.
    double b = 1.0;
    for (int m = 0; 1 + k * m <= order; ++m) {
        s.set_coeff(1 + k * m, Complex(b, 0.0));
        b *= (2.0 / k + m) / (m + 1);
    }
    return finish(std::move(s), FamilyTag::kfold_koebe, {static_cast<double>(k)}, true,
                  "kfold(k=" + std::to_string(k) + ")");
}

SchlichtFunction starlike_from_herglotz(const HerglotzAtoms& atoms, int order) {
    atoms.validate();
    if (order < 1) throw DomainError("order must be >= 1");
    const std::size_t k = atoms.weights.size();

    // p_m = 2 sum_k lambda_k x_k^m, the Taylor coefficients of
    // P(z) = sum lambda_k (1 + x_k z)/(1 - x_k z) past the constant 1.
    std::vector<Complex> p(static_cast<std::size_t>(order), Complex(0.0, 0.0));
    std::vector<Complex> power(k, Complex(1.0, 0.0));
    for (int m = 1; m < order; ++m) {
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            power[i] *= atoms.points[i];
            acc += atoms.weights[i] * power[i];
        }
        p[static_cast<std::size_t>(m)] = 2.0 * acc;
    }

    // Solve z f'/f = P coefficient by coefficient: (n-1) a_n = sum_{j<n} p_{n-j} a_j.
    TruncatedSeries s(order);
    s.set_coeff(1, Complex(1.0, 0.0));
    for (int n = 2; n <= order; ++n) {
        Complex acc(0.0, 0.0);
        for (int j = 1; j < n; ++j) acc += p[static_cast<std::size_t>(n - j)] * s.coeff(j);
        s.set_coeff(n, acc / static_cast<double>(n - 1));
    }

    std::vector<double> params;
    params.reserve(2 * k);
    for (double w : atoms.weights) params.push_back(w);
    for (const Complex& x : atoms.points) params.push_back(std::arg(x));
    return finish(std::move(s), FamilyTag::herglotz_starlike, std::move(params), true,
                  "herglotz(k=" + std::to_string(k) + ")");
}

SchlichtFunction convex_from_starlike(const SchlichtFunction& g, int order) {
    if (!g.certified)
        throw NotCertified("convex transform requires a certified starlike input");
    if (g.order() < order)
        throw InsufficientOrder("input order " + std::to_string(g.order()) +
                                " cannot supply a transform of order " + std::to_string(order));
    TruncatedSeries s(order);
    for (int n = 1; n <= order; ++n) s.set_coeff(n, g.a(n) / static_cast<double>(n));
    return finish(std::move(s), FamilyTag::convex, g.params, true, "convex(" + g.label + ")");
}

SchlichtFunction raw_coefficients(const std::vector<Complex>& a, int order) {
    if (order < 1) throw DomainError("order must be >= 1");
    if (a.empty() || a[0] != Complex(1.0, 0.0))
        throw NotNormalized("raw coefficient list must start with a1 = 1");
    TruncatedSeries s(order);
    for (int n = 1; n <= order && static_cast<std::size_t>(n) <= a.size(); ++n)
        s.set_coeff(n, a[static_cast<std::size_t>(n - 1)]);
    return finish(std::move(s), FamilyTag::raw, {}, false,
                  "raw(n=" + std::to_string(a.size()) + ")");
}

SchlichtFunction conjugate(const SchlichtFunction& f) {
    TruncatedSeries s(f.order());
    for (int n = 0; n <= f.order(); ++n) s.set_coeff(n, std::conj(f.a(n)));
    SchlichtFunction out{std::move(s), f.family_tag, f.params, f.certified,
                         "conj(" + f.label + ")"};
    return out;
}

}  // namespace schlicht
