// Truncated formal power series over complex coefficients, univariate and
// bivariate. Everything is immutable-after-construction value semantics;
// binary operations truncate to the smaller operand order so no result ever
// pretends to more accuracy than its inputs carry.
#pragma once

#include <complex>
#include <vector>

#include "schlicht/errors.hpp"

namespace schlicht {

using Complex = std::complex<double>;

/// Univariate series c_0 + c_1 z + ... + c_N z^N with fixed truncation N.
/// Reads and writes outside 0..N throw; nothing is silently extended.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries constant(Complex value, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex coeff(int k) const;
    void set_coeff(int k, Complex value);
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Copy cut down to a smaller order; extension is not provided.
    TruncatedSeries truncated(int new_order) const;

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries operator*(Complex scale, const TruncatedSeries& u);

/// Cauchy product truncated at min(order(u), order(v)).
TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v);

inline TruncatedSeries operator*(const TruncatedSeries& u, const TruncatedSeries& v) {
    return series_mul(u, v);
}

/// log u for a series with constant term 1 (within 1e-12), branch with
/// log(1) = 0. Computed through the derivative recurrence n c0 L_n =
/// n u_n - sum_{k<n} k L_k u_{n-k}; the exp round trip is checked in tests.
/// Throws NonUnitConstantTerm otherwise.
TruncatedSeries series_log(const TruncatedSeries& u);

/// exp u, inverse of series_log on its domain.
TruncatedSeries series_exp(const TruncatedSeries& u);

/// u^alpha = exp(alpha log u) for a series with constant term 1. alpha = 0.5
/// picks the square-root branch with value 1 at the origin.
TruncatedSeries series_pow(const TruncatedSeries& u, double alpha);

/// Two-variable series stored as a dense triangle: entries c(i, j) exist for
/// i + j <= total_degree only.
class BivariateSeries {
public:
    explicit BivariateSeries(int total_degree);

    static BivariateSeries constant(Complex value, int total_degree);

    int total_degree() const { return degree_; }
    Complex coeff(int i, int j) const;
    void set_coeff(int i, int j, Complex value);

    /// Max |c(i,j) - c(j,i)| over the triangle.
    double symmetry_defect() const;

private:
    std::size_t index(int i, int j) const;

    int degree_;
    std::vector<Complex> data_;
};

BivariateSeries operator+(const BivariateSeries& u, const BivariateSeries& v);
BivariateSeries operator-(const BivariateSeries& u, const BivariateSeries& v);
BivariateSeries operator*(Complex scale, const BivariateSeries& u);

/// Product truncated at min(total_degree(u), total_degree(v)).
BivariateSeries bivariate_mul(const BivariateSeries& u, const BivariateSeries& v);

/// log F for F(0,0) = 1 (within 1e-12), via the alternating Mercator sum of
/// powers of F - 1 up to k = total_degree. Throws NonUnitConstantTerm.
BivariateSeries bivariate_log(const BivariateSeries& f);

/// exp U via the exponential sum of powers; U(0,0) is expected near 0.
BivariateSeries bivariate_exp(const BivariateSeries& u);

/// The divided-difference kernel (f(t) - f(z)) / (t - z) of a normalized
/// series f (c_0 = 0, c_1 = 1), truncated to the given total degree. Entry
/// (i, j) equals the coefficient c_{i+j+1} of f, so the output is symmetric
/// by construction and F(0,0) = 1. Requires order(f) >= total_degree + 1.
BivariateSeries divided_difference_kernel(const TruncatedSeries& f, int total_degree);

}  // namespace schlicht
