// Series arithmetic.

#include "schlicht/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace schlicht {

namespace {
constexpr double kUnitTolerance = 1e-12;
}

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw DomainError("series order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex(0.0, 0.0));
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least a constant term");
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
    TruncatedSeries out(order);
    out.coeffs_[0] = value;
    return out;
}

Complex TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("series coefficient index " + std::to_string(k) +
                                " outside truncation order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, Complex value) {
    if (k < 0 || k > order())
        throw std::out_of_range("series coefficient index " + std::to_string(k) +
                                " outside truncation order " + std::to_string(order()));
    coeffs_[static_cast<std::size_t>(k)] = value;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw DomainError("truncation target outside current order");
    TruncatedSeries out(new_order);
    for (int k = 0; k <= new_order; ++k) out.set_coeff(k, coeff(k));
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v) {
    const int n = std::min(u.order(), v.order());
    TruncatedSeries out(n);
    for (int k = 0; k <= n; ++k) out.set_coeff(k, u.coeff(k) + v.coeff(k));
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v) {
    const int n = std::min(u.order(), v.order());
    TruncatedSeries out(n);
    for (int k = 0; k <= n; ++k) out.set_coeff(k, u.coeff(k) - v.coeff(k));
    return out;
}

TruncatedSeries operator*(Complex scale, const TruncatedSeries& u) {
    TruncatedSeries out(u.order());
    for (int k = 0; k <= u.order(); ++k) out.set_coeff(k, scale * u.coeff(k));
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v) {
    const int n = std::min(u.order(), v.order());
    TruncatedSeries out(n);
    for (int k = 0; k <= n; ++k) {
        Complex acc(0.0, 0.0);
        for (int i = 0; i <= k; ++i) acc += u.coeff(i) * v.coeff(k - i);
        out.set_coeff(k, acc);
    }
    return out;
}

TruncatedSeries series_log(const TruncatedSeries& u) {
    const Complex c0 = u.coeff(0);
    if (std::abs(c0 - 1.0) > kUnitTolerance)
        throw NonUnitConstantTerm("series_log requires constant term 1, got " +
                                  std::to_string(c0.real()) + (c0.imag() < 0 ? "" : "+") +
                                  std::to_string(c0.imag()) + "i");
    const int n = u.order();
    TruncatedSeries out(n);
    out.set_coeff(0, std::log(c0));
    for (int m = 1; m <= n; ++m) {
        Complex acc = static_cast<double>(m) * u.coeff(m);
        for (int k = 1; k < m; ++k)
            acc -= static_cast<double>(k) * out.coeff(k) * u.coeff(m - k);
        out.set_coeff(m, acc / (static_cast<double>(m) * c0));
    }
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& u) {
    const int n = u.order();
    TruncatedSeries out(n);
    out.set_coeff(0, std::exp(u.coeff(0)));
    for (int m = 1; m <= n; ++m) {
        Complex acc(0.0, 0.0);
        for (int k = 1; k <= m; ++k)
            acc += static_cast<double>(k) * u.coeff(k) * out.coeff(m - k);
        out.set_coeff(m, acc / static_cast<double>(m));
    }
    return out;
}

TruncatedSeries series_pow(const TruncatedSeries& u, double alpha) {
    return series_exp(Complex(alpha, 0.0) * series_log(u));
}

BivariateSeries::BivariateSeries(int total_degree) : degree_(total_degree) {
    if (total_degree < 0) throw DomainError("total degree must be non-negative");
    const std::size_t n = static_cast<std::size_t>(total_degree) + 1;
    data_.assign(n * (n + 1) / 2, Complex(0.0, 0.0));
}

BivariateSeries BivariateSeries::constant(Complex value, int total_degree) {
    BivariateSeries out(total_degree);
    out.set_coeff(0, 0, value);
    return out;
}

std::size_t BivariateSeries::index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_)
        throw std::out_of_range("bivariate index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") outside total degree " +
                                std::to_string(degree_));
    // Row i holds entries j = 0 .. degree - i.
    const std::size_t row_offset =
        static_cast<std::size_t>(i) * (degree_ + 1) -
        static_cast<std::size_t>(i) * (i - 1) / 2;
    return row_offset + static_cast<std::size_t>(j);
}

Complex BivariateSeries::coeff(int i, int j) const { return data_[index(i, j)]; }

void BivariateSeries::set_coeff(int i, int j, Complex value) { data_[index(i, j)] = value; }

double BivariateSeries::symmetry_defect() const {
    double worst = 0.0;
    for (int i = 0; i <= degree_; ++i)
        for (int j = i; i + j <= degree_; ++j)
            worst = std::max(worst, std::abs(coeff(i, j) - coeff(j, i)));
    return worst;
}

BivariateSeries operator+(const BivariateSeries& u, const BivariateSeries& v) {
    const int d = std::min(u.total_degree(), v.total_degree());
    BivariateSeries out(d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) out.set_coeff(i, j, u.coeff(i, j) + v.coeff(i, j));
    return out;
}

BivariateSeries operator-(const BivariateSeries& u, const BivariateSeries& v) {
    const int d = std::min(u.total_degree(), v.total_degree());
    BivariateSeries out(d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) out.set_coeff(i, j, u.coeff(i, j) - v.coeff(i, j));
    return out;
}

BivariateSeries operator*(Complex scale, const BivariateSeries& u) {
    BivariateSeries out(u.total_degree());
    for (int i = 0; i <= u.total_degree(); ++i)
        for (int j = 0; i + j <= u.total_degree(); ++j)
            out.set_coeff(i, j, scale * u.coeff(i, j));
    return out;
}

BivariateSeries bivariate_mul(const BivariateSeries& u, const BivariateSeries& v) {
    const int d = std::min(u.total_degree(), v.total_degree());
    BivariateSeries out(d);
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; i + j <= d; ++j) {
            Complex acc(0.0, 0.0);
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q) acc += u.coeff(p, q) * v.coeff(i - p, j - q);
            out.set_coeff(i, j, acc);
        }
    }
    return out;
}

BivariateSeries bivariate_log(const BivariateSeries& f) {
    const Complex c00 = f.coeff(0, 0);
    if (std::abs(c00 - 1.0) > kUnitTolerance)
        throw NonUnitConstantTerm("bivariate_log requires constant term 1");
    const int d = f.total_degree();
    // Mercator composition log(1 + u) = sum (-1)^{k+1} u^k / k. The constant
    // term of u is at most 1e-12, so truncating the sum at k = d loses
    // nothing beyond machine noise.
    const BivariateSeries u = f - BivariateSeries::constant(Complex(1.0, 0.0), d);
    BivariateSeries out = u;
    BivariateSeries power = u;
    for (int k = 2; k <= d; ++k) {
        power = bivariate_mul(power, u);
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        out = out + Complex(sign / k, 0.0) * power;
    }
    return out;
}

BivariateSeries bivariate_exp(const BivariateSeries& u) {
    const int d = u.total_degree();
    BivariateSeries out = BivariateSeries::constant(Complex(1.0, 0.0), d) + u;
    BivariateSeries term = u;
    for (int k = 2; k <= d; ++k) {
        term = Complex(1.0 / k, 0.0) * bivariate_mul(term, u);
        out = out + term;
    }
    return out;
}

BivariateSeries divided_difference_kernel(const TruncatedSeries& f, int total_degree) {
    if (std::abs(f.coeff(0)) > kUnitTolerance || std::abs(f.coeff(1) - 1.0) > kUnitTolerance)
        throw NotNormalized("divided-difference kernel requires c0 = 0, c1 = 1");
    if (f.order() < total_degree + 1)
        throw InsufficientOrder("kernel to total degree " + std::to_string(total_degree) +
                                " needs series order >= " + std::to_string(total_degree + 1));
    // (f(t) - f(z)) / (t - z) = sum_n c_n (t^{n-1} + t^{n-2} z + ... + z^{n-1}),
    // so entry (i, j) is just c_{i+j+1}.
    BivariateSeries out(total_degree);
    for (int i = 0; i <= total_degree; ++i)
        for (int j = 0; i + j <= total_degree; ++j) out.set_coeff(i, j, f.coeff(i + j + 1));
    return out;
}

}  // namespace schlicht
