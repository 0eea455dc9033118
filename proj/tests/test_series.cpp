#include <doctest.h>

#include <random>

#include "schlicht/series.hpp"
#include "support/test_support.hpp"

using namespace schlicht;

namespace {

double series_error(const TruncatedSeries& u, const TruncatedSeries& v) {
    REQUIRE(u.order() == v.order());
    double worst = 0.0;
    for (int k = 0; k <= u.order(); ++k) worst = std::max(worst, std::abs(u.coeff(k) - v.coeff(k)));
    return worst;
}

TruncatedSeries from_reals(std::vector<double> values) {
    std::vector<Complex> c(values.begin(), values.end());
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("series_mul matches hand expansions") {
    // (1 + z)(1 - z) = 1 - z^2
    const TruncatedSeries p = from_reals({1.0, 1.0, 0.0});
    const TruncatedSeries q = from_reals({1.0, -1.0, 0.0});
    const TruncatedSeries pq = series_mul(p, q);
    CHECK(pq.coeff(0) == Complex(1.0, 0.0));
    CHECK(pq.coeff(1) == Complex(0.0, 0.0));
    CHECK(pq.coeff(2) == Complex(-1.0, 0.0));

    // multiplying by 1 is the identity
    std::mt19937_64 rng(7);
    const TruncatedSeries u = testsup::random_unit_series(rng, 9);
    CHECK(series_error(series_mul(TruncatedSeries::constant(Complex(1.0, 0.0), 9), u), u) == 0.0);

    // (z + 2 z^2)^2 = z^2 + 4 z^3 + 4 z^4
    TruncatedSeries w(4);
    w.set_coeff(1, Complex(1.0, 0.0));
    w.set_coeff(2, Complex(2.0, 0.0));
    const TruncatedSeries w2 = series_mul(w, w);
    CHECK(w2.coeff(1) == Complex(0.0, 0.0));
    CHECK(w2.coeff(2) == Complex(1.0, 0.0));
    CHECK(w2.coeff(3) == Complex(4.0, 0.0));
    CHECK(w2.coeff(4) == Complex(4.0, 0.0));
}

TEST_CASE("series_mul truncates to the smaller operand") {
    const TruncatedSeries u = from_reals({1.0, 1.0, 1.0, 1.0, 1.0});
    const TruncatedSeries v = from_reals({1.0, 2.0});
    const TruncatedSeries uv = series_mul(u, v);
    CHECK(uv.order() == 1);
    CHECK_THROWS_AS((void)uv.coeff(2), std::out_of_range);
}

TEST_CASE("series_log on classical inputs") {
    // log(1 - z) = -z - z^2/2 - z^3/3
    const TruncatedSeries mercator = series_log(from_reals({1.0, -1.0, 0.0, 0.0}));
    CHECK(std::abs(mercator.coeff(1) - Complex(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(mercator.coeff(2) - Complex(-0.5, 0.0)) < 1e-15);
    CHECK(std::abs(mercator.coeff(3) - Complex(-1.0 / 3.0, 0.0)) < 1e-15);

    // log(1) = 0
    const TruncatedSeries zero = series_log(TruncatedSeries::constant(Complex(1.0, 0.0), 5));
    for (int k = 0; k <= 5; ++k) CHECK(zero.coeff(k) == Complex(0.0, 0.0));

    // log((1+z)(1-z)) = log(1 - z^2) = -z^2 - z^4/2
    const TruncatedSeries p = from_reals({1.0, 1.0, 0.0, 0.0, 0.0});
    const TruncatedSeries q = from_reals({1.0, -1.0, 0.0, 0.0, 0.0});
    const TruncatedSeries lg = series_log(series_mul(p, q));
    CHECK(std::abs(lg.coeff(1)) < 1e-15);
    CHECK(std::abs(lg.coeff(2) - Complex(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(lg.coeff(3)) < 1e-15);
    CHECK(std::abs(lg.coeff(4) - Complex(-0.5, 0.0)) < 1e-15);
}

TEST_CASE("series_log rejects non-unit constant terms") {
    CHECK_THROWS_AS(series_log(from_reals({2.0, 1.0})), NonUnitConstantTerm);
    CHECK_THROWS_AS(series_pow(from_reals({0.0, 1.0}), 0.5), NonUnitConstantTerm);
}

TEST_CASE("series_pow binomial expansions") {
    // (1 - z)^{-2} = 1 + 2z + 3z^2 + 4z^3
    const TruncatedSeries koebe_tail = series_pow(from_reals({1.0, -1.0, 0.0, 0.0}), -2.0);
    for (int k = 0; k <= 3; ++k)
        CHECK(std::abs(koebe_tail.coeff(k) - Complex(k + 1.0, 0.0)) < 1e-13);

    // u^0 = 1
    std::mt19937_64 rng(11);
    const TruncatedSeries u = testsup::random_unit_series(rng, 8);
    const TruncatedSeries one = series_pow(u, 0.0);
    CHECK(std::abs(one.coeff(0) - Complex(1.0, 0.0)) < 1e-15);
    for (int k = 1; k <= 8; ++k) CHECK(std::abs(one.coeff(k)) < 1e-15);

    // (1 - z^3)^{-2/3} = 1 + (2/3) z^3 + (5/9) z^6 + ...
    TruncatedSeries cube(7);
    cube.set_coeff(0, Complex(1.0, 0.0));
    cube.set_coeff(3, Complex(-1.0, 0.0));
    const TruncatedSeries expanded = series_pow(cube, -2.0 / 3.0);
    CHECK(std::abs(expanded.coeff(3) - Complex(2.0 / 3.0, 0.0)) < 1e-13);
    CHECK(std::abs(expanded.coeff(6) - Complex(5.0 / 9.0, 0.0)) < 1e-13);
    CHECK(std::abs(expanded.coeff(1)) < 1e-15);
    CHECK(std::abs(expanded.coeff(5)) < 1e-15);
}

TEST_CASE("exp/log round trip on random unit series") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        const int order = 1 + static_cast<int>(rng() % 16);
        const TruncatedSeries u = testsup::random_unit_series(rng, order);
        const TruncatedSeries back = series_exp(series_log(u));
        CHECK(series_error(back, u) < 1e-10);
    }
}

TEST_CASE("square root squared reproduces the series") {
    std::mt19937_64 rng(2027);
    for (int trial = 0; trial < 50; ++trial) {
        const int order = 1 + static_cast<int>(rng() % 16);
        const TruncatedSeries u = testsup::random_unit_series(rng, order);
        const TruncatedSeries root = series_pow(u, 0.5);
        CHECK(series_error(series_mul(root, root), u) < 1e-10);
    }
}

TEST_CASE("divided_difference_kernel basic shapes") {
    // f = z: kernel is identically 1
    TruncatedSeries ident(6);
    ident.set_coeff(1, Complex(1.0, 0.0));
    const BivariateSeries one = divided_difference_kernel(ident, 5);
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j)
            CHECK(one.coeff(i, j) == ((i == 0 && j == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));

    // f = z + a2 z^2: kernel is 1 + a2 (t + z)
    const Complex a2(0.3, -0.7);
    TruncatedSeries quad(4);
    quad.set_coeff(1, Complex(1.0, 0.0));
    quad.set_coeff(2, a2);
    const BivariateSeries k = divided_difference_kernel(quad, 3);
    CHECK(k.coeff(0, 0) == Complex(1.0, 0.0));
    CHECK(k.coeff(1, 0) == a2);
    CHECK(k.coeff(0, 1) == a2);
    CHECK(k.coeff(1, 1) == Complex(0.0, 0.0));
}

TEST_CASE("divided_difference_kernel of z/(1-z^2) matches its factorization") {
    // f(t) - f(z) = (t - z)(1 + tz)/((1-t^2)(1-z^2)) gives kernel entries 1
    // exactly at even total degree and 0 at odd.
    TruncatedSeries f(8);
    for (int n = 1; n <= 8; n += 2) f.set_coeff(n, Complex(1.0, 0.0));
    const BivariateSeries k = divided_difference_kernel(f, 7);
    for (int i = 0; i <= 7; ++i)
        for (int j = 0; i + j <= 7; ++j) {
            const Complex expected = ((i + j) % 2 == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            CHECK(std::abs(k.coeff(i, j) - expected) < 1e-12);
        }
}

TEST_CASE("divided_difference_kernel rejects bad inputs") {
    TruncatedSeries not_normalized(5);
    not_normalized.set_coeff(0, Complex(0.5, 0.0));
    not_normalized.set_coeff(1, Complex(1.0, 0.0));
    CHECK_THROWS_AS(divided_difference_kernel(not_normalized, 3), NotNormalized);

    TruncatedSeries short_series(3);
    short_series.set_coeff(1, Complex(1.0, 0.0));
    CHECK_THROWS_AS(divided_difference_kernel(short_series, 3), InsufficientOrder);
}

TEST_CASE("kernel symmetry is exact by construction") {
    std::mt19937_64 rng(5);
    const auto f = testsup::random_raw_function(rng, 12);
    const BivariateSeries k = divided_difference_kernel(f.coeffs, 10);
    CHECK(k.symmetry_defect() == 0.0);
}

TEST_CASE("bivariate_log basics") {
    // log of the constant 1 is 0
    const BivariateSeries zero = bivariate_log(BivariateSeries::constant(Complex(1.0, 0.0), 6));
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6; ++j) CHECK(zero.coeff(i, j) == Complex(0.0, 0.0));

    // log(1 + tz) = tz - (tz)^2/2 + (tz)^3/3
    BivariateSeries f = BivariateSeries::constant(Complex(1.0, 0.0), 6);
    f.set_coeff(1, 1, Complex(1.0, 0.0));
    const BivariateSeries lg = bivariate_log(f);
    CHECK(std::abs(lg.coeff(1, 1) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(lg.coeff(2, 2) - Complex(-0.5, 0.0)) < 1e-15);
    CHECK(std::abs(lg.coeff(3, 3) - Complex(1.0 / 3.0, 0.0)) < 1e-15);
    CHECK(std::abs(lg.coeff(2, 1)) < 1e-15);

    CHECK_THROWS_AS(bivariate_log(BivariateSeries::constant(Complex(2.0, 0.0), 3)),
                    NonUnitConstantTerm);
}

TEST_CASE("bivariate_log of the Koebe kernel matches the three-log expansion") {
    TruncatedSeries f2(12);
    for (int n = 1; n <= 12; n += 2) f2.set_coeff(n, Complex(1.0, 0.0));
    const BivariateSeries lg = bivariate_log(divided_difference_kernel(f2, 11));
    for (int i = 0; i <= 11; ++i)
        for (int j = 0; i + j <= 11; ++j)
            CHECK(std::abs(lg.coeff(i, j) - testsup::koebe_omega_oracle(i, j)) < 1e-12);
}

TEST_CASE("bivariate exp/log round trip and symmetry preservation") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int trial = 0; trial < 20; ++trial) {
        const int degree = 4 + static_cast<int>(rng() % 7);
        BivariateSeries f = BivariateSeries::constant(Complex(1.0, 0.0), degree);
        for (int i = 0; i <= degree; ++i)
            for (int j = i; i + j <= degree; ++j) {
                if (i == 0 && j == 0) continue;
                const Complex value(u(rng), u(rng));
                f.set_coeff(i, j, value);
                f.set_coeff(j, i, value);
            }
        const BivariateSeries lg = bivariate_log(f);
        CHECK(lg.symmetry_defect() < 1e-12);
        const BivariateSeries back = bivariate_exp(lg);
        double worst = 0.0;
        for (int i = 0; i <= degree; ++i)
            for (int j = 0; i + j <= degree; ++j)
                worst = std::max(worst, std::abs(back.coeff(i, j) - f.coeff(i, j)));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("degree bookkeeping never reaches past the truncation") {
    TruncatedSeries s(3);
    CHECK_THROWS_AS((void)s.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(s.set_coeff(-1, Complex(0.0, 0.0)), std::out_of_range);
    BivariateSeries b(3);
    CHECK_THROWS_AS((void)b.coeff(2, 2), std::out_of_range);
    CHECK_THROWS_AS(b.set_coeff(0, 4, Complex(0.0, 0.0)), std::out_of_range);
}
