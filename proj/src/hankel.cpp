// Hankel determinant evaluation.

#include "schlicht/hankel.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace schlicht {

HankelValue hankel_det(const SchlichtFunction& f, int q, int n) {
    if (q < 1 || n < 1) throw DomainError("determinant order and start index must be >= 1");
    const int top = n + 2 * (q - 1);
    if (f.order() < top)
        throw InsufficientOrder("H_" + std::to_string(q) + "(" + std::to_string(n) +
                                ") needs coefficients through a" + std::to_string(top));

    std::vector<Complex> m(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            m[static_cast<std::size_t>(i) * q + j] = f.a(n + i + j);

    auto at = [&](int i, int j) -> Complex& { return m[static_cast<std::size_t>(i) * q + j]; };

    Complex det(1.0, 0.0);
    for (int col = 0; col < q; ++col) {
        int pivot = col;
        for (int row = col + 1; row < q; ++row)
            if (std::abs(at(row, col)) > std::abs(at(pivot, col))) pivot = row;
        if (std::abs(at(pivot, col)) == 0.0) {
            det = Complex(0.0, 0.0);
            break;
        }
        if (pivot != col) {
            for (int j = col; j < q; ++j) std::swap(at(pivot, j), at(col, j));
            det = -det;
        }
        det *= at(col, col);
        for (int row = col + 1; row < q; ++row) {
            const Complex factor = at(row, col) / at(col, col);
            for (int j = col; j < q; ++j) at(row, j) -= factor * at(col, j);
        }
    }
    return HankelValue{q, n, det, f.label};
}

Complex h22_direct(const SchlichtFunction& f) {
    if (f.order() < 4) throw InsufficientOrder("H_2(2) needs coefficients through a4");
    return f.a(2) * f.a(4) - f.a(3) * f.a(3);
}

Complex h31_direct(const SchlichtFunction& f) {
    if (f.order() < 5) throw InsufficientOrder("H_3(1) needs coefficients through a5");
    const Complex a2 = f.a(2), a3 = f.a(3), a4 = f.a(4), a5 = f.a(5);
    return a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
}

Complex h22_grunsky(const GrunskyTable& table) {
    if (table.max_index < 3) throw InsufficientOrder("needs table indices through (3,3)");
    const Complex w11 = table.omega(1, 1);
    const Complex w13 = table.omega(1, 3);
    const Complex w33 = table.omega(3, 3);
    const Complex fs = 2.0 * w13 - w11 * w11;
    return 4.0 * w11 * w33 - (4.0 / 3.0) * w11 * w11 * w11 * w11 - fs * fs;
}

namespace {

Complex h31_from_table(const GrunskyTable& table, bool use_w13_square) {
    if (table.max_index < 5) throw InsufficientOrder("needs table indices through (3,5)");
    const Complex w11 = table.omega(1, 1);
    const Complex w13 = table.omega(1, 3);
    const Complex w33 = table.omega(3, 3);
    const Complex w15 = table.omega(1, 5);
    const Complex w35 = table.omega(3, 5);
    const Complex w11_2 = w11 * w11;
    const Complex w11_3 = w11_2 * w11;
    const Complex b2_core = 2.0 * w33 - (2.0 / 3.0) * w11_3;
    const Complex square = use_w13_square ? w13 * w13 : w15 * w15;
    return -2.0 * w13 * (4.0 * w13 * w13 - w11_2 * w11_2) - b2_core * b2_core +
           (2.0 * w35 + 5.0 * square) * (2.0 * w13 - w11_2);
}

}  // namespace

Complex h31_grunsky(const GrunskyTable& table) { return h31_from_table(table, true); }

Complex h31_grunsky_w15sq(const GrunskyTable& table) { return h31_from_table(table, false); }

}  // namespace schlicht
