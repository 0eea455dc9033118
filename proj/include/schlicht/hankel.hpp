// Hankel determinants of Taylor coefficients: the general q x q determinant
// starting at a_n, the closed forms for H_2(2) and H_3(1), and their
// expressions through the Grunsky table.
#pragma once

#include <string>

#include "schlicht/families.hpp"
#include "schlicht/grunsky.hpp"

namespace schlicht {

struct HankelValue {
    int q = 0;
    int n = 0;
    Complex value{};
    std::string source;
};

/// Determinant of the q x q matrix with entry (i, j) = a_{n+i+j}, computed by
/// elimination with partial pivoting. Requires order(f) >= n + 2q - 2.
HankelValue hankel_det(const SchlichtFunction& f, int q, int n);

/// a2 a4 - a3^2.
Complex h22_direct(const SchlichtFunction& f);

/// a3 (a2 a4 - a3^2) - a4 (a4 - a2 a3) + a5 (a3 - a2^2).
Complex h31_direct(const SchlichtFunction& f);

/// H_2(2) through the table: 4 w11 w33 - (4/3) w11^4 - (2 w13 - w11^2)^2.
/// An identity against h22_direct for every normalized series.
Complex h22_grunsky(const GrunskyTable& table);

/// H_3(1) through the table:
///   -2 w13 (4 w13^2 - w11^4) - (2 w33 - (2/3) w11^3)^2
///   + (2 w35 + 5 w13^2)(2 w13 - w11^2).
/// This is the variant that reproduces h31_direct identically; see
/// h31_grunsky_w15sq for the circulating variant with 5 w15^2.
Complex h31_grunsky(const GrunskyTable& table);

/// Same shape with 5 w15^2 in the last product. Not an identity: it differs
/// from h31_direct by 5 (w13^2 - w15^2)(2 w13 - w11^2), which tests pin down
/// on functions with w15 != 0. Kept because the quantity |2 w35 + 5 w15^2|
/// is what the probe-based bound chain controls; audits report both.
Complex h31_grunsky_w15sq(const GrunskyTable& table);

}  // namespace schlicht
