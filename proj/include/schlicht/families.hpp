// Parametric families of normalized functions. Constructors either certify
// membership in a univalent class by construction or wrap arbitrary
// coefficients with an explicit non-certified flag.
#pragma once

#include <string>
#include <vector>

#include "schlicht/series.hpp"

namespace schlicht {

enum class FamilyTag {
    identity,
    koebe,
    kfold_koebe,
    herglotz_starlike,
    convex,
    raw,
};

std::string family_name(FamilyTag tag);

/// A normalized function a_1 z + a_2 z^2 + ... with a_0 = 0, a_1 = 1 exactly,
/// plus provenance. `certified` is true only for constructor paths that
/// guarantee univalence (starlike or convex by construction).
struct SchlichtFunction {
    TruncatedSeries coeffs;
    FamilyTag family_tag = FamilyTag::raw;
    std::vector<double> params;
    bool certified = false;
    std::string label;

    int order() const { return coeffs.order(); }
    Complex a(int n) const { return coeffs.coeff(n); }
};

/// Atomic Herglotz data: weights lambda_k >= 0 summing to 1 and unimodular
/// points x_k. Generates starlike functions through z f'/f = sum lambda_k
/// (1 + x_k z)/(1 - x_k z).
struct HerglotzAtoms {
    std::vector<double> weights;
    std::vector<Complex> points;

    /// Throws InvalidAtoms unless the invariants hold (sum and modulus
    /// within 1e-12).
    void validate() const;
};

/// z + 0 z^2 + ...; trivially a member of every class considered here.
SchlichtFunction identity_function(int order);

/// Rotated Koebe map: a_n = n e^{i (n-1) theta}.
SchlichtFunction koebe_rotation(double theta, int order);

/// z / (1 - z^k)^{2/k}; k = 1 is the Koebe map. Coefficients come from the
/// binomial series in z^k, so a_n = 0 unless n = 1 mod k.
SchlichtFunction kfold_koebe(int k, int order);

/// Starlike function generated by the atom data; certified univalent.
SchlichtFunction starlike_from_herglotz(const HerglotzAtoms& atoms, int order);

/// Alexander transform a_n -> a_n / n; maps certified starlike input to a
/// certified convex output. Throws NotCertified on uncertified input.
SchlichtFunction convex_from_starlike(const SchlichtFunction& g, int order);

/// Wrap coefficients (a_1, a_2, ...) given with a_1 = 1; always uncertified.
/// The list is zero-padded (or cut) to the requested order. No univalence
/// screening happens here by design; downstream reports carry the flag.
SchlichtFunction raw_coefficients(const std::vector<Complex>& a, int order);

/// Conjugate every coefficient; preserves certification (class membership is
/// stable under reflection).
SchlichtFunction conjugate(const SchlichtFunction& f);

}  // namespace schlicht
