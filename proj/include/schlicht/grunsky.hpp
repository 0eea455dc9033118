// Grunsky coefficients of the square-root transform: table construction,
// the coefficient identities tying a_2..a_5 to the table, and residuals of
// the quadratic Grunsky inequality under arbitrary probe vectors.
#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schlicht/families.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

/// Grunsky coefficients w_{r,s} of the odd transform sqrt(f(z^2)), keyed by
/// the original odd indices r = 2p-1, s = 2q-1. Both orders of every pair
/// are stored, read independently off the bivariate log, so the symmetry
/// w_{r,s} = w_{s,r} is a checkable property rather than a storage artifact.
struct GrunskyTable {
    std::map<std::pair<int, int>, Complex> entries;
    int max_index = 0;
    std::string source;

    Complex omega(int r, int s) const;
    /// Max |w_{r,s} - w_{s,r}| over stored pairs.
    double symmetry_defect() const;
};

/// The odd square-root transform z (f(z^2)/z^2)^{1/2}, returned at doubled
/// truncation 2 order(f) - 1. Even-index coefficients are exactly zero.
TruncatedSeries sqrt_transform(const SchlichtFunction& f);

/// Build the table for all odd index pairs r, s <= max_index by taking the
/// bivariate log of the divided-difference kernel of the square-root
/// transform. Requires order(f) >= max_index + 1. Entries of the log at odd
/// total degree must vanish for an odd function; this is checked and a
/// violation reports a defect in the series pipeline (logic_error).
GrunskyTable grunsky_table(const SchlichtFunction& f, int max_index);

/// Residuals of the five identities expressing a_2..a_5 through the table.
///
/// residuals[0..4] use the forms that close to zero identically for every
/// normalized series (univalent or not); tests exercise this on random
/// coefficient data. For the a_5 identity (residuals[3]) the closing form
/// carries the term 5 w13^2. A circulating variant of that identity has
/// 5 w15^2 in its place; it is generically nonzero, so its residual is
/// computed separately and surfaced in every report rather than asserted.
struct CoefficientRelations {
    std::array<Complex, 5> residuals;
    Complex a5_residual_w15sq;

    double max_residual_modulus() const;
};

CoefficientRelations verify_coefficient_relations(const SchlichtFunction& f,
                                                  const GrunskyTable& table);

/// Test vector for the quadratic Grunsky inequality: x = (x_1, x_3, x_5, ...)
/// hits odd rows, outer_terms truncates the weighted sum over columns.
struct InequalityProbe {
    std::vector<Complex> x;
    int outer_terms = 0;
};

/// RHS - LHS of the truncated inequality
///   sum_{q<=Q} (2q-1) |sum_p w_{2p-1,2q-1} x_{2p-1}|^2  <=  sum_p |x_{2p-1}|^2/(2p-1).
/// The truncated LHS only grows with Q, so a genuine univalent source keeps
/// this non-negative at every truncation.
double grunsky_residual(const GrunskyTable& table, const InequalityProbe& probe);

/// The two probes (1,0,0) and (0,1,0) used to pin the entry bounds, at the
/// largest outer truncation the table supports.
std::vector<InequalityProbe> canonical_probes(const GrunskyTable& table);

}  // namespace schlicht
