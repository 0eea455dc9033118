// Mechanical audit of the bound chain behind the H_2(2) and H_3(1)
// estimates: every intermediate inequality is evaluated as a named residual
// (bound minus quantity), and the two auxiliary scalar functions that feed
// the chain are extremized numerically and compared against their claimed
// maxima. The audit asserts nothing; it measures. Callers decide what a
// negative residual or a maximum mismatch means.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schlicht/families.hpp"
#include "schlicht/grunsky.hpp"

namespace schlicht {

/// phi(t) = 2(1 - t) + sqrt(3) t sqrt(1 - t) on [0, 1].
double phi(double t);

/// psi(t, s) = sqrt(1 - t^2 - 3 s^2) + sqrt(5) t s on the region
/// 0 <= t <= 1, 0 <= s <= sqrt((1 - t^2)/3). Boundary points are accepted
/// with a 1e-12 slack and the radicand clamped at zero.
double psi(double t, double s);

/// Result of a grid-then-refine extremization, together with the maximum the
/// chain claims for the same function. `discrepancy` = value - claimed; a
/// nonzero discrepancy is reported, never "corrected".
struct ExtremumReport {
    std::vector<double> arg;
    double value = 0.0;
    double claimed = 0.0;
    double discrepancy = 0.0;
    double grid_resolution = 0.0;
    double refined_tolerance = 0.0;
    /// Set for the 1-D objective: true iff all forward differences on the
    /// grid were <= 1e-12.
    std::optional<bool> monotone_decreasing_on_grid;
};

/// Grid at step 1e-4, golden-section refinement to 1e-10, claimed max 2.
ExtremumReport maximize_phi();

/// Grid at step 1e-3 per variable with the curved boundary sampled exactly,
/// Nelder-Mead refinement from the best five grid points to 1e-8, claimed
/// max 1.
ExtremumReport maximize_psi();

/// The three modulus products that dominate |H_3(1)| by the triangle
/// inequality applied to its table decomposition:
///   b1 = 2 |w13| |4 w13^2 - w11^4|
///   b2 = |2 w33 - (2/3) w11^3|^2
///   b3 = |2 w35 + 5 w15^2| |2 w13 - w11^2|
/// b3_identity_form replaces 5 w15^2 by 5 w13^2, matching the decomposition
/// that actually reproduces H_3(1); dominance is guaranteed only for it.
struct BoundTerms {
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double b3_identity_form = 0.0;
};

BoundTerms bound_terms(const GrunskyTable& table);

struct AuditReport {
    std::string function_id;
    bool certified = false;
    Complex h22{};
    Complex h31{};
    Complex h22_from_table{};
    Complex h31_from_table{};
    Complex h31_from_table_w15sq{};
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double b3_identity_form = 0.0;
    Complex a5_residual_w15sq{};
    /// Named residuals, each oriented as bound - quantity (>= 0 means the
    /// step holds). See sound_chain_residual_names() for the subset that is
    /// guaranteed for certified univalent inputs.
    std::map<std::string, double> chain_residuals;
};

/// The residuals that must be non-negative (up to numerical slack) whenever
/// the input really is univalent. Excludes the two informational entries
/// b2_bound_claimed and decomposition_dominance_w15sq, whose defining
/// constants are under audit rather than established.
const std::vector<std::string>& sound_chain_residual_names();

/// Shared extremizer results so a batch audit runs them once.
struct AuditContext {
    ExtremumReport phi_extremum;
    ExtremumReport psi_extremum;

    static AuditContext make();
    static const AuditContext& shared();
};

/// Full chain evaluation on one function. Uncertified inputs are audited
/// anyway and flagged in the report. Requires order(f) >= 6.
AuditReport audit_chain(const SchlichtFunction& f, const AuditContext& context);
AuditReport audit_chain(const SchlichtFunction& f);

}  // namespace schlicht
