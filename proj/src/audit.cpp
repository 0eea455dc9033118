// Inequality-chain audit and auxiliary-function extremization.

#include "schlicht/audit.hpp"

#include <algorithm>
#include <cmath>

#include "schlicht/hankel.hpp"
#include "schlicht/optim.hpp"

namespace schlicht {

namespace {

constexpr double kDomainSlack = 1e-12;

double psi_s_ceiling(double t) { return std::sqrt(std::max(0.0, 1.0 - t * t) / 3.0); }

}  // namespace

double phi(double t) {
    if (t < -kDomainSlack || t > 1.0 + kDomainSlack)
        throw DomainError("phi is defined on [0, 1]");
    const double clamped = std::clamp(t, 0.0, 1.0);
    return 2.0 * (1.0 - clamped) + std::sqrt(3.0) * clamped * std::sqrt(1.0 - clamped);
}

double psi(double t, double s) {
    if (t < -kDomainSlack || t > 1.0 + kDomainSlack || s < -kDomainSlack)
        throw DomainError("psi needs 0 <= t <= 1 and s >= 0");
    const double radicand = 1.0 - t * t - 3.0 * s * s;
    if (radicand < -1e-9)
        throw DomainError("psi needs s <= sqrt((1 - t^2)/3)");
    return std::sqrt(std::max(0.0, radicand)) + std::sqrt(5.0) * t * s;
}

ExtremumReport maximize_phi() {
    ExtremumReport report;
    report.claimed = 2.0;
    report.grid_resolution = 1e-4;
    report.refined_tolerance = 1e-10;

    const int steps = 10000;
    double best_t = 0.0;
    double best_value = phi(0.0);
    bool monotone = true;
    double previous = best_value;
    for (int i = 1; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        const double value = phi(t);
        if (value - previous > 1e-12) monotone = false;
        previous = value;
        if (value > best_value) {
            best_value = value;
            best_t = t;
        }
    }

    const double lo = std::max(0.0, best_t - report.grid_resolution);
    const double hi = std::min(1.0, best_t + report.grid_resolution);
    const double refined_t = golden_section_max([](double t) { return phi(t); }, lo, hi,
                                                report.refined_tolerance);
    const double refined_value = phi(refined_t);

    if (refined_value >= best_value) {
        report.arg = {refined_t};
        report.value = refined_value;
    } else {
        report.arg = {best_t};
        report.value = best_value;
    }
    report.discrepancy = report.value - report.claimed;
    report.monotone_decreasing_on_grid = monotone;
    return report;
}

ExtremumReport maximize_psi() {
    ExtremumReport report;
    report.claimed = 1.0;
    report.grid_resolution = 1e-3;
    report.refined_tolerance = 1e-8;

    // Dense grid with the curved boundary s = sqrt((1-t^2)/3) sampled
    // exactly; constrained maxima are allowed to sit there.
    struct Candidate {
        double t, s, value;
    };
    std::vector<Candidate> top;
    auto consider = [&](double t, double s) {
        const double value = psi(t, s);
        if (top.size() < 5) {
            top.push_back({t, s, value});
            std::sort(top.begin(), top.end(),
                      [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
        } else if (value > top.back().value) {
            top.back() = {t, s, value};
            std::sort(top.begin(), top.end(),
                      [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
        }
    };

    const int steps = 1000;
    for (int i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        const double ceiling = psi_s_ceiling(t);
        for (double s = 0.0; s < ceiling; s += report.grid_resolution) consider(t, s);
        consider(t, ceiling);
    }

    double best_value = top.front().value;
    std::vector<double> best_arg = {top.front().t, top.front().s};

    // Refine from the best grid points; the objective clamps back into the
    // domain so the simplex can push against the boundary.
    auto clamped_negative_psi = [](std::span<const double> x) {
        const double t = std::clamp(x[0], 0.0, 1.0);
        const double s = std::clamp(x[1], 0.0, psi_s_ceiling(t));
        return -psi(t, s);
    };
    for (const Candidate& c : top) {
        const std::vector<double> start = {c.t, c.s};
        const NelderMeadResult r =
            nelder_mead(clamped_negative_psi, start, 0.01, 1e-12, 4000);
        const double t = std::clamp(r.x[0], 0.0, 1.0);
        const double s = std::clamp(r.x[1], 0.0, psi_s_ceiling(t));
        const double value = psi(t, s);
        if (value > best_value) {
            best_value = value;
            best_arg = {t, s};
        }
    }

    report.arg = best_arg;
    report.value = best_value;
    report.discrepancy = report.value - report.claimed;
    return report;
}

BoundTerms bound_terms(const GrunskyTable& table) {
    if (table.max_index < 5) throw InsufficientOrder("needs table indices through (3,5)");
    const Complex w11 = table.omega(1, 1);
    const Complex w13 = table.omega(1, 3);
    const Complex w33 = table.omega(3, 3);
    const Complex w15 = table.omega(1, 5);
    const Complex w35 = table.omega(3, 5);
    const Complex w11_2 = w11 * w11;
    const Complex w11_3 = w11_2 * w11;

    BoundTerms out;
    out.b1 = 2.0 * std::abs(w13) * std::abs(4.0 * w13 * w13 - w11_2 * w11_2);
    const double b2_sqrt = std::abs(2.0 * w33 - (2.0 / 3.0) * w11_3);
    out.b2 = b2_sqrt * b2_sqrt;
    const double fs = std::abs(2.0 * w13 - w11_2);
    out.b3 = std::abs(2.0 * w35 + 5.0 * w15 * w15) * fs;
    out.b3_identity_form = std::abs(2.0 * w35 + 5.0 * w13 * w13) * fs;
    return out;
}

const std::vector<std::string>& sound_chain_residual_names() {
    static const std::vector<std::string> names = {
        "h22_triangle_bound", "fekete_szego_unit",  "w13_sq_bound",
        "w33_third",          "w33_sq_sharp",       "b2_sqrt_triangle",
        "odd_grunsky_q3",     "w15_bound",          "b3_core_sq_bound",
        "b3_core_sq_ceiling", "b3_bound",           "b1_phi_bound",
        "b1_bound",           "b2_sqrt_recomputed", "decomposition_dominance",
        "h22_headline_slack", "h31_headline_slack",
    };
    return names;
}

AuditContext AuditContext::make() { return AuditContext{maximize_phi(), maximize_psi()}; }

const AuditContext& AuditContext::shared() {
    static const AuditContext context = make();
    return context;
}

AuditReport audit_chain(const SchlichtFunction& f) { return audit_chain(f, AuditContext::shared()); }

AuditReport audit_chain(const SchlichtFunction& f, const AuditContext& context) {
    if (f.order() < 6)
        throw InsufficientOrder("audit needs series order >= 6 for the (3,5) table entries");

    AuditReport report;
    report.function_id = f.label;
    report.certified = f.certified;

    const GrunskyTable table = grunsky_table(f, 5);
    report.h22 = h22_direct(f);
    report.h31 = h31_direct(f);
    report.h22_from_table = h22_grunsky(table);
    report.h31_from_table = h31_grunsky(table);
    report.h31_from_table_w15sq = h31_grunsky_w15sq(table);

    const BoundTerms terms = bound_terms(table);
    report.b1 = terms.b1;
    report.b2 = terms.b2;
    report.b3 = terms.b3;
    report.b3_identity_form = terms.b3_identity_form;
    report.a5_residual_w15sq = verify_coefficient_relations(f, table).a5_residual_w15sq;

    const Complex w11 = table.omega(1, 1);
    const Complex w13 = table.omega(1, 3);
    const Complex w33 = table.omega(3, 3);
    const Complex w15 = table.omega(1, 5);
    const Complex w35 = table.omega(3, 5);
    const double aw11 = std::abs(w11);
    const double aw13 = std::abs(w13);
    const double aw33 = std::abs(w33);
    const double aw15 = std::abs(w15);
    const Complex fs = 2.0 * w13 - w11 * w11;
    const double afs = std::abs(fs);
    const Complex b2_core = 2.0 * w33 - (2.0 / 3.0) * w11 * w11 * w11;
    const double b3_core_sq = std::norm(2.0 * w35 + 5.0 * w15 * w15);

    auto& m = report.chain_residuals;
    m["h22_triangle_bound"] =
        (4.0 * aw11 * aw33 + (4.0 / 3.0) * std::pow(aw11, 4) + afs * afs) - std::abs(report.h22);
    m["fekete_szego_unit"] = 1.0 - afs;
    m["w13_sq_bound"] = (1.0 - aw11 * aw11) / 3.0 - aw13 * aw13;
    m["w33_third"] = 1.0 / 3.0 - aw33;
    m["w33_sq_sharp"] = (1.0 - 3.0 * aw13 * aw13) / 9.0 - aw33 * aw33;
    m["b2_sqrt_triangle"] = (2.0 * aw15 + 2.0 * aw11 * aw13) - std::abs(b2_core);
    m["odd_grunsky_q3"] = 1.0 - (aw11 * aw11 + 3.0 * aw13 * aw13 + 5.0 * aw15 * aw15);
    m["w15_bound"] =
        std::sqrt(std::max(0.0, 1.0 - aw11 * aw11 - 3.0 * aw13 * aw13) / 5.0) - aw15;
    m["b3_core_sq_bound"] = (5.0 * aw15 * aw15 + 4.0 / 15.0) - b3_core_sq;
    m["b3_core_sq_ceiling"] = 19.0 / 15.0 - b3_core_sq;
    m["b3_bound"] = std::sqrt(19.0 / 15.0) - report.b3;
    m["b1_phi_bound"] = (2.0 / 3.0) * phi(std::min(1.0, aw11 * aw11)) - report.b1;
    m["b1_bound"] = 4.0 / 3.0 - report.b1;
    // The 4/5 form relies on the claimed psi maximum of 1 and is recorded
    // without being counted sound; the recomputed form uses the extremizer.
    m["b2_bound_claimed"] = 4.0 / 5.0 - report.b2;
    m["b2_sqrt_recomputed"] =
        (2.0 / std::sqrt(5.0)) * context.psi_extremum.value - std::abs(b2_core);
    m["h22_headline_slack"] = 11.0 / 3.0 - std::abs(report.h22);
    m["h31_headline_slack"] = (32.0 + std::sqrt(285.0)) / 15.0 - std::abs(report.h31);
    m["decomposition_dominance"] =
        (report.b1 + report.b2 + report.b3_identity_form) - std::abs(report.h31_from_table);
    m["decomposition_dominance_w15sq"] =
        (report.b1 + report.b2 + report.b3) - std::abs(report.h31_from_table);
    return report;
}

}  // namespace schlicht
