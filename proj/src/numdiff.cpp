#include "harmroot/numdiff.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>

#include "harmroot/iteration.hpp"
#include "harmroot/schwarzian.hpp"

namespace harmroot {

namespace {

struct Monomial {
    int j, k;
};

// Column order: total degree ascending, then j descending within a degree.
std::vector<Monomial> monomials(int degree) {
    std::vector<Monomial> out;
    for (int t = 0; t <= degree; ++t) {
        for (int j = t; j >= 0; --j) out.push_back({j, t - j});
    }
    return out;
}

}  // namespace

WirtingerCoeffs wirtinger_fit(const std::function<Complex(Complex)>& F,
                              Complex center, double radius, int degree) {
    if (!(radius > 0.0)) throw Error("wirtinger_fit requires radius > 0");
    if (degree < 1 || degree > 6) throw Error("wirtinger_fit requires 1 <= degree <= 6");

    const std::vector<Monomial> cols = monomials(degree);
    const int angles = 4 * (degree + 1);
    const double ring_scales[3] = {1.0, 2.0 / 3.0, 1.0 / 3.0};
    const int rows = 3 * angles;

    Eigen::MatrixXcd a(rows, static_cast<Eigen::Index>(cols.size()));
    Eigen::VectorXcd b(rows);
    int row = 0;
    for (double ring : ring_scales) {
        for (int m = 0; m < angles; ++m) {
            const double theta = 2.0 * std::numbers::pi * m / angles;
            // Scaled displacement delta/radius; the unscaled delta only
            // enters the sample point itself.
            const Complex u = ring * Complex(std::cos(theta), std::sin(theta));
            b(row) = F(center + radius * u);
            for (std::size_t i = 0; i < cols.size(); ++i) {
                a(row, static_cast<Eigen::Index>(i)) =
                    std::pow(u, cols[i].j) * std::pow(std::conj(u), cols[i].k);
            }
            ++row;
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
    const auto r_diag = qr.matrixR().diagonal().cwiseAbs().eval();
    const double r_max = r_diag.maxCoeff();
    const double r_min = r_diag.minCoeff();
    const double cond = r_min > 0.0 ? r_max / r_min
                                    : std::numeric_limits<double>::infinity();
    if (cond * cond > 1e12) {
        throw IllConditionedFit(
            "Wirtinger fit: normal-equations condition estimate " +
            std::to_string(cond * cond) + " exceeds 1e12");
    }

    const Eigen::VectorXcd x = qr.solve(b);
    const double rms = std::sqrt((a * x - b).squaredNorm() / rows);

    WirtingerCoeffs out;
    out.center = center;
    out.degree = degree;
    out.residual_norm = rms;
    out.c.assign(static_cast<std::size_t>(degree) + 1,
                 std::vector<Complex>(static_cast<std::size_t>(degree) + 1));
    for (std::size_t i = 0; i < cols.size(); ++i) {
        // Undo the column scaling: coefficient of delta^j conj(delta)^k.
        out.c[static_cast<std::size_t>(cols[i].j)][static_cast<std::size_t>(cols[i].k)] =
            x(static_cast<Eigen::Index>(i)) / std::pow(radius, cols[i].j + cols[i].k);
    }
    return out;
}

namespace {

void require_zero(const HarmonicMap& f, Complex alpha) {
    const double residual = std::abs(eval_map(f, alpha));
    if (residual > 1e-10) {
        throw NotAZero("verification point has |f(alpha)| = " +
                       std::to_string(residual) + " > 1e-10");
    }
}

IdentityCheck asserted_check(std::string label, Complex measured, Complex expected,
                             double tolerance) {
    IdentityCheck c;
    c.label = std::move(label);
    c.measured = measured;
    c.expected = expected;
    c.abs_error = std::abs(measured - expected);
    c.tolerance = tolerance;
    c.asserted = true;
    c.passed = c.abs_error <= tolerance;
    return c;
}

IdentityCheck info_check(std::string label, Complex measured) {
    IdentityCheck c;
    c.label = std::move(label);
    c.measured = measured;
    c.expected = Complex{};
    c.abs_error = 0.0;
    c.tolerance = 0.0;
    c.asserted = false;
    c.passed = true;
    return c;
}

void finalize(IdentityReport& report, const WirtingerCoeffs& fit, double radius,
              int degree) {
    report.fit = {radius, degree, fit.residual_norm};
    report.passed = true;
    for (const IdentityCheck& c : report.checks) {
        if (c.asserted && !c.passed) report.passed = false;
    }
}

}  // namespace

IdentityReport verify_newton_identities(const HarmonicMap& f, Complex alpha,
                                        double radius, int degree) {
    require_zero(f, alpha);
    const Complex ph = harmonic_pre_schwarzian(f, alpha);

    const WirtingerCoeffs fit = wirtinger_fit(
        [&](Complex z) { return harmonic_newton_step(f, z); }, alpha, radius, degree);

    IdentityReport report;
    report.map_kind = "harmonic_newton";
    report.center = alpha;
    report.auto_conjugated = orientation(f, alpha) == Orientation::Reversing;
    report.checks.push_back(
        asserted_check("F(alpha)-alpha", fit.coeff(0, 0) - alpha, Complex{}, 1e-8));
    report.checks.push_back(asserted_check("F_z(alpha)", fit.f_z(), Complex{}, 1e-6));
    report.checks.push_back(asserted_check("F_zz(alpha)", fit.f_zz(), ph, 1e-4));
    report.checks.push_back(info_check("F_zbar(alpha)", fit.f_zbar()));
    finalize(report, fit, radius, degree);
    return report;
}

IdentityReport verify_halley_identities(const HarmonicMap& f, Complex alpha,
                                        double radius, int degree) {
    require_zero(f, alpha);
    const Complex sh = harmonic_schwarzian(f, alpha);

    const WirtingerCoeffs fit = wirtinger_fit(
        [&](Complex z) { return harmonic_halley_step(f, z); }, alpha, radius, degree);

    const double zzz_tol = 1e-3 * std::max(1.0, std::abs(sh));

    IdentityReport report;
    report.map_kind = "harmonic_halley";
    report.center = alpha;
    report.auto_conjugated = orientation(f, alpha) == Orientation::Reversing;
    report.checks.push_back(
        asserted_check("F(alpha)-alpha", fit.coeff(0, 0) - alpha, Complex{}, 1e-8));
    report.checks.push_back(asserted_check("F_z(alpha)", fit.f_z(), Complex{}, 1e-6));
    report.checks.push_back(asserted_check("F_zz(alpha)", fit.f_zz(), Complex{}, 1e-5));
    report.checks.push_back(asserted_check("F_zzz(alpha)", fit.f_zzz(), -sh, zzz_tol));
    report.checks.push_back(info_check("F_zbar(alpha)", fit.f_zbar()));
    finalize(report, fit, radius, degree);
    return report;
}

IdentityReport operators_crosscheck(const HarmonicMap& f, Complex z, double radius) {
    constexpr int kDegree = 4;

    const Complex ph_closed = harmonic_pre_schwarzian(f, z);
    const Complex sh_closed = harmonic_schwarzian(f, z);

    // P_H as the z-derivative of log J. log|J| keeps the map real-valued on
    // orientation-reversing patches, where J < 0; the derivative agrees.
    const WirtingerCoeffs log_j_fit = wirtinger_fit(
        [&](Complex w) {
            const HarmonicJet jets = map_jets(f, w);
            if (jets.orientation() == Orientation::Degenerate) {
                throw DegenerateJacobian(
                    "operators_crosscheck: Jacobian vanishes on the fit disk");
            }
            return Complex(std::log(std::abs(jets.jacobian)), 0.0);
        },
        z, radius, kDegree);

    // S_H from the defining expression: d/dz of the closed-form P_H map,
    // minus half the squared closed form at the center.
    const WirtingerCoeffs ph_fit = wirtinger_fit(
        [&](Complex w) { return harmonic_pre_schwarzian(f, w); }, z, radius, kDegree);

    const Complex ph_numeric = log_j_fit.f_z();
    const Complex sh_numeric = ph_fit.f_z() - 0.5 * ph_closed * ph_closed;

    IdentityReport report;
    report.map_kind = "operators_crosscheck";
    report.center = z;
    report.auto_conjugated = orientation(f, z) == Orientation::Reversing;
    report.checks.push_back(asserted_check("P_H", ph_numeric, ph_closed, 1e-6));
    report.checks.push_back(asserted_check("S_H", sh_numeric, sh_closed, 1e-6));
    finalize(report, log_j_fit, radius, kDegree);
    report.fit.residual_norm = std::max(log_j_fit.residual_norm, ph_fit.residual_norm);
    return report;
}

}  // namespace harmroot
