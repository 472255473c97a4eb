#pragma once

#include <functional>
#include <string>
#include <vector>

#include "harmroot/harmonic.hpp"

namespace harmroot {

/// Bivariate Taylor coefficients of a smooth plane map F around a center:
/// F(center + d) ~ sum c[j][k] d^j conj(d)^k over j + k <= degree.
/// Raw Wirtinger derivatives follow as d^m F/dz^m = m! c[m][0] and
/// dF/dconj(z) = c[0][1].
struct WirtingerCoeffs {
    Complex center;
    int degree = 0;
    std::vector<std::vector<Complex>> c;  // (degree+1)^2 table, j then k
    double residual_norm = 0.0;           // RMS fit residual over the samples

    Complex coeff(int j, int k) const { return c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; }
    Complex f_z() const { return coeff(1, 0); }
    Complex f_zz() const { return 2.0 * coeff(2, 0); }
    Complex f_zzz() const { return 6.0 * coeff(3, 0); }
    Complex f_zbar() const { return coeff(0, 1); }
};

/// One measured-vs-expected line of an identity report. Informational lines
/// (asserted == false) are recorded but never fail the report.
struct IdentityCheck {
    std::string label;
    Complex measured;
    Complex expected;
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool asserted = true;
    bool passed = true;
};

struct FitDiagnostics {
    double radius = 0.0;
    int degree = 0;
    double residual_norm = 0.0;
};

struct IdentityReport {
    std::string map_kind;
    Complex center;
    std::vector<IdentityCheck> checks;
    bool passed = false;
    FitDiagnostics fit;
    bool auto_conjugated = false;  // operator evaluated on the conjugate map
};

/// Least-squares bivariate Taylor fit of F on three concentric circles
/// (radii r, 2r/3, r/3) with 4*(degree+1) equally spaced angles each.
/// Columns are scaled by powers of the radius before the orthogonal solve;
/// throws IllConditionedFit when the normal-equations condition estimate of
/// the solved system exceeds 1e12.
WirtingerCoeffs wirtinger_fit(const std::function<Complex(Complex)>& F,
                              Complex center, double radius, int degree);

/// Fits the harmonic Newton map around the zero alpha and compares
/// {F(alpha)-alpha, F_z, F_zz} against {0, 0, P_H(f)(alpha)} at tolerances
/// {1e-8, 1e-6, 1e-4}. F_zbar is reported informationally. Throws NotAZero
/// when |f(alpha)| > 1e-10.
IdentityReport verify_newton_identities(const HarmonicMap& f, Complex alpha,
                                        double radius = 1e-2, int degree = 4);

/// Fits the harmonic Halley map around the zero alpha and compares
/// {F(alpha)-alpha, F_z, F_zz, F_zzz} against {0, 0, 0, -S_H(f)(alpha)} at
/// tolerances {1e-8, 1e-6, 1e-5, 1e-3}; the last is relative when |S_H| > 1.
IdentityReport verify_halley_identities(const HarmonicMap& f, Complex alpha,
                                        double radius = 1e-2, int degree = 4);

/// Cross-checks the closed forms against their defining Wirtinger
/// expressions: P_H as the z-derivative of log J (fitted numerically) and
/// S_H as d/dz(P_H) - P_H^2/2 with the derivative fitted numerically.
/// Tolerance 1e-6 for both.
IdentityReport operators_crosscheck(const HarmonicMap& f, Complex z,
                                    double radius = 1e-2);

}  // namespace harmroot
