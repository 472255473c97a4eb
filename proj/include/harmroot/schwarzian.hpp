#pragma once

#include "harmroot/harmonic.hpp"
#include "harmroot/jets.hpp"

namespace harmroot {

/// Linear fractional transformation z -> (az + b)/(cz + d), ad - bc != 0.
struct MobiusTransform {
    Complex a, b, c, d;

    /// Throws DegenerateMobius when |ad - bc| <= 1e-14 * (|a||d| + |b||c|).
    MobiusTransform(Complex a, Complex b, Complex c, Complex d);

    Complex operator()(Complex z) const;

    /// Expression tree for the transform itself (with phi = z).
    AnalyticFn as_expression() const;
};

/// Tags which operator produced a reported value.
enum class OperatorKind { P, S, PH, SH };

/// A tagged operator evaluation, used in reports.
struct OperatorValue {
    Complex value;
    Complex point;
    OperatorKind kind;
};

/// P(phi) = phi''/phi'. Throws NotLocallyUnivalent when phi'(z) = 0.
Complex pre_schwarzian(const AnalyticFn& phi, Complex z);

/// S(phi) = phi'''/phi' - (3/2)(phi''/phi')^2.
Complex schwarzian(const AnalyticFn& phi, Complex z);

/// P_H(f) = h''/h' - conj(w) w' / (1 - |w|^2) with dilatation w = g'/h'.
/// Orientation-reversing inputs are evaluated on the conjugate map, which
/// leaves the operator unchanged. Throws DegenerateJacobian when J(f,z) = 0
/// and NotLocallyUnivalent when the orientation-preserving representative
/// has h'(z) = 0.
Complex harmonic_pre_schwarzian(const HarmonicMap& f, Complex z);

/// S_H(f) = S(h) + conj(w)/(1-|w|^2) * (h''/h' * w' - w'')
///          - (3/2) * (w' conj(w) / (1 - |w|^2))^2.
/// Same degeneracy and orientation handling as the pre-Schwarzian.
Complex harmonic_schwarzian(const HarmonicMap& f, Complex z);

/// Expression tree for (a*phi + b)/(c*phi + d).
AnalyticFn mobius_post_compose(const MobiusTransform& M, const AnalyticFn& phi);

}  // namespace harmroot
