#pragma once

#include <optional>

#include "harmroot/jets.hpp"

namespace harmroot {

/// Planar harmonic mapping f = h + conj(g) with h, g analytic. The pair is
/// taken exactly as supplied; the additive-constant ambiguity of the
/// decomposition is the caller's to resolve.
struct HarmonicMap {
    AnalyticFn h;
    AnalyticFn g = AnalyticFn();  // constant 0 => f is analytic

    /// True when g is literally the constant 0, i.e. f reduces to h.
    bool is_analytic() const { return g.is_constant_zero(); }
};

/// Sign classification of the Jacobian at a point.
enum class Orientation { Preserving, Reversing, Degenerate };

/// Relative tolerance declaring the Jacobian zero: |J| <= tol * (|h'|^2 + |g'|^2).
inline constexpr double kJacobianZeroRelTol = 1e-14;

/// Pointwise data of a harmonic map: the value, the 3-jets of both analytic
/// parts, the Jacobian |h'|^2 - |g'|^2, and the dilatation g'/h' (absent when
/// h'(z) = 0).
struct HarmonicJet {
    Complex z;
    Complex f;
    Jet3 hjet;
    Jet3 gjet;
    double jacobian;
    std::optional<Complex> dilatation;

    /// Scale |h'|^2 + |g'|^2 used by the degeneracy test.
    double derivative_scale() const;

    /// Orientation of the map at z per the relative tolerance above.
    Orientation orientation() const;
};

/// h(z) + conj(g(z)).
Complex eval_map(const HarmonicMap& f, Complex z);

HarmonicJet map_jets(const HarmonicMap& f, Complex z);

Orientation orientation(const HarmonicMap& f, Complex z);

/// The conjugate map conj(f) = g + conj(h); swaps the roles of h and g.
HarmonicMap conjugate_map(const HarmonicMap& f);

}  // namespace harmroot
