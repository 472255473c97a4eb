#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmroot/harmonic.hpp"

namespace harmroot {

/// The four generating maps. Newton and Halley require an analytic target
/// (the map's g must be the constant 0).
enum class StepKind { Newton, Halley, HarmonicNewton, HarmonicHalley };

struct IterationOptions {
    double residual_tol = 1e-12;
    double step_tol = 1e-13;
    int max_iter = 64;
    double divergence_radius = 1e6;
};

enum class IterationStatus { Converged, MaxIterExceeded, Diverged, StepError };

/// Iterate sequence z_0..z_n with residuals |f(z_k)| (always the same length
/// as the iterates), the stopping status, and the accepted final point when
/// the iteration converged.
struct IterationTrace {
    std::vector<Complex> iterates;
    std::vector<double> residuals;
    IterationStatus status = IterationStatus::MaxIterExceeded;
    std::optional<Complex> final;
    std::string step_error;  // message when status == StepError

    /// Number of steps taken (iterates recorded after z_0).
    int steps() const { return static_cast<int>(iterates.size()) - 1; }
};

/// z - phi(z)/phi'(z). Throws NotLocallyUnivalent when phi'(z) = 0.
Complex newton_step(const AnalyticFn& phi, Complex z);

/// z - 2 phi phi' / (2 phi'^2 - phi phi''). Throws DegenerateDenominator.
Complex halley_step(const AnalyticFn& phi, Complex z);

/// z - N(z)/J(z) with N = conj(h') f - conj(g' f). Throws DegenerateJacobian.
Complex harmonic_newton_step(const HarmonicMap& f, Complex z);

/// z - A(z)/B(z), with
///   A = (conj(h') - conj(h'')/2 * conj(N)/J) f
///     - (conj(g') - conj(g'')/2 * conj(N)/J) conj(f)
///   B = |h' - h''/2 * N/J|^2 - |g' - g''/2 * N/J|^2
/// evaluated exactly as displayed (no algebraic rearrangement). Throws
/// DegenerateJacobian, and DegenerateDenominator when B = 0.
Complex harmonic_halley_step(const HarmonicMap& f, Complex z);

/// Single application of the chosen generating map. Newton/Halley require
/// f.g == 0 and act on f.h.
Complex apply_step(const HarmonicMap& f, StepKind kind, Complex z);

/// Fixed-point iteration of the chosen map from z0. Stops on residual
/// <= residual_tol or step <= step_tol*(1+|z|) (Converged), |z| beyond the
/// divergence radius or a non-finite iterate (Diverged), a throwing step
/// (StepError, trace retained up to that point), or max_iter.
IterationTrace iterate(const HarmonicMap& f, StepKind kind, Complex z0,
                       const IterationOptions& opts = {});

/// Empirical convergence order: median of log(e_{k+1}/e_k)/log(e_k/e_{k-1})
/// over the leading strictly-decreasing run of errors e_k = |z_k - root|
/// that stay above 100*eps. Absent when fewer than two ratios are available
/// or the trace did not converge.
std::optional<double> estimate_order(const IterationTrace& trace, Complex root);

/// Axis-aligned rectangle [x0,x1] x [y0,y1].
struct Window {
    double x0, y0, x1, y1;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool contains(Complex z) const {
        return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1;
    }
    /// Rectangle scaled about its center by `factor`.
    Window inflated(double factor) const;
};

/// Multi-start zero finding: iterates from a grid_n x grid_n grid of starts,
/// keeps converged finals with |f| <= 10*residual_tol inside the window
/// inflated by 10%, clusters them within distance 1e-8, and returns cluster
/// centroids sorted by (re, im). Deterministic for identical inputs
/// regardless of the thread budget.
std::vector<Complex> find_zeros(const HarmonicMap& f, StepKind kind,
                                const Window& window, int grid_n,
                                const IterationOptions& opts = {});

}  // namespace harmroot
