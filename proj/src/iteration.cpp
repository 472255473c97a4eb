#include "harmroot/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace harmroot {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_analytic(const HarmonicMap& f, const char* method) {
    if (!f.is_analytic()) {
        throw Error(std::string(method) +
                    " requires an analytic target (g must be the constant 0)");
    }
}

// N and J at a point, shared by both harmonic steps.
struct NewtonData {
    HarmonicJet jets;
    Complex n;
    double j;
};

NewtonData newton_data(const HarmonicMap& f, Complex z, const char* method) {
    NewtonData d{map_jets(f, z), {}, 0.0};
    d.j = d.jets.jacobian;
    if (std::abs(d.j) <= kJacobianZeroRelTol * d.jets.derivative_scale()) {
        throw DegenerateJacobian(std::string(method) +
                                 ": Jacobian vanishes at the evaluation point");
    }
    d.n = std::conj(d.jets.hjet.d1) * d.jets.f - std::conj(d.jets.gjet.d1 * d.jets.f);
    return d;
}

}  // namespace

Complex newton_step(const AnalyticFn& phi, Complex z) {
    const Jet3 j = phi.jets(z);
    if (j.d1 == Complex{}) {
        throw NotLocallyUnivalent("Newton step at a critical point of phi");
    }
    return z - j.d0 / j.d1;
}

Complex halley_step(const AnalyticFn& phi, Complex z) {
    const Jet3 j = phi.jets(z);
    const Complex denom = 2.0 * j.d1 * j.d1 - j.d0 * j.d2;
    if (denom == Complex{}) {
        throw DegenerateDenominator("Halley step with vanishing denominator");
    }
    return z - 2.0 * j.d0 * j.d1 / denom;
}

Complex harmonic_newton_step(const HarmonicMap& f, Complex z) {
    const NewtonData d = newton_data(f, z, "harmonic Newton step");
    return z - d.n / d.j;
}

Complex harmonic_halley_step(const HarmonicMap& f, Complex z) {
    const NewtonData d = newton_data(f, z, "harmonic Halley step");
    const Jet3& h = d.jets.hjet;
    const Jet3& g = d.jets.gjet;
    const Complex fval = d.jets.f;
    const Complex n_over_j = d.n / d.j;
    const Complex nbar_over_j = std::conj(d.n) / d.j;

    const Complex a = (std::conj(h.d1) - 0.5 * std::conj(h.d2) * nbar_over_j) * fval -
                      (std::conj(g.d1) - 0.5 * std::conj(g.d2) * nbar_over_j) *
                          std::conj(fval);
    const double b = std::norm(h.d1 - 0.5 * h.d2 * n_over_j) -
                     std::norm(g.d1 - 0.5 * g.d2 * n_over_j);
    if (b == 0.0) {
        throw DegenerateDenominator("harmonic Halley step with vanishing B(z)");
    }
    return z - a / b;
}

Complex apply_step(const HarmonicMap& f, StepKind kind, Complex z) {
    switch (kind) {
        case StepKind::Newton:
            require_analytic(f, "Newton");
            return newton_step(f.h, z);
        case StepKind::Halley:
            require_analytic(f, "Halley");
            return halley_step(f.h, z);
        case StepKind::HarmonicNewton:
            return harmonic_newton_step(f, z);
        case StepKind::HarmonicHalley:
            return harmonic_halley_step(f, z);
    }
    throw Error("unknown step kind");
}

IterationTrace iterate(const HarmonicMap& f, StepKind kind, Complex z0,
                       const IterationOptions& opts) {
    IterationTrace trace;
    trace.iterates.push_back(z0);
    trace.residuals.push_back(std::abs(eval_map(f, z0)));

    if (trace.residuals.back() <= opts.residual_tol) {
        trace.status = IterationStatus::Converged;
        trace.final = z0;
        return trace;
    }
    if (!finite(z0) || std::abs(z0) > opts.divergence_radius) {
        trace.status = IterationStatus::Diverged;
        return trace;
    }

    Complex z = z0;
    for (int n = 0; n < opts.max_iter; ++n) {
        Complex next;
        try {
            next = apply_step(f, kind, z);
        } catch (const Error& err) {
            trace.status = IterationStatus::StepError;
            trace.step_error = err.what();
            return trace;
        }
        if (!finite(next)) {
            trace.status = IterationStatus::Diverged;
            return trace;
        }
        trace.iterates.push_back(next);
        trace.residuals.push_back(std::abs(eval_map(f, next)));

        if (trace.residuals.back() <= opts.residual_tol ||
            std::abs(next - z) <= opts.step_tol * (1.0 + std::abs(next))) {
            trace.status = IterationStatus::Converged;
            trace.final = next;
            return trace;
        }
        if (std::abs(next) > opts.divergence_radius) {
            trace.status = IterationStatus::Diverged;
            return trace;
        }
        z = next;
    }
    trace.status = IterationStatus::MaxIterExceeded;
    return trace;
}

std::optional<double> estimate_order(const IterationTrace& trace, Complex root) {
    if (trace.status != IterationStatus::Converged) return std::nullopt;

    const double floor = 1e2 * std::numeric_limits<double>::epsilon();
    std::vector<double> errors;
    for (Complex z : trace.iterates) {
        const double e = std::abs(z - root);
        if (e <= floor) break;
        if (!errors.empty() && e >= errors.back()) break;
        errors.push_back(e);
    }
    if (errors.size() < 4) return std::nullopt;

    std::vector<double> ratios;
    for (std::size_t k = 1; k + 1 < errors.size(); ++k) {
        ratios.push_back(std::log(errors[k + 1] / errors[k]) /
                         std::log(errors[k] / errors[k - 1]));
    }
    if (ratios.size() < 2) return std::nullopt;

    std::sort(ratios.begin(), ratios.end());
    const std::size_t mid = ratios.size() / 2;
    if (ratios.size() % 2 == 1) return ratios[mid];
    return 0.5 * (ratios[mid - 1] + ratios[mid]);
}

Window Window::inflated(double factor) const {
    const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
    const double hw = 0.5 * width() * factor, hh = 0.5 * height() * factor;
    return {cx - hw, cy - hh, cx + hw, cy + hh};
}

std::vector<Complex> find_zeros(const HarmonicMap& f, StepKind kind,
                                const Window& window, int grid_n,
                                const IterationOptions& opts) {
    if (grid_n < 2) throw Error("find_zeros requires grid_n >= 2");
    if (!(window.width() > 0.0) || !(window.height() > 0.0)) {
        throw Error("find_zeros requires a non-degenerate window");
    }

    const Window keep = window.inflated(1.1);
    const int total = grid_n * grid_n;
    const Complex nan{std::numeric_limits<double>::quiet_NaN(),
                      std::numeric_limits<double>::quiet_NaN()};
    std::vector<Complex> finals(static_cast<std::size_t>(total), nan);

    detail::parallel_for(total, [&](int begin, int end) {
        for (int idx = begin; idx < end; ++idx) {
            const int ix = idx % grid_n, iy = idx / grid_n;
            const Complex start(
                window.x0 + window.width() * ix / (grid_n - 1),
                window.y0 + window.height() * iy / (grid_n - 1));
            const IterationTrace trace = iterate(f, kind, start, opts);
            if (trace.status != IterationStatus::Converged) continue;
            const Complex zf = *trace.final;
            if (!keep.contains(zf)) continue;
            if (std::abs(eval_map(f, zf)) > 10.0 * opts.residual_tol) continue;
            finals[static_cast<std::size_t>(idx)] = zf;
        }
    });

    std::vector<Complex> kept;
    for (Complex z : finals) {
        if (finite(z)) kept.push_back(z);
    }
    const auto re_im_less = [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    std::sort(kept.begin(), kept.end(), re_im_less);

    // Greedy clustering on the sorted finals: representative-based with the
    // dedup radius, centroid = member mean.
    constexpr double kDedupRadius = 1e-8;
    std::vector<Complex> reps;
    std::vector<Complex> sums;
    std::vector<int> counts;
    for (Complex z : kept) {
        bool placed = false;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (std::abs(z - reps[i]) <= kDedupRadius) {
                sums[i] += z;
                counts[i] += 1;
                placed = true;
                break;
            }
        }
        if (!placed) {
            reps.push_back(z);
            sums.push_back(z);
            counts.push_back(1);
        }
    }

    std::vector<Complex> centroids;
    centroids.reserve(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        centroids.push_back(sums[i] / static_cast<double>(counts[i]));
    }
    std::sort(centroids.begin(), centroids.end(), re_im_less);
    return centroids;
}

}  // namespace harmroot
