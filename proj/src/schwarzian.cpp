#include "harmroot/schwarzian.hpp"

#include <cmath>

namespace harmroot {

MobiusTransform::MobiusTransform(Complex a, Complex b, Complex c, Complex d)
    : a(a), b(b), c(c), d(d) {
    const double det = std::abs(a * d - b * c);
    const double scale = std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c);
    if (det <= 1e-14 * scale) {
        throw DegenerateMobius("Mobius transform with ad - bc = 0");
    }
}

Complex MobiusTransform::operator()(Complex z) const {
    return (a * z + b) / (c * z + d);
}

AnalyticFn MobiusTransform::as_expression() const {
    return mobius_post_compose(*this, AnalyticFn::variable());
}

AnalyticFn mobius_post_compose(const MobiusTransform& M, const AnalyticFn& phi) {
    return (AnalyticFn(M.a) * phi + AnalyticFn(M.b)) /
           (AnalyticFn(M.c) * phi + AnalyticFn(M.d));
}

Complex pre_schwarzian(const AnalyticFn& phi, Complex z) {
    const Jet3 j = phi.jets(z);
    if (j.d1 == Complex{}) {
        throw NotLocallyUnivalent("phi'(z) = 0 in pre-Schwarzian at z = (" +
                                  std::to_string(z.real()) + "," +
                                  std::to_string(z.imag()) + ")");
    }
    return j.d2 / j.d1;
}

Complex schwarzian(const AnalyticFn& phi, Complex z) {
    const Jet3 j = phi.jets(z);
    if (j.d1 == Complex{}) {
        throw NotLocallyUnivalent("phi'(z) = 0 in Schwarzian at z = (" +
                                  std::to_string(z.real()) + "," +
                                  std::to_string(z.imag()) + ")");
    }
    const Complex p = j.d2 / j.d1;
    return j.d3 / j.d1 - 1.5 * p * p;
}

namespace {

// Dilatation w = g'/h' and its first two derivatives, from the 3-jets of the
// analytic parts. Quotient recurrence one order below Jet3.
struct Dilatation {
    Complex w, w1, w2;
};

Dilatation dilatation_jets(const Jet3& h, const Jet3& g) {
    Dilatation d;
    d.w = g.d1 / h.d1;
    d.w1 = (g.d2 - d.w * h.d2) / h.d1;
    d.w2 = (g.d3 - 2.0 * d.w1 * h.d2 - d.w * h.d3) / h.d1;
    return d;
}

// Orientation-preserving representative of f at z: the jets of f itself when
// J > 0, the jets of conj(f) when J < 0. Degenerate Jacobian is an error.
HarmonicJet preserving_jets(const HarmonicMap& f, Complex z, const char* op) {
    HarmonicJet jets = map_jets(f, z);
    switch (jets.orientation()) {
        case Orientation::Degenerate:
            throw DegenerateJacobian(std::string(op) +
                                     ": Jacobian vanishes at the evaluation point");
        case Orientation::Reversing:
            jets = map_jets(conjugate_map(f), z);
            break;
        case Orientation::Preserving:
            break;
    }
    if (jets.hjet.d1 == Complex{}) {
        throw NotLocallyUnivalent(std::string(op) +
                                  ": h'(z) = 0 on the orientation-preserving "
                                  "representative");
    }
    return jets;
}

}  // namespace

Complex harmonic_pre_schwarzian(const HarmonicMap& f, Complex z) {
    const HarmonicJet jets = preserving_jets(f, z, "harmonic pre-Schwarzian");
    const Jet3& h = jets.hjet;
    const Dilatation d = dilatation_jets(h, jets.gjet);
    return h.d2 / h.d1 - std::conj(d.w) * d.w1 / (1.0 - std::norm(d.w));
}

Complex harmonic_schwarzian(const HarmonicMap& f, Complex z) {
    const HarmonicJet jets = preserving_jets(f, z, "harmonic Schwarzian");
    const Jet3& h = jets.hjet;
    const Dilatation d = dilatation_jets(h, jets.gjet);

    const Complex ph = h.d2 / h.d1;
    const Complex sh = h.d3 / h.d1 - 1.5 * ph * ph;
    const Complex wbar_over = std::conj(d.w) / (1.0 - std::norm(d.w));
    const Complex cross = wbar_over * (ph * d.w1 - d.w2);
    const Complex last = d.w1 * wbar_over;
    return sh + cross - 1.5 * last * last;
}

}  // namespace harmroot
