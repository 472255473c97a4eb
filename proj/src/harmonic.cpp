#include "harmroot/harmonic.hpp"

#include <cmath>

namespace harmroot {

double HarmonicJet::derivative_scale() const {
    return std::norm(hjet.d1) + std::norm(gjet.d1);
}

Orientation HarmonicJet::orientation() const {
    if (std::abs(jacobian) <= kJacobianZeroRelTol * derivative_scale()) {
        return Orientation::Degenerate;
    }
    return jacobian > 0.0 ? Orientation::Preserving : Orientation::Reversing;
}

Complex eval_map(const HarmonicMap& f, Complex z) {
    return f.h.jets(z).d0 + std::conj(f.g.jets(z).d0);
}

HarmonicJet map_jets(const HarmonicMap& f, Complex z) {
    HarmonicJet out;
    out.z = z;
    out.hjet = f.h.jets(z);
    out.gjet = f.g.jets(z);
    out.f = out.hjet.d0 + std::conj(out.gjet.d0);
    out.jacobian = std::norm(out.hjet.d1) - std::norm(out.gjet.d1);
    if (out.hjet.d1 != Complex{}) {
        out.dilatation = out.gjet.d1 / out.hjet.d1;
    }
    return out;
}

Orientation orientation(const HarmonicMap& f, Complex z) {
    return map_jets(f, z).orientation();
}

HarmonicMap conjugate_map(const HarmonicMap& f) { return {f.g, f.h}; }

}  // namespace harmroot
