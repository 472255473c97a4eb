#pragma once

#include <complex>
#include <memory>
#include <string>

#include "harmroot/errors.hpp"

namespace harmroot {

using Complex = std::complex<double>;

/// Value and first three raw derivatives of an analytic function at a point.
/// Derivatives are stored unscaled (f, f', f'', f'''), not as Taylor
/// coefficients f^(k)/k!.
struct Jet3 {
    Complex d0{};
    Complex d1{};
    Complex d2{};
    Complex d3{};

    /// Jet of the constant c at any point: (c, 0, 0, 0).
    static Jet3 constant(Complex c) { return {c, {}, {}, {}}; }

    /// Jet of the identity map at z: (z, 1, 0, 0).
    static Jet3 variable(Complex z) { return {z, Complex(1.0), {}, {}}; }

    friend bool operator==(const Jet3&, const Jet3&) = default;
};

Jet3 operator-(const Jet3& a);
Jet3 operator+(const Jet3& a, const Jet3& b);
Jet3 operator-(const Jet3& a, const Jet3& b);

/// Leibniz rule to third order:
/// (fg)'' = f''g + 2f'g' + fg'', (fg)''' = f'''g + 3f''g' + 3f'g'' + fg'''.
Jet3 operator*(const Jet3& a, const Jet3& b);

/// Quotient jet, defined so that (a*b)/b recovers a whenever b.d0 != 0.
/// Throws DivisionByZeroJet when b.d0 == 0.
Jet3 operator/(const Jet3& a, const Jet3& b);

/// Integer power by repeated squaring on jets (branch-free for polynomials).
/// Negative exponents go through the quotient rule; base.d0 must be nonzero
/// for those.
Jet3 jet_pow(const Jet3& base, long exponent);

Jet3 jet_exp(const Jet3& a);
/// Principal branch; throws BranchPointError when a.d0 == 0.
Jet3 jet_log(const Jet3& a);
Jet3 jet_sin(const Jet3& a);
Jet3 jet_cos(const Jet3& a);

/// Faa di Bruno to third order. `outer` must be the jet of the outer
/// function evaluated at the point inner.d0:
///   (f.g)'  = f'g'
///   (f.g)'' = f''g'^2 + f'g''
///   (f.g)''' = f'''g'^3 + 3f''g'g'' + f'g'''
Jet3 jet_compose(const Jet3& outer, const Jet3& inner);

/// Immutable expression tree over one complex variable z, evaluable to a
/// Jet3 at any point. Copies share structure; all operations are pure.
class AnalyticFn {
public:
    /// Constant 0.
    AnalyticFn();
    AnalyticFn(Complex c);  // NOLINT: implicit by design, enables z + 1.0
    AnalyticFn(double x) : AnalyticFn(Complex(x)) {}

    static AnalyticFn variable();
    static AnalyticFn constant(Complex c);

    /// Value and first three derivatives at z. Deterministic: identical tree
    /// and point give identical results. Evaluation errors identify the
    /// offending subexpression.
    Jet3 jets(Complex z) const;

    Complex operator()(Complex z) const { return jets(z).d0; }

    /// True when the tree is literally the constant 0.
    bool is_constant_zero() const;

    /// True when any node of the tree is the variable z.
    bool depends_on_z() const;

    /// Expression text in the grammar accepted by parse_expression.
    std::string str() const;

    friend AnalyticFn operator-(const AnalyticFn& a);
    friend AnalyticFn operator+(const AnalyticFn& a, const AnalyticFn& b);
    friend AnalyticFn operator-(const AnalyticFn& a, const AnalyticFn& b);
    friend AnalyticFn operator*(const AnalyticFn& a, const AnalyticFn& b);
    friend AnalyticFn operator/(const AnalyticFn& a, const AnalyticFn& b);
    friend AnalyticFn pow(const AnalyticFn& base, long exponent);
    friend AnalyticFn exp(const AnalyticFn& a);
    friend AnalyticFn log(const AnalyticFn& a);
    friend AnalyticFn sin(const AnalyticFn& a);
    friend AnalyticFn cos(const AnalyticFn& a);
    /// Tree for outer(inner(z)); evaluated with jet_compose.
    friend AnalyticFn compose(const AnalyticFn& outer, const AnalyticFn& inner);

private:
    struct Node;
    explicit AnalyticFn(std::shared_ptr<const Node> node);

    std::shared_ptr<const Node> node_;
};

AnalyticFn operator-(const AnalyticFn& a);
AnalyticFn operator+(const AnalyticFn& a, const AnalyticFn& b);
AnalyticFn operator-(const AnalyticFn& a, const AnalyticFn& b);
AnalyticFn operator*(const AnalyticFn& a, const AnalyticFn& b);
AnalyticFn operator/(const AnalyticFn& a, const AnalyticFn& b);
AnalyticFn pow(const AnalyticFn& base, long exponent);
AnalyticFn exp(const AnalyticFn& a);
AnalyticFn log(const AnalyticFn& a);
AnalyticFn sin(const AnalyticFn& a);
AnalyticFn cos(const AnalyticFn& a);
AnalyticFn compose(const AnalyticFn& outer, const AnalyticFn& inner);

/// Structural-recursion evaluation of f and its first three derivatives.
inline Jet3 eval_jet(const AnalyticFn& f, Complex z) { return f.jets(z); }

}  // namespace harmroot
