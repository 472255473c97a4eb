#include "harmroot/jets.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "format.hpp"

namespace harmroot {

Jet3 operator-(const Jet3& a) { return {-a.d0, -a.d1, -a.d2, -a.d3}; }

Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.d0 + b.d0, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

Jet3 operator-(const Jet3& a, const Jet3& b) {
    return {a.d0 - b.d0, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

Jet3 operator*(const Jet3& a, const Jet3& b) {
    return {a.d0 * b.d0,
            a.d1 * b.d0 + a.d0 * b.d1,
            a.d2 * b.d0 + 2.0 * a.d1 * b.d1 + a.d0 * b.d2,
            a.d3 * b.d0 + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.d0 * b.d3};
}

Jet3 operator/(const Jet3& a, const Jet3& b) {
    if (b.d0 == Complex{}) {
        throw DivisionByZeroJet("jet division by a jet with zero value");
    }
    // Solve a = q*b one derivative order at a time.
    Jet3 q;
    q.d0 = a.d0 / b.d0;
    q.d1 = (a.d1 - q.d0 * b.d1) / b.d0;
    q.d2 = (a.d2 - 2.0 * q.d1 * b.d1 - q.d0 * b.d2) / b.d0;
    q.d3 = (a.d3 - 3.0 * q.d2 * b.d1 - 3.0 * q.d1 * b.d2 - q.d0 * b.d3) / b.d0;
    return q;
}

Jet3 jet_pow(const Jet3& base, long exponent) {
    if (exponent < 0) {
        return Jet3::constant(1.0) / jet_pow(base, -exponent);
    }
    Jet3 result = Jet3::constant(1.0);
    Jet3 square = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1u) result = result * square;
        e >>= 1u;
        if (e != 0) square = square * square;
    }
    return result;
}

Jet3 jet_compose(const Jet3& outer, const Jet3& inner) {
    const Complex g1 = inner.d1, g2 = inner.d2, g3 = inner.d3;
    return {outer.d0,
            outer.d1 * g1,
            outer.d2 * g1 * g1 + outer.d1 * g2,
            outer.d3 * g1 * g1 * g1 + 3.0 * outer.d2 * g1 * g2 + outer.d1 * g3};
}

Jet3 jet_exp(const Jet3& a) {
    const Complex e = std::exp(a.d0);
    return jet_compose({e, e, e, e}, a);
}

Jet3 jet_log(const Jet3& a) {
    if (a.d0 == Complex{}) {
        throw BranchPointError("log evaluated at its branch point 0");
    }
    const Complex w = a.d0;
    const Complex inv = 1.0 / w;
    return jet_compose({std::log(w), inv, -inv * inv, 2.0 * inv * inv * inv}, a);
}

Jet3 jet_sin(const Jet3& a) {
    const Complex s = std::sin(a.d0), c = std::cos(a.d0);
    return jet_compose({s, c, -s, -c}, a);
}

Jet3 jet_cos(const Jet3& a) {
    const Complex s = std::sin(a.d0), c = std::cos(a.d0);
    return jet_compose({c, -s, -c, s}, a);
}

// ---------------------------------------------------------------------------
// Expression trees

struct AnalyticFn::Node {
    enum class Kind { Var, Const, Neg, Add, Sub, Mul, Div, Pow, Exp, Log, Sin, Cos, Compose };

    Kind kind;
    Complex value{};   // Const
    long exponent{};   // Pow
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
};

namespace {

using Node = AnalyticFn::Node;
using Kind = AnalyticFn::Node::Kind;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

using detail::format_double;

std::string format_constant(Complex c) {
    if (c.imag() == 0.0) return format_double(c.real());
    if (c.real() == 0.0) return format_double(c.imag()) + "i";
    std::string s = "(" + format_double(c.real());
    if (!(c.imag() < 0.0)) s += "+";
    s += format_double(c.imag()) + "i)";
    return s;
}

// Precedence levels used by the printer: sum 1, product 2, unary 3, power 4.
int node_precedence(const Node& n) {
    switch (n.kind) {
        case Kind::Add:
        case Kind::Sub: return 1;
        case Kind::Mul:
        case Kind::Div: return 2;
        case Kind::Neg: return 3;
        case Kind::Pow: return 4;
        default: return 5;
    }
}

void print_node(const Node& n, const std::string& var_text, std::string& out);

void print_child(const Node& child, int parent_prec, const std::string& var_text,
                 std::string& out) {
    const bool parens = node_precedence(child) < parent_prec;
    if (parens) out += "(";
    print_node(child, var_text, out);
    if (parens) out += ")";
}

void print_node(const Node& n, const std::string& var_text, std::string& out) {
    switch (n.kind) {
        case Kind::Var:
            out += var_text;
            return;
        case Kind::Const:
            out += format_constant(n.value);
            return;
        case Kind::Neg:
            out += "-";
            print_child(*n.a, 3, var_text, out);
            return;
        case Kind::Add:
            print_child(*n.a, 1, var_text, out);
            out += " + ";
            // Right operand needs parens at equal precedence (left associativity).
            print_child(*n.b, 2, var_text, out);
            return;
        case Kind::Sub:
            print_child(*n.a, 1, var_text, out);
            out += " - ";
            print_child(*n.b, 2, var_text, out);
            return;
        case Kind::Mul:
            print_child(*n.a, 2, var_text, out);
            out += "*";
            print_child(*n.b, 3, var_text, out);
            return;
        case Kind::Div:
            print_child(*n.a, 2, var_text, out);
            out += "/";
            print_child(*n.b, 3, var_text, out);
            return;
        case Kind::Pow:
            print_child(*n.a, 5, var_text, out);
            out += "^" + std::to_string(n.exponent);
            return;
        case Kind::Exp:
        case Kind::Log:
        case Kind::Sin:
        case Kind::Cos: {
            const char* name = n.kind == Kind::Exp   ? "exp"
                               : n.kind == Kind::Log ? "log"
                               : n.kind == Kind::Sin ? "sin"
                                                     : "cos";
            out += name;
            out += "(";
            print_node(*n.a, var_text, out);
            out += ")";
            return;
        }
        case Kind::Compose: {
            // No grammar form; print the outer tree with the inner tree
            // substituted for its variable.
            std::string inner;
            print_node(*n.b, var_text, inner);
            print_node(*n.a, "(" + inner + ")", out);
            return;
        }
    }
}

std::string node_text(const Node& n) {
    std::string out;
    print_node(n, "z", out);
    return out;
}

Jet3 eval_node(const Node& n, Complex z) {
    switch (n.kind) {
        case Kind::Var: return Jet3::variable(z);
        case Kind::Const: return Jet3::constant(n.value);
        case Kind::Neg: return -eval_node(*n.a, z);
        case Kind::Add: return eval_node(*n.a, z) + eval_node(*n.b, z);
        case Kind::Sub: return eval_node(*n.a, z) - eval_node(*n.b, z);
        case Kind::Mul: return eval_node(*n.a, z) * eval_node(*n.b, z);
        case Kind::Div: {
            const Jet3 num = eval_node(*n.a, z);
            const Jet3 den = eval_node(*n.b, z);
            if (den.d0 == Complex{}) {
                throw DivisionByZeroJet("division by zero in subexpression '" +
                                        node_text(*n.b) + "'");
            }
            return num / den;
        }
        case Kind::Pow: {
            const Jet3 base = eval_node(*n.a, z);
            if (n.exponent < 0 && base.d0 == Complex{}) {
                throw DivisionByZeroJet("negative power of zero in subexpression '" +
                                        node_text(n) + "'");
            }
            return jet_pow(base, n.exponent);
        }
        case Kind::Exp: return jet_exp(eval_node(*n.a, z));
        case Kind::Log: {
            const Jet3 arg = eval_node(*n.a, z);
            if (arg.d0 == Complex{}) {
                throw BranchPointError("log at branch point in subexpression '" +
                                       node_text(n) + "'");
            }
            return jet_log(arg);
        }
        case Kind::Sin: return jet_sin(eval_node(*n.a, z));
        case Kind::Cos: return jet_cos(eval_node(*n.a, z));
        case Kind::Compose: {
            const Jet3 inner = eval_node(*n.b, z);
            const Jet3 outer = eval_node(*n.a, inner.d0);
            return jet_compose(outer, inner);
        }
    }
    throw Error("corrupt expression node");
}

bool node_depends_on_z(const Node& n) {
    if (n.kind == Kind::Var) return true;
    if (n.a && node_depends_on_z(*n.a)) return true;
    if (n.b && node_depends_on_z(*n.b)) return true;
    return false;
}

}  // namespace

AnalyticFn::AnalyticFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

AnalyticFn::AnalyticFn() : AnalyticFn(Complex{}) {}

AnalyticFn::AnalyticFn(Complex c)
    : node_(make_node({Kind::Const, c, 0, nullptr, nullptr})) {}

AnalyticFn AnalyticFn::variable() {
    return AnalyticFn(make_node({Kind::Var, {}, 0, nullptr, nullptr}));
}

AnalyticFn AnalyticFn::constant(Complex c) { return AnalyticFn(c); }

Jet3 AnalyticFn::jets(Complex z) const { return eval_node(*node_, z); }

bool AnalyticFn::is_constant_zero() const {
    return node_->kind == Kind::Const && node_->value == Complex{};
}

bool AnalyticFn::depends_on_z() const { return node_depends_on_z(*node_); }

std::string AnalyticFn::str() const { return node_text(*node_); }

AnalyticFn operator-(const AnalyticFn& a) {
    return AnalyticFn(make_node({Kind::Neg, {}, 0, a.node_, nullptr}));
}

AnalyticFn operator+(const AnalyticFn& a, const AnalyticFn& b) {
    return AnalyticFn(make_node({Kind::Add, {}, 0, a.node_, b.node_}));
}

AnalyticFn operator-(const AnalyticFn& a, const AnalyticFn& b) {
    return AnalyticFn(make_node({Kind::Sub, {}, 0, a.node_, b.node_}));
}

AnalyticFn operator*(const AnalyticFn& a, const AnalyticFn& b) {
    return AnalyticFn(make_node({Kind::Mul, {}, 0, a.node_, b.node_}));
}

AnalyticFn operator/(const AnalyticFn& a, const AnalyticFn& b) {
    return AnalyticFn(make_node({Kind::Div, {}, 0, a.node_, b.node_}));
}

AnalyticFn pow(const AnalyticFn& base, long exponent) {
    return AnalyticFn(make_node({Kind::Pow, {}, exponent, base.node_, nullptr}));
}

AnalyticFn exp(const AnalyticFn& a) {
    return AnalyticFn(make_node({Kind::Exp, {}, 0, a.node_, nullptr}));
}

AnalyticFn log(const AnalyticFn& a) {
    return AnalyticFn(make_node({Kind::Log, {}, 0, a.node_, nullptr}));
}

AnalyticFn sin(const AnalyticFn& a) {
    return AnalyticFn(make_node({Kind::Sin, {}, 0, a.node_, nullptr}));
}

AnalyticFn cos(const AnalyticFn& a) {
    return AnalyticFn(make_node({Kind::Cos, {}, 0, a.node_, nullptr}));
}

AnalyticFn compose(const AnalyticFn& outer, const AnalyticFn& inner) {
    return AnalyticFn(make_node({Kind::Compose, {}, 0, outer.node_, inner.node_}));
}

}  // namespace harmroot
