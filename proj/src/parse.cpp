#include "harmroot/parse.hpp"

#include <cctype>
#include <string>

namespace harmroot {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    AnalyticFn run() {
        AnalyticFn result = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input or an operator");
        return result;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("parse error at offset " + std::to_string(pos_) +
                             ": expected " + expected,
                         pos_, expected);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    AnalyticFn parse_expr() {
        AnalyticFn lhs = parse_term();
        for (;;) {
            if (consume('+')) {
                lhs = lhs + parse_term();
            } else if (consume('-')) {
                lhs = lhs - parse_term();
            } else {
                return lhs;
            }
        }
    }

    AnalyticFn parse_term() {
        AnalyticFn lhs = parse_factor();
        for (;;) {
            if (consume('*')) {
                lhs = lhs * parse_factor();
            } else if (consume('/')) {
                lhs = lhs / parse_factor();
            } else {
                return lhs;
            }
        }
    }

    // '^' binds tighter than unary minus: -z^2 parses as -(z^2).
    AnalyticFn parse_factor() {
        if (consume('-')) return -parse_factor();
        return parse_power();
    }

    AnalyticFn parse_power() {
        AnalyticFn base = parse_atom();
        if (consume('^')) return pow(base, parse_exponent());
        return base;
    }

    long parse_exponent() {
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("an integer exponent");
        }
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        return negative ? -value : value;
    }

    AnalyticFn parse_atom() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            AnalyticFn inner = parse_expr();
            if (!consume(')')) fail("')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return parse_name();
        }
        fail("'z', a number, a function name, or '('");
    }

    AnalyticFn parse_number() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '.') {
            ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
            pos_ = start;
            fail("a decimal number");
        }
        // Exponent part only when digits actually follow.
        if (peek() == 'e' || peek() == 'E') {
            std::size_t probe = pos_ + 1;
            if (probe < text_.size() &&
                (text_[probe] == '+' || text_[probe] == '-')) {
                ++probe;
            }
            if (probe < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[probe]))) {
                pos_ = probe;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
        }
        const double value = std::stod(std::string(text_.substr(start, pos_ - start)));
        if (peek() == 'i') {
            ++pos_;
            return AnalyticFn::constant(Complex(0.0, value));
        }
        return AnalyticFn::constant(Complex(value, 0.0));
    }

    AnalyticFn parse_name() {
        const std::size_t start = pos_;
        while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "z") return AnalyticFn::variable();
        if (name == "i") return AnalyticFn::constant(Complex(0.0, 1.0));

        AnalyticFn (*fn)(const AnalyticFn&) = nullptr;
        if (name == "exp") fn = &harmroot::exp;
        else if (name == "log") fn = &harmroot::log;
        else if (name == "sin") fn = &harmroot::sin;
        else if (name == "cos") fn = &harmroot::cos;
        if (fn == nullptr) {
            pos_ = start;
            fail("'z', 'i', or one of exp/log/sin/cos");
        }
        if (!consume('(')) fail("'(' after function name");
        AnalyticFn arg = parse_expr();
        if (!consume(')')) fail("')'");
        return fn(arg);
    }
};

}  // namespace

AnalyticFn parse_expression(std::string_view text) { return Parser(text).run(); }

Complex parse_complex(std::string_view text) {
    const AnalyticFn fn = parse_expression(text);
    if (fn.depends_on_z()) {
        throw ParseError("expected a constant, got an expression in z", 0,
                         "a z-free constant expression");
    }
    return fn.jets(Complex{}).d0;
}

}  // namespace harmroot
