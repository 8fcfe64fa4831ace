#include "germ/text.hpp"

#include <cctype>

namespace germ {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly run() {
        skip_ws();
        if (at_end()) throw ParseError("empty input", pos_);
        Poly out;
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = take() == '-';
        out += term(negative);
        skip_ws();
        while (!at_end()) {
            const char op = peek();
            if (op != '+' && op != '-')
                throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
            take();
            out += term(op == '-');
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // term := coef ('*' factor)* | factor ('*' factor)*
    Poly term(bool negative) {
        skip_ws();
        if (at_end()) throw ParseError("expected a term", pos_);
        Rational coef{1};
        int ex = 0, ey = 0;
        bool saw_anything = false;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
            coef = coefficient();
            saw_anything = true;
        } else {
            factor(ex, ey);
            saw_anything = true;
        }
        skip_ws();
        while (!at_end() && peek() == '*') {
            take();
            skip_ws();
            factor(ex, ey);
        }
        if (!saw_anything) throw ParseError("expected a term", pos_);
        if (negative) coef = -coef;
        Poly p;
        p.add_term(Monomial{ex, ey}, coef);
        return p;
    }

    // coef := integer | '(' integer '/' positive-integer ')'
    Rational coefficient() {
        skip_ws();
        if (peek() == '(') {
            take();
            skip_ws();
            const BigInt num = integer(/*allow_sign=*/true);
            skip_ws();
            if (at_end() || peek() != '/') throw ParseError("expected '/' in rational coefficient", pos_);
            take();
            skip_ws();
            const std::size_t den_pos = pos_;
            const BigInt den = integer(/*allow_sign=*/false);
            if (den <= 0) throw ParseError("denominator must be positive", den_pos);
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError("expected ')' after rational coefficient", pos_);
            take();
            return Rational(num, den);
        }
        return Rational(integer(/*allow_sign=*/false));
    }

    BigInt integer(bool allow_sign) {
        skip_ws();
        std::string digits;
        if (allow_sign && !at_end() && (peek() == '-' || peek() == '+')) digits += take();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return BigInt(digits);
    }

    // factor := ('x'|'y') ('^' positive-integer)?
    void factor(int& ex, int& ey) {
        skip_ws();
        if (at_end()) throw ParseError("expected 'x' or 'y'", pos_);
        const char v = peek();
        if (v != 'x' && v != 'y')
            throw ParseError(std::string("expected 'x' or 'y', found '") + v + "'", pos_);
        take();
        int exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            take();
            skip_ws();
            const std::size_t exp_pos = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected a positive integer exponent", exp_pos);
            long long e = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + (take() - '0');
                if (e > 1'000'000) throw ParseError("exponent too large", exp_pos);
            }
            if (e == 0) throw ParseError("exponent must be positive", exp_pos);
            exp = static_cast<int>(e);
        }
        (v == 'x' ? ex : ey) += exp;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void append_coefficient(std::string& out, const Rational& abs_coeff, bool is_constant_term) {
    if (denominator(abs_coeff) != 1) {
        out += "(" + to_string(abs_coeff) + ")";
        if (!is_constant_term) out += "*";
    } else if (abs_coeff != 1 || is_constant_term) {
        out += to_string(abs_coeff);
        if (!is_constant_term) out += "*";
    }
}

}  // namespace

Poly parse(std::string_view text) { return Parser(text).run(); }

std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational abs_c = negative ? Rational(-c) : c;
        const bool constant = m.ex == 0 && m.ey == 0;
        append_coefficient(out, abs_c, constant);
        if (!constant) out += to_string(m);
        first = false;
    }
    return out;
}

}  // namespace germ
