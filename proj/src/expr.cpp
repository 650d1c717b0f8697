#include "wittrank/expr.hpp"

#include "wittrank/error.hpp"

#include <cctype>
#include <climits>
#include <string>

namespace wittrank {

namespace {

class Parser {
public:
    Parser(std::string_view text, char var) : s_(text), var_(var) {}

    RationalFunction parse() {
        skip_ws();
        if (pos_ == s_.size()) fail("empty expression");
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc *= unary();
            } else if (peek('/')) {
                const std::size_t at = pos_;
                ++pos_;
                RationalFunction d = unary();
                if (d.is_zero()) throw MathError("division_by_zero", "division by the zero polynomial", "offset " + std::to_string(at));
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary() {
        if (peek('-')) {
            ++pos_;
            return -factor();
        }
        return factor();
    }

    RationalFunction factor() {
        RationalFunction b = base();
        if (peek('^')) {
            ++pos_;
            const std::size_t at = pos_;
            int e = signed_integer();
            if (e < 0 && b.is_zero()) throw MathError("division_by_zero", "negative power of zero", "offset " + std::to_string(at));
            return b.pow(e);
        }
        return b;
    }

    RationalFunction base() {
        skip_ws();
        if (pos_ == s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == var_) {
            ++pos_;
            return RationalFunction(LaurentPoly::t());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(LaurentPoly(rational()));
        fail(std::string("unexpected '") + c + "'");
    }

    Integer integer_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    Rational rational() {
        Integer num = integer_literal();
        // Greedy: "p/q" with q an integer literal is a single rational token.
        const std::size_t save = pos_;
        if (peek('/')) {
            ++pos_;
            if (peek_digit()) {
                const std::size_t at = pos_;
                Integer den = integer_literal();
                if (den == 0) {
                    pos_ = at;
                    throw MathError("division_by_zero", "zero denominator in rational literal", "offset " + std::to_string(at));
                }
                Rational q(num, den);
                q.canonicalize();
                return q;
            }
            pos_ = save;
        }
        return Rational(num);
    }

    int signed_integer() {
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        } else if (peek('+')) {
            ++pos_;
        }
        const std::size_t at = pos_;
        Integer v = integer_literal();
        if (v > INT_MAX / 4) {
            pos_ = at;
            fail("exponent too large");
        }
        int e = static_cast<int>(v.get_si());
        return neg ? -e : e;
    }

    std::string_view s_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expr(std::string_view text, char var) { return Parser(text, var).parse(); }

Poly parse_poly(std::string_view text, char var) {
    RationalFunction f = parse_expr(text, var);
    if (!f.is_laurent() || (!f.num().is_zero() && f.num().low() < 0)) {
        throw InputError("not_polynomial", "expected a polynomial in " + std::string(1, var) + ": '" + std::string(text) + "'");
    }
    auto [shift, p] = f.num().to_poly();
    return p * Poly::monomial(1, shift);
}

}  // namespace wittrank
