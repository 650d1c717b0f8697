#include "wittrank/rational.hpp"

#include "wittrank/error.hpp"

#include <cctype>

namespace wittrank {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return InputError("bad_rational", "not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t i = (text[0] == '-') ? 1 : 0;
    std::size_t slash = std::string_view::npos;
    if (i == text.size()) throw bad();
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] == '/') {
            if (slash != std::string_view::npos || k == i || k + 1 == text.size()) throw bad();
            slash = k;
        } else if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw bad();
        }
    }
    Rational q(std::string(text), 10);
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
}

namespace {

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Requires 0 <= lo < hi. Follows the continued-fraction expansions of both
// endpoints until they diverge.
Rational simplest_open(const Rational& lo, const Rational& hi) {
    Integer fl = floor_of(lo);
    Integer cand = fl + 1;
    if (cand < hi) return Rational(cand);
    // lo and hi share the integer part fl; recurse on the reciprocals.
    Rational a = lo - fl;
    Rational b = hi - fl;
    Rational inner;
    if (a == 0) {
        // (fl, fl + b): need 1/x with x in (1/b, +inf)
        Rational inv_b = 1 / b;
        Integer c = floor_of(inv_b) + 1;
        inner = Rational(1) / Rational(c);
    } else {
        inner = 1 / simplest_open(1 / b, 1 / a);
    }
    Rational out = Rational(fl) + inner;
    out.canonicalize();
    return out;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
    if (lo >= 0) return simplest_open(lo, hi);
    if (hi <= 0) return -simplest_open(-hi, -lo);
    return Rational(0);
}

Rational round_down(const Rational& q, unsigned bits) {
    Integer scaled_num = q.get_num() << bits;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    Rational r(f, Integer(1) << bits);
    r.canonicalize();
    return r;
}

Rational round_up(const Rational& q, unsigned bits) {
    Integer scaled_num = q.get_num() << bits;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    Rational r(c, Integer(1) << bits);
    r.canonicalize();
    return r;
}

}  // namespace wittrank
