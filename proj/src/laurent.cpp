#include "wittrank/laurent.hpp"

#include "wittrank/error.hpp"

#include <stdexcept>

namespace wittrank {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
}

Rational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    Terms r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) r[e1 + e2] += c1 * c2;
    }
    *this = LaurentPoly(std::move(r));
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    Terms r;
    for (const auto& [e, c] : terms_) r.emplace_hint(r.end(), e + k, c);
    LaurentPoly p;
    p.terms_ = std::move(r);
    return p;
}

std::pair<int, Poly> LaurentPoly::to_poly() const {
    if (is_zero()) return {0, Poly()};
    const int lo = low();
    std::vector<Rational> v(static_cast<std::size_t>(high() - lo) + 1);
    for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - lo)] = c;
    return {lo, Poly(std::move(v))};
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, int shift) {
    Terms r;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) r.emplace_hint(r.end(), static_cast<int>(i) + shift, c[i]);
    }
    LaurentPoly out;
    out.terms_ = std::move(r);
    return out;
}

std::string LaurentPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, a] : terms_) {
        Rational mag = abs(a);
        if (first) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono(1, var);
        if (e != 1) mono += "^" + std::to_string(e);
        if (e == 0) {
            out += wittrank::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += wittrank::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

LaurentPoly involute(const LaurentPoly& p) {
    LaurentPoly::Terms r;
    for (const auto& [e, c] : p.terms()) r.emplace(-e, c);
    return LaurentPoly(std::move(r));
}

bool is_symmetric(const LaurentPoly& p) {
    const auto& t = p.terms();
    auto lo = t.begin();
    auto hi = t.rbegin();
    for (std::size_t n = 0; n < t.size(); ++n, ++lo, ++hi) {
        if (lo->first != -hi->first || lo->second != hi->second) return false;
    }
    return true;
}

ChebPoly to_chebyshev(const LaurentPoly& p) {
    if (!is_symmetric(p)) {
        throw MathError("not_symmetric", "to_chebyshev: Laurent polynomial is not symmetric: " + p.to_string());
    }
    // Peel off the top term c*t^d with c*(t + 1/t)^d, which leaves a symmetric
    // remainder of smaller span.
    const LaurentPoly x_laurent = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
    LaurentPoly rest = p;
    std::vector<Rational> out;
    while (!rest.is_zero()) {
        const int d = rest.high();
        const Rational c = rest.terms().rbegin()->second;
        if (out.size() <= static_cast<std::size_t>(d)) out.resize(static_cast<std::size_t>(d) + 1);
        out[static_cast<std::size_t>(d)] += c;
        LaurentPoly power(1);
        for (int i = 0; i < d; ++i) power *= x_laurent;
        rest -= LaurentPoly::monomial(c, 0) * power;
    }
    return ChebPoly(std::move(out));
}

LaurentPoly from_chebyshev(const ChebPoly& p) {
    const LaurentPoly x_laurent = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
    LaurentPoly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x_laurent;
        acc += LaurentPoly(*it);
    }
    return acc;
}

// ----------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw MathError("division_by_zero", "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    auto [nshift, npoly] = num_.to_poly();
    auto [dshift, dpoly] = den_.to_poly();
    Poly g = gcd(npoly, dpoly);
    if (g.degree() > 0) {
        npoly = npoly / g;
        dpoly = dpoly / g;
    }
    Rational lc = dpoly.lc();
    if (lc != 1) {
        Rational inv = 1 / lc;
        npoly *= inv;
        dpoly *= inv;
    }
    num_ = LaurentPoly::from_poly(npoly, nshift - dshift);
    den_ = LaurentPoly::from_poly(dpoly, 0);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw MathError("division_by_zero", "division by the zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw MathError("division_by_zero", "negative power of zero");
        return RationalFunction(den_, num_).pow(-e);
    }
    RationalFunction result(1);
    RationalFunction base = *this;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1u) result *= base;
        u >>= 1u;
        if (u) base *= base;
    }
    return result;
}

int RationalFunction::degree_weight() const {
    int w = 0;
    if (!num_.is_zero()) w += num_.high() - num_.low();
    if (!den_.is_zero()) w += den_.high() - den_.low();
    return w;
}

std::string RationalFunction::to_string(char var) const {
    if (is_laurent()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction involute(const RationalFunction& f) {
    return RationalFunction(involute(f.num()), involute(f.den()));
}

bool is_symmetric(const RationalFunction& f) { return involute(f) == f; }

}  // namespace wittrank
