#pragma once

#include "wittrank/poly.hpp"
#include "wittrank/rational.hpp"

#include <map>
#include <string>

namespace wittrank {

/// Polynomial in x = t + 1/t. Symmetric Laurent polynomials are exactly the
/// images of these under x -> t + 1/t.
using ChebPoly = Poly;

/// Sparse Laurent polynomial in Q[t, 1/t]: exponent -> nonzero coefficient.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(Terms terms);
    LaurentPoly(const Rational& c);  // NOLINT
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT

    static LaurentPoly monomial(const Rational& c, int exponent);
    static LaurentPoly t() { return monomial(1, 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    Rational coeff(int e) const;
    /// Lowest and highest exponents; the polynomial must be nonzero.
    int low() const { return terms_.begin()->first; }
    int high() const { return terms_.rbegin()->first; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Multiplies by t^k.
    LaurentPoly shifted(int k) const;

    /// Splits p = t^low * q(t) with q an ordinary polynomial, q(0) != 0.
    std::pair<int, Poly> to_poly() const;
    static LaurentPoly from_poly(const Poly& p, int shift = 0);

    std::string to_string(char var = 't') const;

private:
    Terms terms_;
};

/// t -> 1/t.
LaurentPoly involute(const LaurentPoly& p);
bool is_symmetric(const LaurentPoly& p);

/// P with P(t + 1/t) = p(t). Throws MathError if p is not symmetric.
ChebPoly to_chebyshev(const LaurentPoly& p);
LaurentPoly from_chebyshev(const ChebPoly& p);

/// Element of Q(t), kept reduced: den = D(t) an ordinary monic polynomial with
/// D(0) != 0 and gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(LaurentPoly num);  // NOLINT
    RationalFunction(int c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_laurent() const { return den_ == LaurentPoly(1); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;
    RationalFunction pow(int e) const;

    /// Reduced representation is canonical, so equality is structural.
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    /// Sum of the exponent spans of numerator and denominator.
    int degree_weight() const;

    std::string to_string(char var = 't') const;

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

RationalFunction involute(const RationalFunction& f);
bool is_symmetric(const RationalFunction& f);

}  // namespace wittrank
