#pragma once

#include "wittrank/rational.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace wittrank {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT

    static Poly monomial(const Rational& c, int degree);
    static Poly x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Rational& lc() const { return c_.back(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;
    /// Canonical order: by degree, then coefficients from the leading one down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sgn(eval(x)); }

    Poly derivative() const;
    Poly monic() const;
    Poly pow(unsigned e) const;

    /// this(inner(x)).
    Poly compose(const Poly& inner) const;

    /// Scales by a positive rational so that all coefficients are coprime
    /// integers; the sign of the leading coefficient is kept.
    Poly primitive_part() const;
    /// Rational c with *this = c * primitive_part() and sign(c) = sign(lc).
    Rational content() const;
    bool has_integer_coeffs() const;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// True iff b divides a exactly.
bool divides(const Poly& b, const Poly& a);

}  // namespace wittrank
