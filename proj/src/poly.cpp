#include "wittrank/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittrank {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = a.degree(); i >= 0; --i) {
        const auto& x = a.c_[static_cast<std::size_t>(i)];
        const auto& y = b.c_[static_cast<std::size_t>(i)];
        if (x < y) return std::strong_ordering::less;
        if (y < x) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / lc();
    return *this * inv;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += Poly(*it);
    }
    return acc;
}

Rational Poly::content() const {
    if (is_zero()) return 0;
    Integer den_lcm = 1;
    for (const auto& a : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& a : c_) {
        Integer n = a.get_num() * (den_lcm / a.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return lc() < 0 ? Rational(-c) : c;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return {};
    Rational c = content();
    if (c < 0) c = -c;
    return *this * Rational(1 / c);
}

bool Poly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return a.get_den() == 1; });
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (i >= 1) {
            mono = std::string(1, var);
            if (i > 1) mono += "^" + std::to_string(i);
        }
        if (i == 0) {
            out += wittrank::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += wittrank::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational inv_lc = 1 / b.lc();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational q = rem[k + db] * inv_lc;
        if (q == 0) continue;
        quo[k] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.primitive_part();
    }
    return a.monic();
}

bool divides(const Poly& b, const Poly& a) { return (a % b).is_zero(); }

}  // namespace wittrank
