#include "wittrank/angle.hpp"

#include "wittrank/error.hpp"
#include "wittrank/sturm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wittrank {

namespace {

Rational linear_root(const ChebPoly& q) { return -q.coeff(0) / q.coeff(1); }

// Shrinks the isolating interval by half around the same root.
AlgebraicAngle bisect_with(const AlgebraicAngle& a, const SturmChain* chain) {
    const ChebPoly& q = a.minpoly().cheb;
    if (q.degree() == 1) {
        const Rational r = linear_root(q);
        return AlgebraicAngle(a.minpoly(), (a.lo() + r) / 2, (r + a.hi()) / 2);
    }
    // Degree >= 2 irreducible: no rational roots, so the midpoint is never a root.
    const Rational mid = (a.lo() + a.hi()) / 2;
    if (chain->count_roots(a.lo(), mid) == 1) return AlgebraicAngle(a.minpoly(), a.lo(), mid);
    return AlgebraicAngle(a.minpoly(), mid, a.hi());
}

bool disjoint(const AlgebraicAngle& a, const AlgebraicAngle& b) { return a.hi() < b.lo() || b.hi() < a.lo(); }

// θ-order from disjoint intervals: larger x means smaller θ.
std::strong_ordering order_disjoint(const AlgebraicAngle& a, const AlgebraicAngle& b) {
    return a.lo() > b.hi() ? std::strong_ordering::less : std::strong_ordering::greater;
}

Integer euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

// Alternating-series enclosure of arctan(1/k).
std::pair<Rational, Rational> arctan_inverse(unsigned long k, unsigned bits) {
    const Rational eps(Integer(1), Integer(1) << (bits + 4));
    Rational sum = 0;
    Integer kpow = k;  // k^(2i+1)
    const Integer k2 = Integer(k) * k;
    for (unsigned long i = 0;; ++i) {
        Rational term(Integer(1), kpow * (2 * i + 1));
        term.canonicalize();
        if (term < eps) return {sum - term, sum + term};
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        kpow *= k2;
    }
}

std::pair<Rational, Rational> pi_enclosure(unsigned bits) {
    auto [a5lo, a5hi] = arctan_inverse(5, bits + 6);
    auto [a239lo, a239hi] = arctan_inverse(239, bits + 6);
    return {round_down(16 * a5lo - 4 * a239hi, bits), round_up(16 * a5hi - 4 * a239lo, bits)};
}

// Enclosure of cos(y) for 0 <= y < 3.4, from the alternating Taylor series.
std::pair<Rational, Rational> cos_taylor(const Rational& y, unsigned bits) {
    const Rational eps(Integer(1), Integer(1) << (bits + 4));
    const Rational y2 = y * y;
    Rational sum = 0;
    Rational term = 1;
    for (unsigned long i = 0;; ++i) {
        if (i >= 2 && term < eps) {
            return {round_down(sum - term, bits), round_up(sum + term, bits)};
        }
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        term *= y2;
        term /= Rational(Integer((2 * i + 1) * (2 * i + 2)));
    }
}

}  // namespace

// ------------------------------------------------------------- AlgebraicAngle

AlgebraicAngle::AlgebraicAngle(IrreducibleFactor minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(Rational(-2) < lo_ && lo_ < hi_ && hi_ < Rational(2))) {
        throw std::invalid_argument("AlgebraicAngle: interval must satisfy -2 < lo < hi < 2");
    }
}

AlgebraicAngle AlgebraicAngle::bisected() const {
    if (is_rational()) return bisect_with(*this, nullptr);
    SturmChain chain(minpoly_.cheb);
    return bisect_with(*this, &chain);
}

AlgebraicAngle AlgebraicAngle::refined(const Rational& width) const {
    if (this->width() <= width) return *this;
    AlgebraicAngle a = *this;
    if (is_rational()) {
        while (a.width() > width) a = bisect_with(a, nullptr);
        return a;
    }
    SturmChain chain(minpoly_.cheb);
    while (a.width() > width) a = bisect_with(a, &chain);
    return a;
}

std::strong_ordering compare(const AlgebraicAngle& a0, const AlgebraicAngle& b0) {
    AlgebraicAngle a = a0;
    AlgebraicAngle b = b0;
    if (a.minpoly() == b.minpoly()) {
        std::optional<SturmChain> chain;
        if (!a.is_rational()) chain.emplace(a.minpoly().cheb);
        for (;;) {
            if (disjoint(a, b)) return order_disjoint(a, b);
            if (a.is_rational()) return std::strong_ordering::equal;
            const Rational lo = std::min(a.lo(), b.lo());
            const Rational hi = std::max(a.hi(), b.hi());
            if (chain->count_roots(lo, hi) == 1) return std::strong_ordering::equal;
            if (a.width() >= b.width()) {
                a = bisect_with(a, &*chain);
            } else {
                b = bisect_with(b, &*chain);
            }
        }
    }
    std::optional<SturmChain> ca, cb;
    if (!a.is_rational()) ca.emplace(a.minpoly().cheb);
    if (!b.is_rational()) cb.emplace(b.minpoly().cheb);
    while (!disjoint(a, b)) {
        a = bisect_with(a, ca ? &*ca : nullptr);
        b = bisect_with(b, cb ? &*cb : nullptr);
    }
    return order_disjoint(a, b);
}

std::vector<AlgebraicAngle> isolate_circle_roots(const IrreducibleFactor& q) {
    std::vector<AlgebraicAngle> out;
    if (!q.has_circle_roots) return out;
    if (q.degree() == 1) {
        const Rational r = linear_root(q.cheb);
        const Rational w = std::min<Rational>(r + 2, 2 - r) / 2;
        out.emplace_back(q, r - w, r + w);
        return out;
    }
    SturmChain chain(q.cheb);
    std::vector<std::pair<Rational, Rational>> stack{{Rational(-2), Rational(2)}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int n = chain.count_roots(lo, hi);
        if (n == 0) continue;
        if (n == 1 && lo > -2 && hi < 2) {
            out.emplace_back(q, lo, hi);
            continue;
        }
        const Rational mid = (lo + hi) / 2;
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicAngle& a, const AlgebraicAngle& b) { return a.lo() > b.lo(); });
    return out;
}

int sign_at(const ChebPoly& p, const Rational& x) { return p.sign_at(x); }

std::strong_ordering compare_x(const Rational& x, const AlgebraicAngle& a) {
    if (a.is_rational()) {
        const Rational r = linear_root(a.minpoly().cheb);
        return cmp(r, x) <=> 0;
    }
    if (x <= a.lo()) return std::strong_ordering::greater;
    if (x >= a.hi()) return std::strong_ordering::less;
    // Irrational root, so x is not it: split the interval at x.
    SturmChain chain(a.minpoly().cheb);
    return chain.count_roots(a.lo(), x) == 1 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Rational rational_between(const AnglePoint& a, const AnglePoint& b) {
    const auto* aa = std::get_if<AlgebraicAngle>(&a);
    const auto* ba = std::get_if<AlgebraicAngle>(&b);
    if (!aa && !ba) {
        if (std::get<Boundary>(a) == Boundary::zero && std::get<Boundary>(b) == Boundary::half) return 0;
        throw std::invalid_argument("rational_between: boundaries out of order");
    }
    if (!aa) {
        if (std::get<Boundary>(a) != Boundary::zero) throw std::invalid_argument("rational_between: θ = 1/2 has nothing after it");
        return simplest_between(ba->hi(), Rational(2));
    }
    if (!ba) {
        if (std::get<Boundary>(b) != Boundary::half) throw std::invalid_argument("rational_between: θ = 0 has nothing before it");
        return simplest_between(Rational(-2), aa->lo());
    }
    if (compare(*aa, *ba) != std::strong_ordering::less) throw std::invalid_argument("rational_between: angles not increasing");
    AlgebraicAngle x = *aa;
    AlgebraicAngle y = *ba;
    std::optional<SturmChain> cx, cy;
    if (!x.is_rational()) cx.emplace(x.minpoly().cheb);
    if (!y.is_rational()) cy.emplace(y.minpoly().cheb);
    while (!(x.lo() > y.hi())) {
        x = bisect_with(x, cx ? &*cx : nullptr);
        y = bisect_with(y, cy ? &*cy : nullptr);
    }
    return simplest_between(y.hi(), x.lo());
}

ChebPoly cyclotomic_cheb(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_cheb: n must be positive");
    if (n == 1) return Poly(std::vector<Rational>{-2, 1});
    if (n == 2) return Poly(std::vector<Rational>{2, 1});
    // Φ_n(t) = prod_{d | n} (t^d - 1)^{μ(n/d)}
    Poly num(1), den(1);
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        const int mu = moebius(n / d);
        if (mu == 0) continue;
        Poly f = Poly::monomial(1, d) - Poly(1);
        (mu > 0 ? num : den) *= f;
    }
    Poly phi = num / den;
    const int half = phi.degree() / 2;
    return to_chebyshev(LaurentPoly::from_poly(phi, -half));
}

AlgebraicAngle angle_from_cyclotomic(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n) {
        throw InputError("bad_angle", "cyclotomic angle k/n must lie in (0, 1/2): got " + std::to_string(k) + "/" + std::to_string(n));
    }
    if (std::gcd(n, k) != 1) {
        throw InputError("bad_angle", "cyclotomic angle k/n must be reduced: got " + std::to_string(k) + "/" + std::to_string(n));
    }
    const IrreducibleFactor q = IrreducibleFactor::from_poly(cyclotomic_cheb(n));
    const auto roots = isolate_circle_roots(q);
    std::size_t index = 0;
    for (int j = 1; j < k; ++j) {
        if (std::gcd(n, j) == 1) ++index;
    }
    return roots.at(index);
}

std::pair<Rational, Rational> cos_enclosure(const Rational& theta, unsigned bits) {
    if (theta < 0 || theta > Rational(1, 2)) throw std::invalid_argument("cos_enclosure: θ outside [0, 1/2]");
    if (theta == 0) return {Rational(2), Rational(2)};
    const unsigned p = bits + 8;
    auto [pi_lo, pi_hi] = pi_enclosure(p);
    const Rational y_lo = round_down(2 * theta * pi_lo, p);
    const Rational y_hi = round_up(2 * theta * pi_hi, p);
    Rational lower = (y_hi >= pi_lo) ? Rational(-1) : cos_taylor(y_hi, p).first;
    Rational upper = cos_taylor(y_lo, p).second;
    if (upper > 1) upper = 1;
    if (lower < -1) lower = -1;
    return {2 * lower, 2 * upper};
}

std::strong_ordering compare_theta(const Rational& theta, const AlgebraicAngle& a) {
    if (!(theta > 0 && theta < Rational(1, 2))) throw std::invalid_argument("compare_theta: θ outside (0, 1/2)");
    const Integer& den = theta.get_den();
    // x(θ) has minimal polynomial cyclotomic_cheb(den); only then can it be a root of a's minpoly.
    if (den.fits_sint_p() && euler_phi(static_cast<int>(den.get_si())) == 2 * a.minpoly().degree()) {
        const int n = static_cast<int>(den.get_si());
        if (cyclotomic_cheb(n) == a.minpoly().cheb) {
            return compare(angle_from_cyclotomic(n, static_cast<int>(theta.get_num().get_si())), a);
        }
    }
    AlgebraicAngle r = a;
    for (unsigned bits = 32;; bits *= 2) {
        auto [xl, xh] = cos_enclosure(theta, bits);
        r = r.refined(Rational(Integer(1), Integer(1) << bits));
        if (xh < r.lo()) return std::strong_ordering::greater;
        if (xl > r.hi()) return std::strong_ordering::less;
    }
}

void separate_and_sort(std::vector<AlgebraicAngle>& angles) {
    std::map<ChebPoly, SturmChain> chains;
    auto chain_for = [&](const AlgebraicAngle& a) -> const SturmChain* {
        if (a.is_rational()) return nullptr;
        auto it = chains.find(a.minpoly().cheb);
        if (it == chains.end()) it = chains.emplace(a.minpoly().cheb, SturmChain(a.minpoly().cheb)).first;
        return &it->second;
    };
    for (;;) {
        std::sort(angles.begin(), angles.end(), [](const AlgebraicAngle& a, const AlgebraicAngle& b) { return a.lo() < b.lo(); });
        bool clean = true;
        for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
            if (angles[i].hi() >= angles[i + 1].lo()) {
                clean = false;
                angles[i] = bisect_with(angles[i], chain_for(angles[i]));
                angles[i + 1] = bisect_with(angles[i + 1], chain_for(angles[i + 1]));
            }
        }
        if (clean) break;
    }
    std::reverse(angles.begin(), angles.end());
}

}  // namespace wittrank
