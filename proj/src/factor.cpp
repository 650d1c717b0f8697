#include "wittrank/factor.hpp"

#include "wittrank/error.hpp"
#include "wittrank/sturm.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace wittrank {

IrreducibleFactor IrreducibleFactor::from_poly(const Poly& p) {
    if (p.degree() < 1) throw std::invalid_argument("IrreducibleFactor: constant polynomial");
    IrreducibleFactor f;
    f.cheb = p.primitive_part();
    if (f.cheb.lc() < 0) f.cheb = -f.cheb;
    SturmChain chain(f.cheb);
    int n = chain.count_roots(Rational(-2), Rational(2));
    if (f.cheb.sign_at(Rational(2)) == 0) --n;
    f.has_circle_roots = n > 0;
    return f;
}

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

// ------------------------------------------------------------ arithmetic mod p

struct Fp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1u;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    static void trim(FpPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

    FpPoly add(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
        if (b.empty()) throw std::domain_error("Fp division by zero");
        if (a.size() < b.size()) return {{}, a};
        FpPoly rem = a;
        FpPoly quo(a.size() - b.size() + 1, 0);
        const u64 inv_lc = inv(b.back());
        const std::size_t db = b.size() - 1;
        for (std::size_t k = quo.size(); k-- > 0;) {
            u64 q = mul(rem[k + db], inv_lc);
            if (q == 0) continue;
            quo[k] = q;
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] = sub(rem[k + j], mul(q, b[j]));
        }
        rem.resize(db);
        trim(rem);
        trim(quo);
        return {quo, rem};
    }
    FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
    FpPoly monic(const FpPoly& a) const {
        if (a.empty()) return a;
        const u64 c = inv(a.back());
        FpPoly r = a;
        for (auto& x : r) x = mul(x, c);
        return r;
    }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    FpPoly derivative(const FpPoly& a) const {
        if (a.size() <= 1) return {};
        FpPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
        trim(r);
        return r;
    }
    FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& mod) const {
        FpPoly result{1};
        base = rem(base, mod);
        const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = rem(mul(result, result), mod);
            if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), mod);
        }
        return result;
    }
    // s*a + t*b = 1 for coprime a, b; deg s < deg b, deg t < deg a.
    std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
        FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            FpPoly s2 = sub(s0, mul(q, s1));
            FpPoly t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.size() != 1) throw std::logic_error("bezout: inputs not coprime mod p");
        const u64 c = inv(r0[0]);
        for (auto& x : s0) x = mul(x, c);
        for (auto& x : t0) x = mul(x, c);
        return {s0, t0};
    }

    FpPoly reduce(const Poly& f) const {
        FpPoly r;
        r.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) r.push_back(mpz_fdiv_ui(c.get_num_mpz_t(), p));
        trim(r);
        return r;
    }

    // Distinct-degree factorization of a monic squarefree polynomial.
    std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) const {
        std::vector<std::pair<FpPoly, int>> out;
        const FpPoly x{0, 1};
        FpPoly h = rem(x, f);
        int d = 0;
        while (deg(f) >= 2 * (d + 1)) {
            ++d;
            h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
            FpPoly g = gcd(sub(h, x), f);
            if (deg(g) > 0) {
                out.emplace_back(g, d);
                f = divmod(f, g).first;
                h = rem(h, f);
            }
        }
        if (deg(f) > 0) out.emplace_back(monic(f), deg(f));
        return out;
    }

    // Cantor-Zassenhaus equal-degree splitting (p odd).
    void equal_degree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) const {
        if (deg(g) == d) {
            out.push_back(monic(g));
            return;
        }
        Integer q;
        mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
        Integer e = (q - 1) / 2;
        std::uniform_int_distribution<u64> coef(0, p - 1);
        for (;;) {
            FpPoly a(static_cast<std::size_t>(deg(g)));
            for (auto& c : a) c = coef(rng);
            trim(a);
            if (deg(a) < 1) continue;
            FpPoly b = sub(powmod(a, e, g), FpPoly{1});
            FpPoly c = gcd(b, g);
            if (deg(c) > 0 && deg(c) < deg(g)) {
                equal_degree(c, d, rng, out);
                equal_degree(divmod(g, c).first, d, rng, out);
                return;
            }
        }
    }
};

// -------------------------------------------------------- arithmetic mod m

struct ModRing {
    Integer m;

    static void trim(ZPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    ZPoly reduce(ZPoly a) const {
        for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        trim(a);
        return a;
    }
    ZPoly add(const ZPoly& a, const ZPoly& b) const {
        ZPoly r(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return reduce(std::move(r));
    }
    ZPoly sub(const ZPoly& a, const ZPoly& b) const {
        ZPoly r(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        return reduce(std::move(r));
    }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ZPoly r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return reduce(std::move(r));
    }
    ZPoly scale(const ZPoly& a, const Integer& c) const {
        ZPoly r = a;
        for (auto& x : r) x *= c;
        return reduce(std::move(r));
    }
    // Division by a monic polynomial.
    std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& h) const {
        if (a.size() < h.size()) return {{}, a};
        ZPoly rem = a;
        ZPoly quo(a.size() - h.size() + 1);
        const std::size_t dh = h.size() - 1;
        for (std::size_t k = quo.size(); k-- > 0;) {
            Integer q = rem[k + dh];
            mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
            if (q == 0) continue;
            quo[k] = q;
            for (std::size_t j = 0; j <= dh; ++j) rem[k + j] -= q * h[j];
        }
        rem.resize(dh);
        return {reduce(std::move(quo)), reduce(std::move(rem))};
    }
};

ZPoly to_zpoly(const FpPoly& a) {
    ZPoly r;
    r.reserve(a.size());
    for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

ZPoly to_zpoly(const Poly& f) {
    ZPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.push_back(c.get_num());
    return r;
}

Poly symmetric_lift(const ZPoly& a, const Integer& m) {
    const Integer half = m / 2;
    std::vector<Rational> c;
    c.reserve(a.size());
    for (Integer x : a) {
        if (x > half) x -= m;
        c.emplace_back(x);
    }
    return Poly(std::move(c));
}

struct Lift {
    ZPoly g, h, s, t;
};

// One quadratic Hensel step: f = g*h, s*g + t*h = 1 mod m  ->  the same mod m^2.
Lift hensel_step(const ZPoly& f, const Lift& in, const Integer& m) {
    ModRing r{m * m};
    ZPoly e = r.sub(r.reduce(f), r.mul(in.g, in.h));
    auto [q, rr] = r.divmod_monic(r.mul(in.s, e), in.h);
    Lift out;
    out.g = r.add(in.g, r.add(r.mul(in.t, e), r.mul(q, in.g)));
    out.h = r.add(in.h, rr);
    ZPoly b = r.sub(r.add(r.mul(in.s, out.g), r.mul(in.t, out.h)), ZPoly{Integer(1)});
    auto [c, d] = r.divmod_monic(r.mul(in.s, b), out.h);
    out.s = r.sub(in.s, d);
    out.t = r.sub(in.t, r.add(r.mul(in.t, b), r.mul(c, out.g)));
    return out;
}

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        const u64 limit = 50000;
        std::vector<bool> composite(limit + 1, false);
        for (u64 i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            if (i > 2) out.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw MathError("zero_polynomial", "squarefree decomposition of zero");
    std::vector<Poly> out;
    Poly f = p.monic();
    if (f.degree() == 0) return out;
    Poly a = gcd(f, f.derivative());
    Poly b = f / a;
    Poly c = f.derivative() / a;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly ai = gcd(b, d);
        b = b / ai;
        c = d / ai;
        d = c - b.derivative();
        out.push_back(ai);
    }
    return out;
}

std::vector<Poly> factor_squarefree(const Poly& f) {
    const int n = f.degree();
    if (n <= 1) return {f};

    const Integer lc = f.lc().get_num();
    const auto& primes = small_primes();

    // Pick, among a handful of admissible primes, the one giving the fewest
    // modular factors; a single factor proves irreducibility.
    u64 best_p = 0;
    std::size_t best_count = 0;
    int admissible = 0;
    for (u64 p : primes) {
        if (admissible >= 8) break;
        if (mpz_fdiv_ui(lc.get_mpz_t(), p) == 0) continue;
        Fp F{p};
        FpPoly fp = F.reduce(f);
        if (Fp::deg(fp) != n) continue;
        if (Fp::deg(F.gcd(fp, F.derivative(fp))) > 0) continue;
        ++admissible;
        std::size_t count = 0;
        for (const auto& [g, d] : F.distinct_degree(F.monic(fp))) count += static_cast<std::size_t>(Fp::deg(g) / d);
        if (count == 1) return {f};
        if (best_p == 0 || count < best_count) {
            best_p = p;
            best_count = count;
        }
    }
    if (best_p == 0) throw std::logic_error("factor_squarefree: no admissible prime");

    Fp F{best_p};
    std::mt19937_64 rng(0x5eed + static_cast<u64>(n));
    std::vector<FpPoly> modular;
    for (const auto& [g, d] : F.distinct_degree(F.monic(F.reduce(f)))) F.equal_degree(g, d, rng, modular);
    std::sort(modular.begin(), modular.end());

    // Coefficient bound: 4B^2 = 4 (n+1) 4^n A^2 b^2 covers lc(f)/lc(g) * g for
    // any factor g; lift until the modulus exceeds 2B.
    Integer A = 0;
    for (const auto& c : f.coeffs()) A = std::max<Integer>(A, abs(c.get_num()));
    Integer four_b_sq = Integer(4) * (n + 1) * A * A * lc * lc;
    four_b_sq <<= static_cast<mp_bitcnt_t>(2 * n);
    Integer M = best_p;
    int steps = 0;
    while (M * M <= four_b_sq) {
        M *= M;
        ++steps;
    }

    const ZPoly fz = to_zpoly(f);
    ModRing ring{M};
    std::vector<ZPoly> lifted;
    ZPoly current = ring.reduce(fz);
    const u64 lc_p = mpz_fdiv_ui(lc.get_mpz_t(), best_p);
    for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
        FpPoly rest{lc_p};
        for (std::size_t j = i + 1; j < modular.size(); ++j) rest = F.mul(rest, modular[j]);
        auto [s, t] = F.bezout(rest, modular[i]);
        Lift lift{to_zpoly(rest), to_zpoly(modular[i]), to_zpoly(s), to_zpoly(t)};
        Integer m = best_p;
        for (int k = 0; k < steps; ++k) {
            lift = hensel_step(current, lift, m);
            m *= m;
        }
        lifted.push_back(lift.h);
        current = lift.g;
    }
    {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), current.back().get_mpz_t(), M.get_mpz_t());
        lifted.push_back(ring.scale(current, inv));
    }

    // Recombination by exact trial division over Z.
    std::vector<Poly> out;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    Poly fstar = f;
    std::size_t size = 1;
    while (2 * size <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        do {
            ZPoly g{fstar.lc().get_num()};
            for (std::size_t i : pick) g = ring.mul(g, lifted[remaining[i]]);
            Poly cand = symmetric_lift(g, M).primitive_part();
            if (cand.lc() < 0) cand = -cand;
            if (cand.degree() >= 1 && divides(cand, fstar)) {
                out.push_back(cand);
                fstar = fstar / cand;
                std::vector<std::size_t> keep;
                for (std::size_t i = 0; i < remaining.size(); ++i) {
                    if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
                }
                remaining = std::move(keep);
                found = true;
                break;
            }
        } while (next_combination(pick, remaining.size()));
        if (!found) ++size;
    }
    if (fstar.degree() >= 1) out.push_back(fstar);
    return out;
}

Factorization factor_rational(const ChebPoly& p) {
    if (p.is_zero()) throw MathError("zero_polynomial", "factor_rational: zero polynomial");
    Factorization result;
    result.content = p.content();
    const Poly primitive = p * Rational(1 / result.content);
    if (primitive.degree() == 0) return result;

    const auto parts = squarefree_decomposition(primitive);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() < 1) continue;
        Poly g = parts[i].primitive_part();
        if (g.lc() < 0) g = -g;
        for (const auto& irr : factor_squarefree(g)) {
            result.factors.emplace_back(IrreducibleFactor::from_poly(irr), static_cast<int>(i + 1));
        }
    }
    std::sort(result.factors.begin(), result.factors.end());

    Poly check(result.content);
    for (const auto& [f, m] : result.factors) check *= f.cheb.pow(static_cast<unsigned>(m));
    if (check != p) throw std::logic_error("factor_rational: product check failed for " + p.to_string());
    return result;
}

}  // namespace wittrank
