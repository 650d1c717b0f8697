#pragma once

#include "wittrank/expr.hpp"
#include "wittrank/realize.hpp"

#include <random>
#include <string>
#include <vector>

namespace wtest {

using namespace wittrank;

inline RationalFunction rf(const std::string& s) { return parse_expr(s); }

inline RationalFunction delta6() { return rf("t^-1 - 1 + t"); }
inline RationalFunction delta10() { return rf("t^-2 - t^-1 + 1 - t + t^2"); }

inline std::vector<RationalFunction> w1_entries() { return {-(delta10() * delta6()), -delta6(), 1, 1}; }
inline std::vector<RationalFunction> w2_entries() { return {-delta10(), 1}; }

inline WittDiagonal w1() { return normal_form(w1_entries()); }
inline WittDiagonal w2() { return normal_form(w2_entries()); }

inline IrreducibleFactor factor(const std::string& x_poly) { return IrreducibleFactor::from_poly(parse_poly(x_poly)); }

/// Six irreducibles in x = t + 1/t derived from cyclotomic polynomials:
/// the minimal polynomials of 2cos(2π/n) for n = 5, 6, 7, 8, 10, 12.
inline std::vector<RationalFunction> cyclotomic_pool() {
    std::vector<RationalFunction> out;
    for (int n : {5, 6, 7, 8, 10, 12}) out.emplace_back(from_chebyshev(cyclotomic_cheb(n)));
    return out;
}

/// Random diagonal with up to `max_entries` entries, each a random sign times
/// a product of distinct pool members.
inline std::vector<RationalFunction> random_diagonal(std::mt19937_64& rng, int max_entries = 6) {
    static const auto pool = cyclotomic_pool();
    std::uniform_int_distribution<int> count(1, max_entries);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<RationalFunction> out;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        RationalFunction e = coin(rng) ? 1 : -1;
        for (const auto& p : pool) {
            if (coin(rng) && coin(rng)) e = e * p;
        }
        out.push_back(e);
    }
    return out;
}

/// Random Laurent polynomial with exponents in [lo, hi] and small integer coefficients.
inline LaurentPoly random_laurent(std::mt19937_64& rng, int lo, int hi, int bound = 3) {
    std::uniform_int_distribution<int> c(-bound, bound);
    LaurentPoly p;
    for (int k = lo; k <= hi; ++k) p = p + LaurentPoly::monomial(c(rng), k);
    return p;
}

/// Valid random step function: a random set of pool factors, each with a
/// random parity and random half-jumps of that parity at every root.
inline StepSpec random_step(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> jump(-3, 3);
    std::uniform_int_distribution<int> s0(-4, 4);
    StepSpec spec;
    spec.sigma_at_zero = s0(rng);
    for (int n : {5, 6, 7, 8, 10, 12}) {
        if (!coin(rng)) continue;
        const int parity = coin(rng);
        for (const auto& a : isolate_circle_roots(IrreducibleFactor::from_poly(cyclotomic_cheb(n)))) {
            int j = jump(rng);
            if (((j % 2) + 2) % 2 != parity) j += 1;
            spec.points.push_back({a, j});
        }
    }
    std::sort(spec.points.begin(), spec.points.end(), [](const StepPoint& a, const StepPoint& b) { return compare(a.angle, b.angle) < 0; });
    return spec;
}

}  // namespace wtest
