#include "forms.hpp"

#include "wittrank/error.hpp"
#include "wittrank/sturm.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace wittrank;
using wtest::rf;

namespace {

// Independent oracle: P(t + 1/t) expanded term by term with binomial
// coefficients, never through from_chebyshev.
LaurentPoly expand_oracle(const ChebPoly& p) {
    LaurentPoly out;
    for (int k = 0; k <= p.degree(); ++k) {
        Integer binom = 1;
        for (int j = 0; j <= k; ++j) {
            out = out + LaurentPoly::monomial(p.coeff(k) * Rational(binom), k - 2 * j);
            binom = binom * (k - j) / (j + 1);
        }
    }
    return out;
}

// Degree-2 irreducibility oracle: no rational root, i.e. the discriminant is
// not a rational square.
bool quadratic_irreducible(const Poly& p) {
    const Rational d = p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
    if (d < 0) return true;
    mpz_class n = d.get_num(), m = d.get_den();
    return !(mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(m.get_mpz_t()));
}

}  // namespace

TEST_CASE("rational printing and parsing") {
    CHECK(to_string(Rational(3, 1)) == "3");
    CHECK(to_string(Rational(-1) / 4) == "-1/4");
    CHECK(parse_rational("-6/4") == Rational(-3) / 2);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK(simplest_between(Rational(8, 5), Rational(2)) == Rational(5, 3));
    CHECK(simplest_between(Rational(-1), Rational(1)) == 0);
    CHECK(simplest_between(Rational(-2), Rational(-13) / 10) == Rational(-3) / 2);
}

TEST_CASE("parse_expr examples") {
    const LaurentPoly d6 = rf("t^-1 - 1 + t").num();
    CHECK(d6 == LaurentPoly(LaurentPoly::Terms{{-1, 1}, {0, -1}, {1, 1}}));
    CHECK(rf("0").is_zero());
    CHECK(rf("(1-t)*(1-t^-1)").num() == LaurentPoly(LaurentPoly::Terms{{-1, -1}, {0, 2}, {1, -1}}));
    CHECK(rf("3/2^2") == RationalFunction(LaurentPoly(Rational(9, 4))));
    CHECK(rf("-t^2") == -rf("t*t"));
    CHECK(rf("1/(1-t) + 1/(1-t^-1)") == RationalFunction(1));
    CHECK_THROWS_AS(rf("1 + "), ParseError);
    CHECK_THROWS_AS(rf("(t"), ParseError);
    CHECK_THROWS_AS(rf("1/(t - t)"), MathError);
    CHECK_THROWS_AS(rf("0^-1"), MathError);
}

TEST_CASE("parse, print, parse is idempotent") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const RationalFunction f(wtest::random_laurent(rng, -3, 3), wtest::random_laurent(rng, -2, 2) + LaurentPoly(7));
        const RationalFunction g = parse_expr(f.to_string());
        CHECK(g == f);
        CHECK(parse_expr(g.to_string()) == g);
    }
}

TEST_CASE("involution") {
    CHECK(involute(rf("t + 2*t^3").num()) == rf("t^-1 + 2*t^-3").num());
    CHECK(involute(wtest::delta6().num()) == wtest::delta6().num());
    CHECK(involute(rf("1 - t").num()) == rf("1 - t^-1").num());
    CHECK(is_symmetric(wtest::delta10().num()));
    CHECK_FALSE(is_symmetric(rf("1 - t").num()));
    CHECK(is_symmetric(LaurentPoly()));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const LaurentPoly p = wtest::random_laurent(rng, -3, 3);
        const LaurentPoly q = wtest::random_laurent(rng, -2, 4);
        CHECK(involute(p * q) == involute(p) * involute(q));
        CHECK(involute(involute(p)) == p);
    }
}

TEST_CASE("Chebyshev coordinates against the expansion oracle") {
    CHECK(to_chebyshev(wtest::delta6().num()) == parse_poly("x - 1"));
    CHECK(to_chebyshev(wtest::delta10().num()) == parse_poly("x^2 - x - 1"));
    CHECK(to_chebyshev(LaurentPoly(5)) == Poly(5));
    CHECK(from_chebyshev(parse_poly("x - 1")) == wtest::delta6().num());
    CHECK(from_chebyshev(parse_poly("x")) == rf("t + t^-1").num());
    CHECK(from_chebyshev(parse_poly("x^2")) == expand_oracle(parse_poly("x^2")));
    CHECK_THROWS_AS(to_chebyshev(rf("1 - t").num()), MathError);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly h = wtest::random_laurent(rng, -3, 3);
        const LaurentPoly p = h + involute(h);
        const ChebPoly c = to_chebyshev(p);
        CHECK(expand_oracle(c) == p);
        CHECK(from_chebyshev(c) == p);
        if (!is_symmetric(h)) CHECK_THROWS_AS(to_chebyshev(h), MathError);
    }
}

TEST_CASE("factor_rational examples") {
    auto f1 = factor_rational(parse_poly("x^2 - x - 1"));
    CHECK(f1.content == 1);
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0].first.cheb == parse_poly("x^2 - x - 1"));
    CHECK(quadratic_irreducible(f1.factors[0].first.cheb));

    auto f2 = factor_rational(parse_poly("2*x^2 - 2"));
    CHECK(f2.content == 2);
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0].first.cheb == parse_poly("x - 1"));
    CHECK(f2.factors[1].first.cheb == parse_poly("x + 1"));

    auto f3 = factor_rational(parse_poly("(x - 1)^2"));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].second == 2);
    CHECK_THROWS_AS(factor_rational(Poly()), MathError);
}

TEST_CASE("factorization of random products recovers the factors") {
    std::vector<Poly> pool;
    for (int n : {5, 7, 8, 9, 10, 11, 12, 13, 15, 16, 18, 20, 24, 30}) pool.push_back(IrreducibleFactor::from_poly(cyclotomic_cheb(n)).cheb);
    for (const char* s : {"x - 3", "2*x + 1", "x^2 + 1", "x^3 - x - 1", "3*x^2 - 5", "x^4 - 10*x^2 + 1"}) pool.push_back(parse_poly(s));
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::map<Poly, int> expected;
        Poly product(Rational(-7) / 3);
        const int k = 1 + trial % 4;
        for (int i = 0; i < k; ++i) {
            const Poly& f = pool[pick(rng)];
            const int m = mult(rng);
            expected[IrreducibleFactor::from_poly(f).cheb] += m;
            product *= f.pow(static_cast<unsigned>(m));
        }
        const Factorization fac = factor_rational(product);
        std::map<Poly, int> got;
        Poly rebuilt(fac.content);
        for (const auto& [f, m] : fac.factors) {
            got[f.cheb] += m;
            rebuilt *= f.cheb.pow(static_cast<unsigned>(m));
            CHECK(f.cheb.lc() > 0);
            CHECK(f.cheb.has_integer_coeffs());
        }
        CHECK(got == expected);
        CHECK(rebuilt == product);
        CHECK(std::is_sorted(fac.factors.begin(), fac.factors.end()));
    }
}

TEST_CASE("factorization handles a large cyclotomic-scale product") {
    // Swinnerton-Dyer style x^4 - 10x^2 + 1 splits modulo every prime.
    const Poly sd = parse_poly("x^4 - 10*x^2 + 1");
    const Poly big = sd * IrreducibleFactor::from_poly(cyclotomic_cheb(61)).cheb;
    const auto fac = factor_rational(big);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first.degree() == 4);
    CHECK(fac.factors[1].first.degree() == 30);
}

TEST_CASE("Sturm counts agree with known rational roots") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-40, 40);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> roots;
        Poly p(1);
        for (int i = 0; i < 5; ++i) {
            Rational r(num(rng), 7);
            r.canonicalize();
            if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
            roots.push_back(r);
            p *= Poly(std::vector<Rational>{-r, 1});
        }
        p *= parse_poly("x^2 + 1");
        const SturmChain chain(p);
        Rational a(num(rng), 5), b(num(rng), 5);
        a.canonicalize();
        b.canonicalize();
        if (a > b) std::swap(a, b);
        const auto expected = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return a < r && r <= b; });
        CHECK(chain.count_roots(a, b) == expected);
    }
}
