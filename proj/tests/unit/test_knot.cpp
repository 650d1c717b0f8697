#include "forms.hpp"

#include "wittrank/error.hpp"
#include "wittrank/knot.hpp"

#include <doctest.h>

using namespace wittrank;

namespace {

using V = std::vector<std::vector<Integer>>;

SeifertMatrix k5_1() { return SeifertMatrix(V{{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}, "5_1"); }
// Published table entry for 10_132.
SeifertMatrix k10_132() { return SeifertMatrix(V{{-1, -1, 1, 0}, {0, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}}, "10_132"); }

SignatureProfile profile_of(const SeifertMatrix& v) { return signature_profile(normal_form(hermitianize(v))); }

}  // namespace

TEST_CASE("Seifert matrix validation") {
    CHECK_THROWS_AS(SeifertMatrix(V{{1}}), MathError);
    CHECK_THROWS_AS(SeifertMatrix(V{{1, 0}, {0, 1}}), MathError);
    CHECK_NOTHROW(SeifertMatrix(V{{0, 1}, {0, 0}}));
    CHECK(determinant(V{{2, 1}, {1, 3}}) == 5);
    CHECK(determinant(V{{0, 1, 0}, {1, 0, 0}, {0, 0, 4}}) == -4);
}

TEST_CASE("hermitianize") {
    const HermitianMatrix a = hermitianize(k5_1());
    CHECK(a.size() == 4);
    CHECK(check_hermitian(a.entries()));
    CHECK(a(0, 1) == wtest::rf("1 - t"));
    CHECK(a(0, 0) == wtest::rf("t - 2 + t^-1"));
    const auto p0 = profile_of(SeifertMatrix(V{{0, 1}, {0, 0}}));
    CHECK(rank_lower_bound(normal_form(hermitianize(SeifertMatrix(V{{0, 1}, {0, 0}})))).r == 0);
    CHECK(p0.breakpoints.empty());
}

TEST_CASE("5_1 matches -w1 and 10_132 matches w2 at breakpoint level") {
    CHECK(profiles_equal(profile_of(k5_1()), signature_profile(negate(wtest::w1()))));
    CHECK(profiles_equal(profile_of(mirror(k5_1())), signature_profile(wtest::w1())));
    CHECK(profiles_equal(profile_of(k10_132()), signature_profile(wtest::w2())));
}

TEST_CASE("mirror and connected sum") {
    const auto p = profile_of(k5_1());
    const auto m = profile_of(mirror(k5_1()));
    CHECK(m.intervals.size() == p.intervals.size());
    for (std::size_t i = 0; i < p.intervals.size(); ++i) CHECK(m.intervals[i] == -p.intervals[i]);
    CHECK(profiles_equal(profile_of(mirror(mirror(k5_1()))), p));
    const auto s = profile_of(connected_sum(k5_1(), k10_132()));
    const auto q = profile_of(k10_132());
    for (const Rational t : {Rational(1, 20), Rational(1, 5), Rational(2, 5), Rational(1, 10), Rational(3, 10)}) {
        CHECK(evaluate_sigma(s, t) == evaluate_sigma(p, t) + evaluate_sigma(q, t));
    }
}

TEST_CASE("genus bounds") {
    CHECK(genus_lower_bound(connected_sum(mirror(k5_1()), k10_132())) == 3);
    CHECK(genus_lower_bound(k5_1()) == 2);
    SeifertMatrix k = k5_1();
    for (int i = 0; i < 3; ++i) k = connected_sum(k, k10_132());
    CHECK(genus_lower_bound(k) == 3);
    CHECK(genus_lower_bound(connected_sum(k5_1(), mirror(k5_1()))) == 0);
    CHECK(genus_lower_bound(connected_sum(k10_132(), mirror(k10_132()))) == 0);
    CHECK(genus_lower_bound(normal_form(std::vector<RationalFunction>{1, 1, 1})) == 2);
}

TEST_CASE("knot expressions") {
    const FixtureTable fx{{"5_1", k5_1()}, {"10_132", k10_132()}};
    CHECK(genus_lower_bound(evaluate_knot("sum(mirror(5_1),10_132)", fx)) == 3);
    CHECK(genus_lower_bound(evaluate_knot(" sum( 5_1 , 3*10_132 ) ", fx)) == 3);
    CHECK(evaluate_knot("3*10_132", fx).size() == 12);
    CHECK_THROWS_AS(evaluate_knot("sum(5_1", fx), ParseError);
    CHECK_THROWS_AS(evaluate_knot("7_4", fx), InputError);
    CHECK_THROWS_AS(evaluate_knot("0*5_1", fx), ParseError);
}
