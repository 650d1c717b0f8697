#include "forms.hpp"

#include "wittrank/error.hpp"

#include <doctest.h>

#include <random>

using namespace wittrank;

namespace {

StepSpec step22() {
    StepSpec s;
    const int ks[] = {1, 3, 5, 7, 9};
    const int js[] = {1, 1, 1, -3, 1};
    for (int i = 0; i < 5; ++i) s.points.push_back({angle_from_cyclotomic(22, ks[i]), js[i]});
    return s;
}

}  // namespace

TEST_CASE("validate_step") {
    CHECK(validate_step(step22()).empty());
    StepSpec bad;
    bad.points = {{angle_from_cyclotomic(10, 1), 1}, {angle_from_cyclotomic(10, 3), 2}};
    const auto v = validate_step(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].condition == 5);
    StepSpec empty;
    empty.sigma_at_zero = 3;
    CHECK(validate_step(empty).empty());
    // Only one root of x^2 - x - 1 listed: the other has J = 0, of the wrong parity.
    StepSpec half;
    half.points = {{angle_from_cyclotomic(10, 1), 1}};
    CHECK(validate_step(half).size() == 1);
    StepSpec dup;
    dup.points = {{angle_from_cyclotomic(6, 1), 2}, {angle_from_cyclotomic(6, 1), 2}};
    REQUIRE(validate_step(dup).size() == 1);
    CHECK(validate_step(dup)[0].condition == 2);
    CHECK_THROWS_AS(realize(bad), MathError);
}

TEST_CASE("r_of_step and parity") {
    const SignatureProfile p = profile_from_step(step22());
    std::vector<int> points;
    for (const auto& b : p.breakpoints) points.push_back(b.sigma);
    CHECK(points == std::vector<int>{1, 3, 5, 3, 1});
    CHECK(r_of_step(step22()) == 8);
    CHECK(parity(step22()));
    const SignatureProfile w12 = signature_profile(direct_sum(wtest::w1(), wtest::w2()));
    CHECK(r_of_step(step_from_profile(w12)) == 6);
    StepSpec empty;
    empty.sigma_at_zero = 3;
    CHECK(r_of_step(empty) == 3);
    CHECK(parity(step_from_profile(signature_profile(wtest::w2()))));
}

TEST_CASE("realize examples") {
    const WittDiagonal f = realize(step22());
    CHECK(f.dimension() == 8);
    CHECK(profiles_equal(signature_profile(f), profile_from_step(step22())));
    CHECK(rank_lower_bound(f).r == 8);

    const WittDiagonal a = realize(step_from_profile(signature_profile(wtest::w1())));
    CHECK(a.dimension() == 4);
    CHECK(profiles_equal(signature_profile(a), signature_profile(wtest::w1())));

    StepSpec two;
    two.sigma_at_zero = 2;
    const WittDiagonal d = realize(two);
    REQUIRE(d.dimension() == 2);
    for (const auto& e : d.entries) {
        CHECK(e.sign == 1);
        CHECK(e.circle_factors.empty());
    }
}

TEST_CASE("realize round trip on random specs") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const StepSpec spec = wtest::random_step(rng);
        REQUIRE(validate_step(spec).empty());
        CHECK(parity(spec));
        const WittDiagonal w = realize(spec);
        const SignatureProfile p = signature_profile(w);
        CHECK(static_cast<int>(w.dimension()) == r_of_step(spec));
        CHECK(profiles_equal(p, profile_from_step(spec)));
        CHECK(rank_lower_bound(w).r == r_of_step(spec));
        // Barrier factors are linear with a rational root and never jump.
        for (const auto& [f, pts] : p.groups) {
            if (f.degree() != 1 || spec.points.empty()) continue;
            bool listed = false;
            for (const auto& sp : spec.points) listed = listed || sp.angle.minpoly() == f;
            if (listed) continue;
            for (const auto& g : pts) CHECK(g.J == 0);
        }
    }
}
