// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include "forms.hpp"

#include "wittrank/io.hpp"
#include "wittrank/knot.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace wittrank;
using namespace wtest;

namespace {

// Every form that any criterion touches; criterion 11 checks r >= s on all of them.
std::vector<RankReport> seen;

RankReport report(const WittDiagonal& w) {
    RankReport r = rank_lower_bound(w);
    seen.push_back(r);
    return r;
}

struct Check {
    std::ostringstream why;
    bool ok = true;
    template <class T>
    void expect(bool cond, const T& what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

Rational qabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(-50, 50), d(1, 20);
    Rational q(n(rng), d(rng));
    q.canonicalize();
    return q;
}

std::vector<RationalFunction> permuted(std::vector<RationalFunction> d, std::mt19937_64& rng) {
    std::shuffle(d.begin(), d.end(), rng);
    return d;
}

WittDiagonal knot_form(const SeifertMatrix& v) { return normal_form(hermitianize(v)); }

bool profile_is_zero(const SignatureProfile& p) {
    return std::all_of(p.intervals.begin(), p.intervals.end(), [](int v) { return v == 0; });
}

void c1(Check& c) {
    const RankReport a = report(w1()), b = report(w2()), s = report(direct_sum(w1(), w2()));
    c.expect(a.r == 4, "r(w1) != 4");
    c.expect(b.r == 2, "r(w2) != 2");
    c.expect(s.r == 6, "r(w1+w2) != 6");
    c.expect(a.s == 4, "s(w1) != 4");
    c.expect(b.s == 2, "s(w2) != 2");
    c.expect(s.s == 4, "s(w1+w2) != 4");
}

void c2(Check& c) {
    const SignatureProfile p = signature_profile(direct_sum(w1(), w2()));
    const auto& g = p.groups.at(factor("x^2 - x - 1"));
    std::multiset<int> jumps, sigmas;
    for (const auto& pt : g) {
        jumps.insert(pt.J);
        sigmas.insert(pt.sigma);
    }
    c.expect(g.size() == 2, "delta10 group does not have two roots");
    c.expect(jumps == std::multiset<int>{2, 0}, "jumps at tenth roots are not {2, 0}");
    c.expect(sigmas == std::multiset<int>{2, 4}, "signatures at tenth roots are not {2, 4}");
    c.expect(compare(g[0].angle, angle_from_cyclotomic(10, 1)) == 0 && g[0].J == 2 && g[0].sigma == 2, "point 1/10 wrong");
}

void c3(Check& c) {
    const SpanData d = span_data(signature_profile(w1()), signature_profile(w2()));
    std::mt19937_64 rng(20240603);
    for (int i = 0; i < 25; ++i) {
        const Rational x = random_rational(rng), y = random_rational(rng);
        const Rational rho = std::max(qabs(x + y), qabs(3 * x + y)) + std::max(qabs(x + y), qabs(x - y));
        const Rational s = std::max(qabs(2 * x + 2 * y), qabs(4 * x));
        c.expect(span_value(d, x, y, Norm::rho_s) == rho, "rho_s mismatch at (" + to_string(x) + "," + to_string(y) + ")");
        c.expect(span_value(d, x, y, Norm::s) == s, "s mismatch at (" + to_string(x) + "," + to_string(y) + ")");
    }
}

void c4(Check& c) {
    const SpanData d = span_data(signature_profile(w1()), signature_profile(w2()));
    const BallPolygon s = unit_ball(d, Norm::s);
    const BallPolygon rho = unit_ball(d, Norm::rho_s);
    using P = std::pair<Rational, Rational>;
    const std::set<P> expected{{Rational(1, 4), Rational(1, 4)}, {Rational(-1, 4), Rational(3, 4)},
                               {Rational(-1, 4), Rational(-1, 4)}, {Rational(1, 4), Rational(-3, 4)}};
    c.expect(std::set<P>(s.vertices.begin(), s.vertices.end()) == expected && s.vertices.size() == 4, "s-ball vertices differ");
    c.expect(span_value(d, Rational(1, 6), Rational(1, 6), Norm::rho_s) == 1, "(1/6,1/6) not on the rho_s boundary");
    for (const auto& [x, y] : rho.vertices) {
        c.expect(span_value(d, x, y, Norm::s) <= 1, "rho_s vertex outside the s ball");
        c.expect(span_value(d, x, y, Norm::rho_s) == 1, "rho_s vertex not on its own boundary");
    }
}

void c5(Check& c) {
    StepSpec spec;
    const int ks[] = {1, 3, 5, 7, 9};
    const int js[] = {1, 1, 1, -3, 1};
    for (int i = 0; i < 5; ++i) spec.points.push_back({angle_from_cyclotomic(22, ks[i]), js[i]});
    c.expect(validate_step(spec).empty(), "22nd-root spec rejected");
    c.expect(r_of_step(spec) == 8, "r_of_step != 8");
    const WittDiagonal w = realize(spec);
    c.expect(w.dimension() == 8, "realized dimension != 8");
    const SignatureProfile p = signature_profile(w);
    c.expect(profiles_equal(p, profile_from_step(spec)), "round-trip profile differs");
    std::vector<int> jumps, sigmas;
    for (const auto& b : p.breakpoints) {
        jumps.push_back(b.J);
        sigmas.push_back(b.sigma);
    }
    c.expect(jumps == std::vector<int>{1, 1, 1, -3, 1}, "jumps differ");
    c.expect(sigmas == std::vector<int>{1, 3, 5, 3, 1}, "point signatures differ");
    report(w);
}

void c6(Check& c) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i) {
        const WittDiagonal w = normal_form(random_diagonal(rng, 6));
        const SignatureProfile p = signature_profile(w);
        const RankReport r = report(w);
        const WittDiagonal v = realize(step_from_profile(p));
        c.expect(static_cast<int>(v.dimension()) == r.r, "trial " + std::to_string(i) + ": dimension != r(w)");
        c.expect(profiles_equal(signature_profile(v), p), "trial " + std::to_string(i) + ": profile differs");
        c.expect(report(v).r == r.r, "trial " + std::to_string(i) + ": realized form has a different r");
    }
}

void c7(Check& c) {
    std::mt19937_64 rng(7);
    const auto pool = cyclotomic_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const auto d = random_diagonal(rng, 5);
        const WittDiagonal w = normal_form(d);
        const SignatureProfile p = signature_profile(w);
        const RankReport r = report(w);

        std::vector<RationalFunction> variant = d;
        switch (i % 3) {
            case 0:
                variant = permuted(d, rng);
                break;
            case 1: {
                RationalFunction f = pool[pick(rng)];
                if (i % 2) f = f * pool[pick(rng)];
                variant.push_back(f);
                variant.push_back(-f);
                variant = permuted(variant, rng);
                break;
            }
            default: {
                LaurentPoly h;
                while (h.is_zero()) h = random_laurent(rng, -1, 2);
                const std::size_t k = i % variant.size();
                variant[k] = variant[k] * RationalFunction(h) * RationalFunction(involute(h));
                if (i % 4 == 0) variant[k] = variant[k] / (RationalFunction(h + 5) * RationalFunction(involute(h + 5)));
                break;
            }
        }
        const WittDiagonal v = normal_form(variant);
        const RankReport rv = report(v);
        c.expect(rv.r == r.r && rv.s == r.s, "trial " + std::to_string(i) + ": r or s changed");
        c.expect(profiles_equal(signature_profile(v), p), "trial " + std::to_string(i) + ": profile changed");
    }
}

void c8(Check& c) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const WittDiagonal a = normal_form(random_diagonal(rng, 4));
        const WittDiagonal b = normal_form(random_diagonal(rng, 4));
        const RankReport ra = report(a), rb = report(b);
        c.expect(report(direct_sum(a, b)).r <= ra.r + rb.r, "triangle inequality fails");
        if (i < 20) {
            for (int n = 1; n <= 5; ++n) c.expect(report(scale(a, n)).r == n * ra.r, "homogeneity fails");
        }
        c.expect((ra.r == 0) == profile_is_zero(signature_profile(a)), "r = 0 iff zero profile fails");
        const WittDiagonal z = direct_sum(a, negate(a));
        c.expect(report(z).r == 0 && profile_is_zero(signature_profile(z)), "w - w not zero");
    }
}

void c9(Check& c) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const StepSpec spec = random_step(rng);
        c.expect(validate_step(spec).empty(), "generated spec invalid");
        const int r = r_of_step(spec);
        c.expect(((r - spec.sigma_at_zero) % 2 + 2) % 2 == 0, "r(spec) and sigma(0) differ in parity");
        c.expect(parity(spec), "parity() false");
    }
    // Per-factor jump parity on every profile computed from random forms.
    std::mt19937_64 rng2(99);
    for (int i = 0; i < 100; ++i) {
        const WittDiagonal w = normal_form(random_diagonal(rng2, 6));
        const SignatureProfile p = signature_profile(w);
        report(w);
        for (const auto& [f, pts] : p.groups) {
            int m = 0;
            for (const auto& e : w.entries) m += e.contains(f);
            for (const auto& g : pts) c.expect((g.J - m) % 2 == 0, "J and m differ in parity for " + f.to_string());
        }
    }
}

void c10(Check& c) {
    using V = std::vector<std::vector<Integer>>;
    const SeifertMatrix k51(V{{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}, "5_1");
    const SeifertMatrix k10(V{{-1, -1, 1, 0}, {0, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}}, "10_132");

    const SignatureProfile p10 = signature_profile(knot_form(k10));
    const bool fixture_ok = profiles_equal(p10, signature_profile(w2())) || profiles_equal(p10, signature_profile(negate(w2())));
    c.expect(fixture_ok, "10_132 fixture does not match +-w2");

    report(knot_form(k51));
    report(knot_form(k10));
    c.expect(genus_lower_bound(connected_sum(mirror(k51), k10)) == 3, "g4 bound of mirror(5_1)#10_132 != 3");
    c.expect(genus_lower_bound(k51) == 2, "g4 bound of 5_1 != 2");
    SeifertMatrix k = k51;
    for (int i = 0; i < 3; ++i) k = connected_sum(k, k10);
    c.expect(genus_lower_bound(k) == 3, "g4 bound of 5_1#3(10_132) != 3");
    report(knot_form(k));
    c.expect(profiles_equal(signature_profile(knot_form(k51)), signature_profile(negate(w1()))), "5_1 profile is not -w1");
}

void c11(Check& c) {
    c.expect(!seen.empty(), "no forms recorded");
    std::size_t bad = 0;
    for (const auto& r : seen) bad += r.r < r.s;
    c.expect(bad == 0, std::to_string(bad) + " forms with r < s");
    c.why << (c.ok ? "" : "; ") << "checked " << seen.size() << " forms";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"golden r and s values for w1, w2, w1+w2", c1},
        {"jumps {2,0} and signatures {2,4} at the tenth roots for w1+w2", c2},
        {"span_value matches closed norm formulas at 25 random points", c3},
        {"s-ball parallelogram, (1/6,1/6) on rho_s boundary, rho_s ball inside s ball", c4},
        {"step function at primitive 22nd roots: r = 8, realized in dimension 8, round trip", c5},
        {"50 random forms realized in dimension r with equal profile", c6},
        {"r, s, profile invariant under permutation, metabolic and norm changes", c7},
        {"homogeneity, triangle inequality, r = 0 iff zero profile", c8},
        {"parity r = sigma(0) mod 2 on 100 specs; J = m mod 2 on profiles", c9},
        {"knot genus bounds and 5_1 / 10_132 profile checks", c10},
        {"r >= s on every form above", c11},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.why << "exception: " << e.what();
        }
        failures += !c.ok;
        std::cout << "criterion " << (i + 1) << ": " << (c.ok ? "PASS" : "FAIL") << " - " << criteria[i].first;
        const std::string why = c.why.str();
        if (!why.empty()) std::cout << " (" << why << ")";
        std::cout << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures;
}
