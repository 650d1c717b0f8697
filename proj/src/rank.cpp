#include "wittrank/rank.hpp"

#include "wittrank/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace wittrank {

RankReport rank_from_profile(const SignatureProfile& p) {
    RankReport rep;
    rep.sigma_zero = std::abs(p.sigma_at_zero);
    rep.r = rep.sigma_zero;
    for (int v : p.intervals) rep.s = std::max(rep.s, std::abs(v));
    for (const auto& [factor, points] : p.groups) {
        DeltaReport d{factor, 0, 0, 0};
        for (const auto& g : points) {
            d.max_abs_sigma = std::max(d.max_abs_sigma, std::abs(g.sigma));
            d.max_abs_J = std::max(d.max_abs_J, std::abs(g.J));
        }
        d.r_delta = d.max_abs_sigma + d.max_abs_J;
        rep.r = std::max(rep.r, d.r_delta);
        rep.per_delta.push_back(std::move(d));
    }
    rep.stable_rank = rep.r;
    return rep;
}

RankReport rank_lower_bound(const WittDiagonal& w) { return rank_from_profile(signature_profile(w)); }

int s_norm(const WittDiagonal& w) { return sup_abs_sigma(signature_profile(w)); }

Rational stable_rank(const WittDiagonal& w) { return rank_lower_bound(w).stable_rank; }

Norm parse_norm(const std::string& name) {
    if (name == "s") return Norm::s;
    if (name == "rho_s") return Norm::rho_s;
    throw InputError("bad_norm", "unknown norm '" + name + "' (expected s or rho_s)");
}

std::string to_string(Norm n) { return n == Norm::s ? "s" : "rho_s"; }

SpanData span_data(const SignatureProfile& p1, const SignatureProfile& p2) {
    std::vector<AlgebraicAngle> roots = p1.roots;
    for (const auto& r : p2.roots) {
        if (!p1.groups.count(r.minpoly())) roots.push_back(r);
    }
    separate_and_sort(roots);

    SpanData d;
    d.sigma_zero = {p1.sigma_at_zero, p2.sigma_at_zero};
    for (std::size_t i = 0; i <= roots.size(); ++i) {
        const AnglePoint left = i == 0 ? AnglePoint(Boundary::zero) : AnglePoint(roots[i - 1]);
        const AnglePoint right = i == roots.size() ? AnglePoint(Boundary::half) : AnglePoint(roots[i]);
        const Rational x = rational_between(left, right);
        d.intervals.push_back({p1.interval_value_at_x(x), p2.interval_value_at_x(x)});
    }
    std::set<IrreducibleFactor> factors;
    for (const auto& [f, _] : p1.groups) factors.insert(f);
    for (const auto& [f, _] : p2.groups) factors.insert(f);
    for (const auto& f : factors) {
        const auto it = p1.groups.count(f) ? p1.groups.find(f) : p2.groups.find(f);
        std::vector<std::pair<Functional, Functional>> pts;
        for (const auto& g : it->second) {
            const auto [s1, j1] = p1.value_at(g.angle);
            const auto [s2, j2] = p2.value_at(g.angle);
            pts.push_back({{s1, s2}, {j1, j2}});
        }
        d.groups.emplace_back(f, std::move(pts));
    }
    return d;
}

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

Rational span_value(const SpanData& d, const Rational& x, const Rational& y, Norm norm) {
    Rational best = 0;
    if (norm == Norm::s) {
        for (const auto& f : d.intervals) best = std::max(best, abs_q(f(x, y)));
        return best;
    }
    best = abs_q(d.sigma_zero(x, y));
    for (const auto& [_, pts] : d.groups) {
        Rational ms = 0, mj = 0;
        for (const auto& [s, j] : pts) {
            ms = std::max(ms, abs_q(s(x, y)));
            mj = std::max(mj, abs_q(j(x, y)));
        }
        best = std::max(best, Rational(ms + mj));
    }
    return best;
}

Rational span_value(const WittDiagonal& w1, const WittDiagonal& w2, const Rational& x, const Rational& y, Norm norm) {
    return span_value(span_data(signature_profile(w1), signature_profile(w2)), x, y, norm);
}

std::vector<Functional> ball_constraints(const SpanData& d, Norm norm) {
    std::set<std::pair<Rational, Rational>> seen;
    std::vector<Functional> out;
    auto add = [&](const Rational& a, const Rational& b) {
        if (a == 0 && b == 0) return;
        for (int s : {1, -1}) {
            Functional f{s * a, s * b};
            if (seen.emplace(f.a, f.b).second) out.push_back(f);
        }
    };
    if (norm == Norm::s) {
        for (const auto& f : d.intervals) add(f.a, f.b);
        return out;
    }
    add(d.sigma_zero.a, d.sigma_zero.b);
    for (const auto& [_, pts] : d.groups) {
        for (const auto& [s, __] : pts) {
            for (const auto& [___, j] : pts) {
                add(s.a + j.a, s.b + j.b);
                add(s.a - j.a, s.b - j.b);
            }
        }
    }
    return out;
}

BallPolygon unit_ball(const SpanData& d, Norm norm) {
    const auto cons = ball_constraints(d, norm);
    bool spans = false;
    for (std::size_t i = 0; i < cons.size() && !spans; ++i) {
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
            if (cons[i].a * cons[j].b != cons[j].a * cons[i].b) {
                spans = true;
                break;
            }
        }
    }
    if (!spans) throw MathError("degenerate_ball", "unit ball is unbounded: the two forms have proportional profiles");

    std::set<std::pair<Rational, Rational>> verts;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
            const auto& f = cons[i];
            const auto& g = cons[j];
            const Rational det = f.a * g.b - g.a * f.b;
            if (det == 0) continue;
            const Rational x = (g.b - f.b) / det;
            const Rational y = (f.a - g.a) / det;
            const bool inside = std::all_of(cons.begin(), cons.end(), [&](const Functional& h) { return h(x, y) <= 1; });
            if (inside) verts.emplace(x, y);
        }
    }

    std::vector<std::pair<Rational, Rational>> v(verts.begin(), verts.end());
    auto upper = [](const std::pair<Rational, Rational>& p) { return p.second > 0 || (p.second == 0 && p.first > 0); };
    std::sort(v.begin(), v.end(), [&](const auto& p, const auto& q) {
        if (upper(p) != upper(q)) return upper(p);
        return p.first * q.second - p.second * q.first > 0;
    });
    const auto start = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), start, v.end());
    return BallPolygon{norm, std::move(v)};
}

BallPolygon unit_ball(const WittDiagonal& w1, const WittDiagonal& w2, Norm norm) {
    return unit_ball(span_data(signature_profile(w1), signature_profile(w2)), norm);
}

}  // namespace wittrank
