#include "wittrank/signature.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace wittrank {

SignatureProfile SignatureProfile::from_intervals(std::vector<AlgebraicAngle> roots, std::vector<int> intervals) {
    if (intervals.size() != roots.size() + 1) throw std::invalid_argument("from_intervals: need one more interval than roots");
    SignatureProfile p;
    p.sigma_at_zero = intervals.front();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const int left = intervals[i];
        const int right = intervals[i + 1];
        if ((left - right) % 2 != 0) throw std::invalid_argument("from_intervals: interval values of mixed parity");
        GroupPoint g{roots[i], (left + right) / 2, (right - left) / 2};
        if (g.J != 0) p.breakpoints.push_back(g);
        p.groups[roots[i].minpoly()].push_back(std::move(g));
    }
    p.roots = std::move(roots);
    p.intervals = std::move(intervals);
    return p;
}

std::pair<int, int> SignatureProfile::value_at(const AlgebraicAngle& a) const {
    const auto it = std::partition_point(roots.begin(), roots.end(),
                                         [&](const AlgebraicAngle& r) { return compare(r, a) < 0; });
    const auto i = static_cast<std::size_t>(it - roots.begin());
    if (it != roots.end() && it->minpoly() == a.minpoly() && compare(*it, a) == 0) {
        return {(intervals[i] + intervals[i + 1]) / 2, (intervals[i + 1] - intervals[i]) / 2};
    }
    return {intervals[i], 0};
}

int SignatureProfile::interval_value_at_x(const Rational& x) const {
    const auto it = std::partition_point(roots.begin(), roots.end(),
                                         [&](const AlgebraicAngle& r) { return compare_x(x, r) > 0; });
    return intervals[static_cast<std::size_t>(it - roots.begin())];
}

std::vector<int> entry_signs(const WittDiagonal& w, const Rational& x) {
    std::vector<int> out;
    out.reserve(w.entries.size());
    for (const auto& e : w.entries) {
        int s = e.sign;
        for (const auto& f : e.circle_factors) s *= sign_at(f.cheb, x);
        for (const auto& f : e.offcircle_factors) s *= sign_at(f.cheb, x);
        out.push_back(s);
    }
    return out;
}

SignatureProfile signature_profile(const WittDiagonal& w) {
    std::vector<AlgebraicAngle> roots;
    for (const auto& f : w.circle_factors()) {
        auto r = isolate_circle_roots(f);
        roots.insert(roots.end(), r.begin(), r.end());
    }
    separate_and_sort(roots);
    std::vector<int> intervals;
    intervals.reserve(roots.size() + 1);
    for (std::size_t i = 0; i <= roots.size(); ++i) {
        const AnglePoint left = i == 0 ? AnglePoint(Boundary::zero) : AnglePoint(roots[i - 1]);
        const AnglePoint right = i == roots.size() ? AnglePoint(Boundary::half) : AnglePoint(roots[i]);
        const Rational x = rational_between(left, right);
        int total = 0;
        for (int s : entry_signs(w, x)) total += s;
        intervals.push_back(total);
    }
    return SignatureProfile::from_intervals(std::move(roots), std::move(intervals));
}

Rational evaluate_sigma(const SignatureProfile& p, const Rational& theta) {
    if (theta < 0 || theta >= Rational(1, 2)) throw std::invalid_argument("evaluate_sigma: θ outside [0, 1/2)");
    if (theta == 0) return p.sigma_at_zero;
    const auto it = std::partition_point(p.roots.begin(), p.roots.end(),
                                         [&](const AlgebraicAngle& r) { return compare_theta(theta, r) > 0; });
    const auto i = static_cast<std::size_t>(it - p.roots.begin());
    if (it != p.roots.end() && compare_theta(theta, *it) == 0) {
        return Rational(p.intervals[i] + p.intervals[i + 1]) / 2;
    }
    return p.intervals[i];
}

bool profiles_equal(const SignatureProfile& a, const SignatureProfile& b) {
    if (a.sigma_at_zero != b.sigma_at_zero) return false;
    if (a.breakpoints.size() != b.breakpoints.size()) return false;
    for (std::size_t i = 0; i < a.breakpoints.size(); ++i) {
        const auto& x = a.breakpoints[i];
        const auto& y = b.breakpoints[i];
        if (x.sigma != y.sigma || x.J != y.J) return false;
        if (!(x.angle.minpoly() == y.angle.minpoly()) || compare(x.angle, y.angle) != 0) return false;
    }
    return true;
}

std::pair<Rational, Rational> breakpoint_flanks(const SignatureProfile& p, std::size_t i) {
    const AlgebraicAngle& a = p.breakpoints.at(i).angle;
    const auto it = std::partition_point(p.roots.begin(), p.roots.end(),
                                         [&](const AlgebraicAngle& r) { return compare(r, a) < 0; });
    const auto k = static_cast<std::size_t>(it - p.roots.begin());
    const AlgebraicAngle* prev = k > 0 ? &p.roots[k - 1] : nullptr;
    const AlgebraicAngle* next = k + 1 < p.roots.size() ? &p.roots[k + 1] : nullptr;
    Rational lo = 0;
    Rational hi(1, 2);
    const Rational max_width(1, 64);
    for (;;) {
        const bool lo_ok = lo > 0 && (!prev || compare_theta(lo, *prev) > 0);
        const bool hi_ok = hi < Rational(1, 2) && (!next || compare_theta(hi, *next) < 0);
        if (lo_ok && hi_ok && hi - lo <= max_width) return {lo, hi};
        const Rational mid = (lo + hi) / 2;
        const auto c = compare_theta(mid, a);
        if (c < 0) {
            lo = mid;
        } else if (c > 0) {
            hi = mid;
        } else {
            hi = (mid + hi) / 2;
        }
    }
}

std::vector<std::pair<Rational, Rational>> sample_plot(const SignatureProfile& p, int n) {
    if (n < 2) throw std::invalid_argument("sample_plot: need at least two samples");
    std::set<Rational> thetas;
    for (int i = 0; i < n; ++i) thetas.insert(Rational(i) / (2 * n));
    for (std::size_t i = 0; i < p.breakpoints.size(); ++i) {
        auto [lo, hi] = breakpoint_flanks(p, i);
        thetas.insert(lo);
        thetas.insert(hi);
    }
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(thetas.size());
    for (const auto& t : thetas) out.emplace_back(t, evaluate_sigma(p, t));
    return out;
}

int sup_abs_sigma(const SignatureProfile& p) {
    int s = 0;
    for (int v : p.intervals) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace wittrank
