#include "wittrank/realize.hpp"

#include "wittrank/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace wittrank {

namespace {

// Every root of every listed minimal polynomial, sorted, each with its J.
struct Expanded {
    std::vector<AlgebraicAngle> roots;
    std::vector<int> J;
};

Expanded expand(const StepSpec& spec) {
    std::map<IrreducibleFactor, std::vector<AlgebraicAngle>> by_factor;
    for (const auto& pt : spec.points) by_factor[pt.angle.minpoly()];
    Expanded e;
    for (auto& [f, roots] : by_factor) {
        roots = isolate_circle_roots(f);
        e.roots.insert(e.roots.end(), roots.begin(), roots.end());
    }
    separate_and_sort(e.roots);
    e.J.assign(e.roots.size(), 0);
    for (const auto& pt : spec.points) {
        for (std::size_t i = 0; i < e.roots.size(); ++i) {
            if (e.roots[i].minpoly() == pt.angle.minpoly() && compare(e.roots[i], pt.angle) == 0) {
                e.J[i] = pt.J;
                break;
            }
        }
    }
    return e;
}

void require_valid(const StepSpec& spec) {
    const auto v = validate_step(spec);
    if (v.empty()) return;
    std::string msg = "step function is not realizable:";
    for (const auto& x : v) msg += " (" + std::to_string(x.condition) + ") " + x.message + ";";
    msg.pop_back();
    throw MathError("invalid_step", msg);
}

}  // namespace

std::vector<Violation> validate_step(const StepSpec& spec) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < spec.points.size(); ++i) {
        const auto& a = spec.points[i].angle;
        if (!a.minpoly().has_circle_roots) {
            out.push_back({4, "point " + std::to_string(i) + ": minimal polynomial " + a.minpoly().to_string() + " has no root on the circle"});
        }
        for (std::size_t j = 0; j < i; ++j) {
            const auto& b = spec.points[j].angle;
            if (a.minpoly() == b.minpoly() && compare(a, b) == 0) {
                out.push_back({2, "points " + std::to_string(j) + " and " + std::to_string(i) + " are the same angle"});
            }
        }
    }
    if (!out.empty()) return out;

    std::map<IrreducibleFactor, std::vector<int>> jumps;
    const Expanded e = expand(spec);
    for (std::size_t i = 0; i < e.roots.size(); ++i) jumps[e.roots[i].minpoly()].push_back(e.J[i]);
    for (const auto& [f, js] : jumps) {
        const bool mixed = std::any_of(js.begin(), js.end(), [&](int j) { return (j - js.front()) % 2 != 0; });
        if (mixed) {
            std::string list;
            for (int j : js) list += (list.empty() ? "" : ",") + std::to_string(j);
            out.push_back({5, "jumps over the roots of " + f.to_string() + " have mixed parity [" + list + "]"});
        }
    }
    return out;
}

SignatureProfile profile_from_step(const StepSpec& spec) {
    require_valid(spec);
    Expanded e = expand(spec);
    std::vector<int> intervals{spec.sigma_at_zero};
    for (int j : e.J) intervals.push_back(intervals.back() + 2 * j);
    return SignatureProfile::from_intervals(std::move(e.roots), std::move(intervals));
}

StepSpec step_from_profile(const SignatureProfile& p) {
    StepSpec s;
    s.sigma_at_zero = p.sigma_at_zero;
    const auto& iv = p.intervals;
    for (std::size_t i = 0; i < p.roots.size(); ++i) s.points.push_back({p.roots[i], (iv[i + 1] - iv[i]) / 2});
    return s;
}

int r_of_step(const StepSpec& spec) { return rank_from_profile(profile_from_step(spec)).r; }

bool parity(const StepSpec& spec) {
    const int r = r_of_step(spec);
    return (r - spec.sigma_at_zero) % 2 == 0;
}

WittDiagonal realize(const StepSpec& spec) {
    const SignatureProfile target = profile_from_step(spec);
    const int dim = rank_from_profile(target).r;

    // Minimal polynomials carried by the first max|J| entries.
    std::map<IrreducibleFactor, int> multiplicity;
    for (const auto& [f, pts] : target.groups) {
        int m = 0;
        for (const auto& g : pts) m = std::max(m, std::abs(g.J));
        if (m > 0) multiplicity[f] = m;
    }
    WittDiagonal w;
    w.entries.resize(static_cast<std::size_t>(dim));
    for (const auto& [f, m] : multiplicity) {
        if (m > dim) throw std::logic_error("realize: group multiplicity exceeds dimension");
        for (int i = 0; i < m; ++i) w.entries[static_cast<std::size_t>(i)].circle_factors.push_back(f);
    }

    std::vector<AlgebraicAngle> events;
    std::vector<int> event_J;
    for (std::size_t i = 0; i < target.roots.size(); ++i) {
        if (multiplicity.count(target.roots[i].minpoly())) {
            events.push_back(target.roots[i]);
            event_J.push_back(target.intervals[i + 1] - target.intervals[i]);
        }
    }
    for (auto& j : event_J) j /= 2;

    // Signs near θ = 0: the first (dim + σ(0))/2 entries positive.
    {
        const AnglePoint first = events.empty() ? AnglePoint(Boundary::half) : AnglePoint(events.front());
        const Rational x0 = rational_between(Boundary::zero, first);
        const int positive = (dim + spec.sigma_at_zero) / 2;
        const auto base = entry_signs(w, x0);
        for (std::size_t i = 0; i < w.entries.size(); ++i) {
            const int want = static_cast<int>(i) < positive ? 1 : -1;
            w.entries[i].sign = want * base[i];
        }
    }

    int sigma_left = spec.sigma_at_zero;
    AnglePoint prev = Boundary::zero;
    for (std::size_t k = 0; k < events.size(); ++k) {
        const AlgebraicAngle& alpha = events[k];
        const int J = event_J[k];
        const int m = multiplicity.at(alpha.minpoly());
        const int n = dim - m;
        const int m_plus = (m - J) / 2;
        const int n_plus = (n + sigma_left + J) / 2;
        if (m_plus < 0 || m - m_plus < 0 || n_plus < 0 || n - n_plus < 0 || (m - J) % 2 || (n + sigma_left + J) % 2) {
            throw std::logic_error("realize: negative or fractional target count");
        }
        const Rational c = rational_between(prev, alpha);
        const auto signs = entry_signs(w, c);
        std::vector<std::size_t> flips;
        auto plan = [&](bool in_delta, int want_plus) {
            int have_plus = 0;
            for (std::size_t i = 0; i < w.entries.size(); ++i) {
                if (w.entries[i].contains(alpha.minpoly()) == in_delta && signs[i] > 0) ++have_plus;
            }
            const int from = have_plus > want_plus ? 1 : -1;
            int count = std::abs(have_plus - want_plus);
            for (std::size_t i = 0; i < w.entries.size() && count > 0; ++i) {
                if (w.entries[i].contains(alpha.minpoly()) == in_delta && signs[i] == from) {
                    flips.push_back(i);
                    --count;
                }
            }
        };
        plan(true, m_plus);
        plan(false, n_plus);
        if (!flips.empty()) {
            const IrreducibleFactor barrier = IrreducibleFactor::from_poly(ChebPoly(std::vector<Rational>{-c, 1}));
            for (std::size_t i : flips) {
                auto& cf = w.entries[i].circle_factors;
                cf.insert(std::upper_bound(cf.begin(), cf.end(), barrier), barrier);
            }
        }
        sigma_left += 2 * J;
        prev = alpha;
    }

    if (static_cast<int>(w.dimension()) != dim || !profiles_equal(signature_profile(w), target)) {
        throw std::logic_error("realize: constructed form does not have the requested profile");
    }
    return w;
}

}  // namespace wittrank
