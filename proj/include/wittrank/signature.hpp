#pragma once

#include "wittrank/angle.hpp"
#include "wittrank/hermitian.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wittrank {

/// Value of the signature function at a root: the average of the two
/// adjacent interval values and half their difference.
struct GroupPoint {
    AlgebraicAngle angle;
    int sigma = 0;
    int J = 0;
};

/// A group point with J != 0.
using Breakpoint = GroupPoint;

/// Exact step function σ on [0, 1/2) together with its jump data.
///
/// `roots` lists every unit-circle root of every circle factor of the source
/// form in increasing θ, with pairwise disjoint isolating intervals;
/// `intervals[i]` is the constant value between roots i-1 and i, so
/// intervals.front() = σ(0) and intervals.size() = roots.size() + 1.
struct SignatureProfile {
    int sigma_at_zero = 0;
    std::vector<AlgebraicAngle> roots;
    std::vector<int> intervals;
    std::vector<Breakpoint> breakpoints;
    std::map<IrreducibleFactor, std::vector<GroupPoint>> groups;

    /// Builds the derived fields from sorted, separated roots and the
    /// interval values between them. Throws std::invalid_argument if two
    /// adjacent interval values differ in parity.
    static SignatureProfile from_intervals(std::vector<AlgebraicAngle> roots, std::vector<int> intervals);

    /// (σ, J) at an arbitrary angle: the group point if it is a root,
    /// otherwise the surrounding interval value and 0.
    std::pair<int, int> value_at(const AlgebraicAngle& a) const;
    /// Interval value at the point with coordinate x, which must not be a root.
    int interval_value_at_x(const Rational& x) const;
};

SignatureProfile signature_profile(const WittDiagonal& w);

/// Sign of every entry at the point x (not a root of any factor).
std::vector<int> entry_signs(const WittDiagonal& w, const Rational& x);

/// σ(θ) for rational θ in [0, 1/2): the interval value, or the point
/// average when θ hits a root exactly.
Rational evaluate_sigma(const SignatureProfile& p, const Rational& theta);

/// Equal σ(0) and identical breakpoints (angle, σ, J). Group points with
/// J = 0 are ignored.
bool profiles_equal(const SignatureProfile& a, const SignatureProfile& b);

/// n evenly spaced samples θ = i/(2n), i < n, plus one dyadic θ on each side
/// of every breakpoint, sorted by θ without duplicates. Requires n >= 2.
std::vector<std::pair<Rational, Rational>> sample_plot(const SignatureProfile& p, int n);

/// Dyadic θ-values (left, right) bracketing the breakpoint with index i and
/// no other root.
std::pair<Rational, Rational> breakpoint_flanks(const SignatureProfile& p, std::size_t i);

/// max |interval value|.
int sup_abs_sigma(const SignatureProfile& p);

}  // namespace wittrank
