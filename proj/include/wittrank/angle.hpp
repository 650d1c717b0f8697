#pragma once

#include "wittrank/factor.hpp"

#include <compare>
#include <variant>
#include <vector>

namespace wittrank {

/// A point θ in (0, 1/2) with e^{2πiθ} algebraic, held in the coordinate
/// x = 2cos(2πθ) as an irreducible polynomial plus an isolating interval.
/// x decreases as θ increases, so θ-order is reverse x-order.
///
/// Values are immutable; refinement returns a new angle with a narrower
/// interval around the same root.
class AlgebraicAngle {
public:
    /// `lo < hi`, both inside (-2, 2), neither a root, exactly one root between.
    AlgebraicAngle(IrreducibleFactor minpoly, Rational lo, Rational hi);

    const IrreducibleFactor& minpoly() const noexcept { return minpoly_; }
    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }

    /// One bisection step.
    AlgebraicAngle bisected() const;
    /// Bisects until the interval is no wider than `width`.
    AlgebraicAngle refined(const Rational& width) const;

    /// x-value when the root is rational (linear minimal polynomial).
    bool is_rational() const { return minpoly_.degree() == 1; }

private:
    IrreducibleFactor minpoly_;
    Rational lo_, hi_;
};

/// Total order by θ. Equal iff same minimal polynomial and the same root.
std::strong_ordering compare(const AlgebraicAngle& a, const AlgebraicAngle& b);
inline bool operator==(const AlgebraicAngle& a, const AlgebraicAngle& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const AlgebraicAngle& a, const AlgebraicAngle& b) { return compare(a, b); }

/// One angle per root of q in (-2, 2), sorted by increasing θ, with pairwise
/// disjoint isolating intervals.
std::vector<AlgebraicAngle> isolate_circle_roots(const IrreducibleFactor& q);

/// Compares the point with coordinate x in (-2, 2) against `a`, in θ-order
/// (so a larger x compares less).
std::strong_ordering compare_x(const Rational& x, const AlgebraicAngle& a);

/// Exact sign of P(x).
int sign_at(const ChebPoly& p, const Rational& x);

/// θ = 0 (x = 2) and θ = 1/2 (x = -2) are interval ends, never angles.
enum class Boundary { zero, half };
using AnglePoint = std::variant<Boundary, AlgebraicAngle>;

/// A rational x strictly between the x-values of `a` and `b`, where a < b in
/// θ-order. Chosen as the simplest rational of the separating gap.
Rational rational_between(const AnglePoint& a, const AnglePoint& b);

/// θ = k/n; requires gcd(k, n) = 1 and 0 < k/n < 1/2.
AlgebraicAngle angle_from_cyclotomic(int n, int k);

/// Minimal polynomial of 2cos(2π/n) for n >= 3 (of 2 and -2 for n = 1, 2).
ChebPoly cyclotomic_cheb(int n);

/// Compares a rational θ in (0, 1/2) with an algebraic angle, exactly.
std::strong_ordering compare_theta(const Rational& theta, const AlgebraicAngle& a);

/// Refines the angles in place until their intervals are pairwise disjoint,
/// then sorts them by θ. The angles must be pairwise distinct.
void separate_and_sort(std::vector<AlgebraicAngle>& angles);

/// Rigorous enclosure [lo, hi] of 2cos(2πθ) for rational θ in [0, 1/2],
/// width at most about 2^-bits.
std::pair<Rational, Rational> cos_enclosure(const Rational& theta, unsigned bits);

}  // namespace wittrank
