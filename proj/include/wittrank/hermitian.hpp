#pragma once

#include "wittrank/factor.hpp"
#include "wittrank/laurent.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace wittrank {

using Matrix = std::vector<std::vector<RationalFunction>>;

/// True iff `a` is square and a[i][j] = involute(a[j][i]) for all i, j.
bool check_hermitian(const Matrix& a);

/// Square matrix over Q(t), hermitian for the involution t -> 1/t.
class HermitianMatrix {
public:
    /// Throws InputError if not square, MathError if not hermitian.
    explicit HermitianMatrix(Matrix entries);
    static HermitianMatrix diagonal(const std::vector<RationalFunction>& d);

    std::size_t size() const noexcept { return a_.size(); }
    const Matrix& entries() const noexcept { return a_; }
    const RationalFunction& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

private:
    Matrix a_;
};

/// Result of congruence diagonalization: P * A * involute(P)^T = diag(d).
struct Diagonalization {
    std::vector<RationalFunction> d;
    Matrix p;
};

/// Hermitian Gaussian elimination over Q(t). Pivots on the nonzero diagonal
/// entry of least degree weight; when the remaining diagonal is zero, adds
/// a * (row j) to row i for a nonzero a = A[i][j], making the new pivot
/// 2 a involute(a). Throws MathError if A is singular.
Diagonalization diagonalize(const HermitianMatrix& a);

/// P * A * involute(P)^T.
Matrix congruence(const Matrix& p, const Matrix& a);

/// A diagonal entry reduced modulo rational squares and norms h * involute(h):
/// sign * prod(factors), each factor to the first power, written in x = t + 1/t.
struct NormalizedEntry {
    int sign = 1;
    std::vector<IrreducibleFactor> circle_factors;     // sorted
    std::vector<IrreducibleFactor> offcircle_factors;  // sorted

    /// sign * product of all factors, as a polynomial in x.
    ChebPoly cheb() const;
    /// The same, as a symmetric Laurent polynomial in t.
    LaurentPoly laurent() const;
    bool contains(const IrreducibleFactor& f) const;

    friend bool operator==(const NormalizedEntry&, const NormalizedEntry&) = default;
};

/// Requires d symmetric and nonzero (MathError otherwise). The rational
/// content keeps only its sign; x - 2 = -(t - 1) involute(t - 1) contributes a
/// sign flip and x + 2 = (t + 1) involute(t + 1) nothing.
NormalizedEntry normalize_entry(const RationalFunction& d);

/// Diagonal representative of a Witt class with every entry normalized.
struct WittDiagonal {
    std::vector<NormalizedEntry> entries;

    std::size_t dimension() const noexcept { return entries.size(); }
    /// Distinct factors with circle roots over all entries, sorted.
    std::vector<IrreducibleFactor> circle_factors() const;
    /// Distinct factors of every kind over all entries, sorted.
    std::vector<IrreducibleFactor> all_factors() const;

    friend bool operator==(const WittDiagonal&, const WittDiagonal&) = default;
};

WittDiagonal normal_form(const HermitianMatrix& a);
WittDiagonal normal_form(const std::vector<RationalFunction>& diagonal);

WittDiagonal direct_sum(const WittDiagonal& a, const WittDiagonal& b);
WittDiagonal negate(const WittDiagonal& a);
/// n-fold direct sum; n >= 1.
WittDiagonal scale(const WittDiagonal& a, int n);

}  // namespace wittrank
