#pragma once

#include "wittrank/laurent.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace wittrank {

/// An irreducible polynomial of Q[x] in canonical form (primitive integer
/// coefficients, positive leading coefficient). Identity is the coefficient
/// sequence; `has_circle_roots` is derived data, true iff some root lies in
/// the open interval (-2, 2), i.e. the matching symmetric Laurent polynomial
/// vanishes at a non-real point of the unit circle.
struct IrreducibleFactor {
    ChebPoly cheb;
    bool has_circle_roots = false;

    /// Canonicalizes `p`, which must be irreducible of degree >= 1.
    static IrreducibleFactor from_poly(const Poly& p);

    int degree() const { return cheb.degree(); }
    std::string to_string() const { return cheb.to_string('x'); }

    friend bool operator==(const IrreducibleFactor& a, const IrreducibleFactor& b) { return a.cheb == b.cheb; }
    friend std::strong_ordering operator<=>(const IrreducibleFactor& a, const IrreducibleFactor& b) { return a.cheb <=> b.cheb; }
};

struct Factorization {
    Rational content;
    /// Sorted by IrreducibleFactor order (degree, then coefficients).
    std::vector<std::pair<IrreducibleFactor, int>> factors;
};

/// Complete factorization over Q: P = content * prod factor^multiplicity.
/// Throws MathError on the zero polynomial.
Factorization factor_rational(const ChebPoly& p);

/// Yun's squarefree decomposition of a nonzero polynomial: returns (a_1, ..., a_k)
/// with p = lc(p) * prod a_i^i, each a_i monic and squarefree, pairwise coprime.
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Irreducible factors of a squarefree primitive integer polynomial with
/// positive leading coefficient (Zassenhaus: factor mod p, Hensel lift,
/// recombine). Returned unsorted, each primitive with positive lc.
std::vector<Poly> factor_squarefree(const Poly& f);

}  // namespace wittrank
