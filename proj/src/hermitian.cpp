#include "wittrank/hermitian.hpp"

#include "wittrank/error.hpp"

#include <algorithm>
#include <set>

namespace wittrank {

bool check_hermitian(const Matrix& a) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (a[i][j] != involute(a[j][i])) return false;
        }
    }
    return true;
}

HermitianMatrix::HermitianMatrix(Matrix entries) : a_(std::move(entries)) {
    for (const auto& row : a_) {
        if (row.size() != a_.size()) throw InputError("not_square", "matrix is not square");
    }
    if (!check_hermitian(a_)) throw MathError("not_hermitian", "matrix is not hermitian for t -> 1/t");
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<RationalFunction>& d) {
    Matrix m(d.size(), std::vector<RationalFunction>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return HermitianMatrix(std::move(m));
}

namespace {

Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<RationalFunction>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = RationalFunction(1);
    return m;
}

// row_i += c * row_j
void add_row(Matrix& m, std::size_t i, std::size_t j, const RationalFunction& c) {
    for (std::size_t k = 0; k < m[i].size(); ++k) {
        if (!m[j][k].is_zero()) m[i][k] += c * m[j][k];
    }
}

// col_i += c * col_j
void add_col(Matrix& m, std::size_t i, std::size_t j, const RationalFunction& c) {
    for (auto& row : m) {
        if (!row[j].is_zero()) row[i] += c * row[j];
    }
}

// Congruence by E = I + c e_i e_j^T: rows then columns (with involute(c)).
void add_congruent(Matrix& a, Matrix& p, std::size_t i, std::size_t j, const RationalFunction& c) {
    add_row(a, i, j, c);
    add_col(a, i, j, involute(c));
    add_row(p, i, j, c);
}

void swap_congruent(Matrix& a, Matrix& p, std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
    std::swap(p[i], p[j]);
}

}  // namespace

Diagonalization diagonalize(const HermitianMatrix& input) {
    const std::size_t n = input.size();
    Matrix a = input.entries();
    Matrix p = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i) {
            if (a[i][i].is_zero()) continue;
            if (best == n || a[i][i].degree_weight() < a[best][best].degree_weight()) best = i;
        }
        if (best == n) {
            for (std::size_t i = k; i < n && best == n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (a[i][j].is_zero()) continue;
                    add_congruent(a, p, i, j, a[i][j]);
                    best = i;
                    break;
                }
            }
            if (best == n) throw MathError("singular", "hermitian matrix is singular over Q(t)");
        }
        swap_congruent(a, p, k, best);
        const RationalFunction pivot = a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            add_congruent(a, p, i, k, -(a[i][k] / pivot));
        }
    }
    Diagonalization out;
    out.d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.d.push_back(a[i][i]);
    out.p = std::move(p);
    return out;
}

Matrix congruence(const Matrix& p, const Matrix& a) {
    const std::size_t n = a.size();
    Matrix pa(n, std::vector<RationalFunction>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (p[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[k][j].is_zero()) pa[i][j] += p[i][k] * a[k][j];
            }
        }
    }
    Matrix out(n, std::vector<RationalFunction>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (pa[i][k].is_zero() || p[j][k].is_zero()) continue;
                out[i][j] += pa[i][k] * involute(p[j][k]);
            }
        }
    }
    return out;
}

// ----------------------------------------------------------- normalization

ChebPoly NormalizedEntry::cheb() const {
    ChebPoly p(sign);
    for (const auto& f : circle_factors) p *= f.cheb;
    for (const auto& f : offcircle_factors) p *= f.cheb;
    return p;
}

LaurentPoly NormalizedEntry::laurent() const { return from_chebyshev(cheb()); }

bool NormalizedEntry::contains(const IrreducibleFactor& f) const {
    const auto& set = f.has_circle_roots ? circle_factors : offcircle_factors;
    return std::binary_search(set.begin(), set.end(), f);
}

NormalizedEntry normalize_entry(const RationalFunction& d) {
    if (d.is_zero()) throw MathError("singular", "zero diagonal entry");
    if (!is_symmetric(d)) throw MathError("not_symmetric", "diagonal entry is not symmetric: " + d.to_string());
    // d * den * involute(den) is a symmetric Laurent polynomial with the same class.
    const LaurentPoly p = d.num() * involute(d.den());
    const Factorization fac = factor_rational(to_chebyshev(p));
    const ChebPoly x_minus_2(std::vector<Rational>{-2, 1});
    const ChebPoly x_plus_2(std::vector<Rational>{2, 1});

    NormalizedEntry e;
    e.sign = sgn(fac.content);
    for (const auto& [f, mult] : fac.factors) {
        if (mult % 2 == 0) continue;
        if (f.cheb == x_minus_2) {
            e.sign = -e.sign;
        } else if (f.cheb == x_plus_2) {
            continue;
        } else if (f.has_circle_roots) {
            e.circle_factors.push_back(f);
        } else {
            e.offcircle_factors.push_back(f);
        }
    }
    return e;
}

// ------------------------------------------------------------ WittDiagonal

std::vector<IrreducibleFactor> WittDiagonal::circle_factors() const {
    std::set<IrreducibleFactor> s;
    for (const auto& e : entries) s.insert(e.circle_factors.begin(), e.circle_factors.end());
    return {s.begin(), s.end()};
}

std::vector<IrreducibleFactor> WittDiagonal::all_factors() const {
    std::set<IrreducibleFactor> s;
    for (const auto& e : entries) {
        s.insert(e.circle_factors.begin(), e.circle_factors.end());
        s.insert(e.offcircle_factors.begin(), e.offcircle_factors.end());
    }
    return {s.begin(), s.end()};
}

WittDiagonal normal_form(const HermitianMatrix& a) { return normal_form(diagonalize(a).d); }

WittDiagonal normal_form(const std::vector<RationalFunction>& diagonal) {
    WittDiagonal w;
    w.entries.reserve(diagonal.size());
    for (const auto& d : diagonal) w.entries.push_back(normalize_entry(d));
    return w;
}

WittDiagonal direct_sum(const WittDiagonal& a, const WittDiagonal& b) {
    WittDiagonal out = a;
    out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
    return out;
}

WittDiagonal negate(const WittDiagonal& a) {
    WittDiagonal out = a;
    for (auto& e : out.entries) e.sign = -e.sign;
    return out;
}

WittDiagonal scale(const WittDiagonal& a, int n) {
    if (n < 1) throw InputError("bad_multiple", "scale: multiple must be a positive integer");
    WittDiagonal out;
    for (int i = 0; i < n; ++i) out.entries.insert(out.entries.end(), a.entries.begin(), a.entries.end());
    return out;
}

}  // namespace wittrank
