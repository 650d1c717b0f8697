#pragma once

#include "wittrank/signature.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wittrank {

struct DeltaReport {
    IrreducibleFactor factor;
    int max_abs_sigma = 0;
    int max_abs_J = 0;
    int r_delta = 0;
};

struct RankReport {
    int r = 0;
    int s = 0;
    int sigma_zero = 0;  // |σ(0)|
    Rational stable_rank;
    std::vector<DeltaReport> per_delta;  // sorted by factor
};

/// r from a profile: per circle factor δ, max |σ| + max |J| over every root
/// of δ, compared against |σ(0)|.
RankReport rank_from_profile(const SignatureProfile& p);

RankReport rank_lower_bound(const WittDiagonal& w);
int s_norm(const WittDiagonal& w);
/// ¼ρ(4w), which equals r(w).
Rational stable_rank(const WittDiagonal& w);

enum class Norm { s, rho_s };
Norm parse_norm(const std::string& name);
std::string to_string(Norm n);

/// The linear functional (x, y) -> a x + b y.
struct Functional {
    Rational a, b;
    Rational operator()(const Rational& x, const Rational& y) const { return a * x + b * y; }
    friend bool operator==(const Functional&, const Functional&) = default;
};

/// The data of x w1 + y w2 that both norms read, as functionals of (x, y).
struct SpanData {
    Functional sigma_zero;
    /// One per gap between consecutive roots of the union of both forms.
    std::vector<Functional> intervals;
    /// Per circle factor of either form: (σ, J) at each of its roots.
    std::vector<std::pair<IrreducibleFactor, std::vector<std::pair<Functional, Functional>>>> groups;
};

SpanData span_data(const SignatureProfile& p1, const SignatureProfile& p2);

/// Norm of x w1 + y w2, by linearity of σ and J.
Rational span_value(const SpanData& d, const Rational& x, const Rational& y, Norm norm);
Rational span_value(const WittDiagonal& w1, const WittDiagonal& w2, const Rational& x, const Rational& y, Norm norm);

struct BallPolygon {
    Norm norm = Norm::s;
    /// Counterclockwise, starting at the lexicographically smallest vertex.
    std::vector<std::pair<Rational, Rational>> vertices;
};

/// {(x, y) : norm(x w1 + y w2) <= 1}. Throws MathError ("degenerate_ball")
/// when the ball is unbounded.
BallPolygon unit_ball(const SpanData& d, Norm norm);
BallPolygon unit_ball(const WittDiagonal& w1, const WittDiagonal& w2, Norm norm);

/// The half-planes f <= 1 cutting out the unit ball.
std::vector<Functional> ball_constraints(const SpanData& d, Norm norm);

}  // namespace wittrank
