#pragma once

#include "wittrank/rank.hpp"

#include <map>
#include <string>
#include <vector>

namespace wittrank {

/// Integer Seifert matrix of a knot: 2g x 2g with det(V - V^T) = 1.
class SeifertMatrix {
public:
    /// Throws MathError ("bad_seifert") when the invariants fail.
    explicit SeifertMatrix(std::vector<std::vector<Integer>> v, std::string label = {});

    std::size_t size() const noexcept { return v_.size(); }
    const std::vector<std::vector<Integer>>& entries() const noexcept { return v_; }
    const std::string& label() const noexcept { return label_; }

private:
    std::vector<std::vector<Integer>> v_;
    std::string label_;
};

/// Exact determinant of a square integer matrix.
Integer determinant(const std::vector<std::vector<Integer>>& m);

/// (1 - t) V + (1 - t^-1) V^T.
HermitianMatrix hermitianize(const SeifertMatrix& v);

/// -V^T.
SeifertMatrix mirror(const SeifertMatrix& v);
/// Block diagonal sum.
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

/// ceil(r / 2).
int genus_lower_bound(const WittDiagonal& w);
int genus_lower_bound(const SeifertMatrix& v);

/// Named Seifert matrices, possibly defined through "sum" and "mirror".
using FixtureTable = std::map<std::string, SeifertMatrix>;

/// Evaluates a knot expression over the fixtures:
///   knot := name | "mirror(" knot ")" | "sum(" knot ("," knot)* ")" | n "*" knot
/// Throws InputError on syntax errors and unknown names.
SeifertMatrix evaluate_knot(const std::string& expr, const FixtureTable& fixtures);

}  // namespace wittrank
