#pragma once

#include "wittrank/poly.hpp"

#include <vector>

namespace wittrank {

/// Sturm sequence p, p', -rem(p, p'), ... with every member scaled to a
/// primitive integer polynomial by a positive factor (signs are preserved).
class SturmChain {
public:
    explicit SturmChain(const Poly& p);

    /// Sign changes of the chain at x, zeros skipped.
    int variations(const Rational& x) const;

    /// Number of distinct real roots in the half-open interval (a, b].
    int count_roots(const Rational& a, const Rational& b) const;

    const Poly& poly() const { return chain_.front(); }

private:
    std::vector<Poly> chain_;
};

}  // namespace wittrank
