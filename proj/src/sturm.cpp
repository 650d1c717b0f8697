#include "wittrank/sturm.hpp"

#include <stdexcept>

namespace wittrank {

namespace {

Poly positive_primitive(const Poly& p) {
    Rational c = p.content();
    if (c < 0) c = -c;
    return p * Rational(1 / c);
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain of the zero polynomial");
    chain_.push_back(positive_primitive(p));
    if (p.degree() == 0) return;
    chain_.push_back(positive_primitive(p.derivative()));
    for (;;) {
        Poly r = chain_[chain_.size() - 2] % chain_.back();
        if (r.is_zero()) break;
        chain_.push_back(positive_primitive(-r));
    }
}

int SturmChain::variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations(a) - variations(b);
}

}  // namespace wittrank
