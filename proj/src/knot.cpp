#include "wittrank/knot.hpp"

#include "wittrank/error.hpp"

#include <cctype>

namespace wittrank {

Integer determinant(const std::vector<std::vector<Integer>>& m0) {
    const std::size_t n = m0.size();
    if (n == 0) return 1;
    auto m = m0;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Integer>> v, std::string label)
    : v_(std::move(v)), label_(std::move(label)) {
    const std::size_t n = v_.size();
    for (const auto& row : v_) {
        if (row.size() != n) throw MathError("bad_seifert", "Seifert matrix is not square");
    }
    if (n % 2 != 0) throw MathError("bad_seifert", "Seifert matrix has odd dimension " + std::to_string(n));
    std::vector<std::vector<Integer>> s(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s[i][j] = v_[i][j] - v_[j][i];
    }
    const Integer d = determinant(s);
    if (d != 1) throw MathError("bad_seifert", "det(V - V^T) = " + d.get_str() + ", expected 1");
}

HermitianMatrix hermitianize(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    const RationalFunction a(LaurentPoly(1) - LaurentPoly::t());
    const RationalFunction b = involute(a);
    Matrix m(n, std::vector<RationalFunction>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = a * RationalFunction(Rational(v.entries()[i][j])) + b * RationalFunction(Rational(v.entries()[j][i]));
        }
    }
    return HermitianMatrix(std::move(m));
}

SeifertMatrix mirror(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = -v.entries()[j][i];
    }
    return SeifertMatrix(std::move(m), "mirror(" + v.label() + ")");
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    const std::size_t n = a.size() + b.size();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a.entries()[i][j];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) m[a.size() + i][a.size() + j] = b.entries()[i][j];
    }
    return SeifertMatrix(std::move(m), "sum(" + a.label() + "," + b.label() + ")");
}

int genus_lower_bound(const WittDiagonal& w) { return (rank_lower_bound(w).r + 1) / 2; }

int genus_lower_bound(const SeifertMatrix& v) {
    if (v.size() == 0) return 0;
    return genus_lower_bound(normal_form(hermitianize(v)));
}

namespace {

class KnotParser {
public:
    KnotParser(const std::string& text, const FixtureTable& fixtures) : s_(text), fx_(fixtures) {}

    SeifertMatrix parse() {
        SeifertMatrix k = knot();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing text");
        return k;
    }

private:
    const std::string& s_;
    const FixtureTable& fx_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("knot expression: " + msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-'; }

    SeifertMatrix knot() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
        const std::string word = s_.substr(start, pos_ - start);
        if (word.empty()) fail("expected a knot name");
        if (word == "mirror" && eat('(')) {
            SeifertMatrix k = knot();
            expect(')');
            return mirror(k);
        }
        if (word == "sum" && eat('(')) {
            SeifertMatrix k = knot();
            while (eat(',')) k = connected_sum(k, knot());
            expect(')');
            return k;
        }
        if (eat('*')) {
            const bool digits = word.find_first_not_of("0123456789") == std::string::npos;
            if (!digits || word.size() > 4 || std::stoi(word) < 1) {
                pos_ = start;
                fail("multiplier must be a positive integer");
            }
            const int n = std::stoi(word);
            const SeifertMatrix base = knot();
            SeifertMatrix k = base;
            for (int i = 1; i < n; ++i) k = connected_sum(k, base);
            return k;
        }
        const auto it = fx_.find(word);
        if (it == fx_.end()) throw InputError("unknown_knot", "unknown knot '" + word + "'", "offset " + std::to_string(start));
        return it->second;
    }
};

}  // namespace

SeifertMatrix evaluate_knot(const std::string& expr, const FixtureTable& fixtures) {
    return KnotParser(expr, fixtures).parse();
}

}  // namespace wittrank
