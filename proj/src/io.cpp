#include "wittrank/io.hpp"

#include "wittrank/error.hpp"
#include "wittrank/expr.hpp"
#include "wittrank/sturm.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wittrank {

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("bad_json", e.what(), "byte " + std::to_string(e.byte));
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("io_error", "cannot open '" + path + "'", path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw InputError("bad_json", e.what(), path + ": byte " + std::to_string(e.byte));
    }
}

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError("bad_schema", "missing field '" + std::string(key) + "'", where);
    return j.at(key);
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError("bad_schema", "expected an integer", where);
    const auto v = j.get<long long>();
    if (v < -1000000000LL || v > 1000000000LL) throw InputError("bad_schema", "integer out of range", where);
    return static_cast<int>(v);
}

std::string as_text(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    throw InputError("bad_schema", "expected a string", where);
}

RationalFunction parse_entry(const json& j, const std::string& where) {
    const std::string text = as_text(j, where);
    try {
        return parse_expr(text);
    } catch (const ParseError& e) {
        throw InputError(e.code(), e.what(), where + ": " + e.location().value_or(""));
    } catch (const Error& e) {
        if (e.location()) throw;
        if (dynamic_cast<const MathError*>(&e)) throw MathError(e.code(), e.what(), where);
        throw InputError(e.code(), e.what(), where);
    }
}

Rational parse_rational_field(const json& j, const std::string& where) {
    const std::string text = as_text(j, where);
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw InputError(e.code(), e.what(), where);
    }
}

std::string kind_of(const json& j) {
    const json& k = field(j, "kind", "form");
    if (!k.is_string()) throw InputError("bad_schema", "'kind' must be a string", "kind");
    const std::string kind = k.get<std::string>();
    if (kind != "matrix" && kind != "diagonal") {
        throw InputError("bad_schema", "unknown form kind '" + kind + "' (expected matrix or diagonal)", "kind");
    }
    return kind;
}

std::vector<RationalFunction> load_diagonal(const json& j) {
    const json& e = field(j, "entries", "form");
    if (!e.is_array()) throw InputError("bad_schema", "'entries' must be a list", "entries");
    std::vector<RationalFunction> d;
    for (std::size_t i = 0; i < e.size(); ++i) d.push_back(parse_entry(e[i], "entries[" + std::to_string(i) + "]"));
    return d;
}

json interval_json(const AlgebraicAngle& a) { return json::array({to_string(a.lo()), to_string(a.hi())}); }

}  // namespace

HermitianMatrix load_matrix(const json& j) {
    if (kind_of(j) == "diagonal") return HermitianMatrix::diagonal(load_diagonal(j));
    const json& e = field(j, "entries", "form");
    if (!e.is_array()) throw InputError("bad_schema", "'entries' must be a list of rows", "entries");
    Matrix m;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::string row = "entries[" + std::to_string(i) + "]";
        if (!e[i].is_array()) throw InputError("bad_schema", "matrix row must be a list", row);
        std::vector<RationalFunction> r;
        for (std::size_t k = 0; k < e[i].size(); ++k) r.push_back(parse_entry(e[i][k], row + "[" + std::to_string(k) + "]"));
        m.push_back(std::move(r));
    }
    return HermitianMatrix(std::move(m));
}

WittDiagonal load_form(const json& j) {
    if (kind_of(j) == "diagonal") return normal_form(load_diagonal(j));
    return normal_form(load_matrix(j));
}

namespace {

AlgebraicAngle load_angle(const json& p, const std::string& where) {
    if (p.contains("cyclotomic")) {
        const json& c = p.at("cyclotomic");
        if (!c.is_array() || c.size() != 2) throw InputError("bad_schema", "'cyclotomic' must be [n, k]", where);
        return angle_from_cyclotomic(as_int(c[0], where), as_int(c[1], where));
    }
    const std::string text = as_text(field(p, "minpoly_x", where), where + ".minpoly_x");
    Poly q;
    try {
        q = parse_poly(text);
    } catch (const Error& e) {
        throw InputError(e.code(), e.what(), where + ".minpoly_x");
    }
    if (q.degree() < 1) throw InputError("not_irreducible", "minimal polynomial must have positive degree", where + ".minpoly_x");
    const Factorization fac = factor_rational(q);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1) {
        throw InputError("not_irreducible", "'" + text + "' is not irreducible over Q", where + ".minpoly_x");
    }
    const IrreducibleFactor f = fac.factors[0].first;
    const json& iv = field(p, "interval", where);
    if (!iv.is_array() || iv.size() != 2) throw InputError("bad_schema", "'interval' must be [lo, hi]", where + ".interval");
    const Rational lo = parse_rational_field(iv[0], where + ".interval[0]");
    const Rational hi = parse_rational_field(iv[1], where + ".interval[1]");
    if (!(Rational(-2) < lo && lo < hi && hi < Rational(2))) {
        throw InputError("bad_interval", "interval must satisfy -2 < lo < hi < 2", where + ".interval");
    }
    if (sign_at(f.cheb, lo) == 0 || sign_at(f.cheb, hi) == 0 || SturmChain(f.cheb).count_roots(lo, hi) != 1) {
        throw InputError("bad_interval", "interval does not isolate exactly one root of " + f.to_string(), where + ".interval");
    }
    return AlgebraicAngle(f, lo, hi);
}

}  // namespace

StepSpec load_step(const json& j) {
    StepSpec s;
    s.sigma_at_zero = as_int(field(j, "sigma_at_zero", "step"), "sigma_at_zero");
    if (j.contains("points")) {
        const json& pts = j.at("points");
        if (!pts.is_array()) throw InputError("bad_schema", "'points' must be a list", "points");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::string where = "points[" + std::to_string(i) + "]";
            if (!pts[i].is_object()) throw InputError("bad_schema", "point must be an object", where);
            s.points.push_back({load_angle(pts[i], where), as_int(field(pts[i], "J", where), where + ".J")});
        }
    }
    std::stable_sort(s.points.begin(), s.points.end(),
                     [](const StepPoint& a, const StepPoint& b) { return compare(a.angle, b.angle) < 0; });
    return s;
}

FixtureTable load_fixtures(const json& j) {
    const json& list = j.is_object() ? field(j, "knots", "fixtures") : j;
    if (!list.is_array()) throw InputError("bad_schema", "fixtures must be a list", "knots");
    FixtureTable table;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "knots[" + std::to_string(i) + "]";
        const json& k = list[i];
        const json& lab = field(k, "label", where);
        if (!lab.is_string()) throw InputError("bad_schema", "'label' must be a string", where + ".label");
        const std::string label = lab.get<std::string>();
        auto ref = [&](const json& r, const std::string& at) {
            try {
                return evaluate_knot(as_text(r, at), table);
            } catch (const InputError& e) {
                throw InputError(e.code(), e.what(), at);
            }
        };
        if (k.contains("V")) {
            const json& v = k.at("V");
            if (!v.is_array()) throw InputError("bad_schema", "'V' must be a list of rows", where + ".V");
            std::vector<std::vector<Integer>> m;
            for (const auto& row : v) {
                if (!row.is_array()) throw InputError("bad_schema", "'V' must be a list of rows", where + ".V");
                std::vector<Integer> r;
                for (const auto& x : row) {
                    if (!x.is_number_integer()) throw InputError("bad_schema", "Seifert entries must be integers", where + ".V");
                    r.emplace_back(x.dump());
                }
                m.push_back(std::move(r));
            }
            try {
                table.insert_or_assign(label, SeifertMatrix(std::move(m), label));
            } catch (const MathError& e) {
                throw MathError(e.code(), e.what(), where);
            }
        } else if (k.contains("mirror")) {
            table.insert_or_assign(label, mirror(ref(k.at("mirror"), where + ".mirror")));
        } else if (k.contains("sum")) {
            const json& parts = k.at("sum");
            if (!parts.is_array() || parts.empty()) throw InputError("bad_schema", "'sum' must be a nonempty list", where + ".sum");
            SeifertMatrix acc = ref(parts[0], where + ".sum[0]");
            for (std::size_t p = 1; p < parts.size(); ++p) acc = connected_sum(acc, ref(parts[p], where + ".sum[" + std::to_string(p) + "]"));
            table.insert_or_assign(label, std::move(acc));
        } else {
            throw InputError("bad_schema", "knot needs one of 'V', 'sum', 'mirror'", where);
        }
    }
    return table;
}

json form_to_json(const WittDiagonal& w) {
    json out;
    out["kind"] = "diagonal";
    json entries = json::array();
    json nf = json::array();
    for (const auto& e : w.entries) {
        entries.push_back(e.laurent().to_string());
        json c = json::array();
        for (const auto& f : e.circle_factors) c.push_back(f.to_string());
        json o = json::array();
        for (const auto& f : e.offcircle_factors) o.push_back(f.to_string());
        nf.push_back({{"sign", e.sign}, {"circle_factors", c}, {"offcircle_factors", o}});
    }
    out["entries"] = entries;
    out["dimension"] = w.dimension();
    out["normal_form"] = nf;
    return out;
}

json profile_to_json(const SignatureProfile& p, int plot_samples) {
    json out;
    out["sigma_at_zero"] = p.sigma_at_zero;
    json bps = json::array();
    for (const auto& b : p.breakpoints) {
        bps.push_back({{"minpoly_x", b.angle.minpoly().to_string()}, {"interval", interval_json(b.angle)}, {"sigma", b.sigma}, {"J", b.J}});
    }
    out["breakpoints"] = bps;
    out["intervals"] = p.intervals;
    json groups = json::array();
    for (const auto& [f, pts] : p.groups) {
        json gp = json::array();
        for (const auto& g : pts) gp.push_back({{"interval", interval_json(g.angle)}, {"sigma", g.sigma}, {"J", g.J}});
        groups.push_back({{"minpoly_x", f.to_string()}, {"points", gp}});
    }
    out["groups"] = groups;
    if (plot_samples > 0) {
        json plot = json::array();
        for (const auto& [t, v] : sample_plot(p, plot_samples)) plot.push_back({to_string(t), to_string(v)});
        out["plot"] = plot;
    }
    return out;
}

json rank_to_json(const RankReport& r) {
    json out;
    out["r"] = r.r;
    out["s"] = r.s;
    out["stable_rank"] = to_string(r.stable_rank);
    out["sigma_zero"] = r.sigma_zero;
    json pd = json::array();
    for (const auto& d : r.per_delta) {
        pd.push_back({{"minpoly_x", d.factor.to_string()}, {"max_abs_sigma", d.max_abs_sigma}, {"max_abs_J", d.max_abs_J}, {"r_delta", d.r_delta}});
    }
    out["per_delta"] = pd;
    return out;
}

json ball_to_json(const BallPolygon& b) {
    json v = json::array();
    for (const auto& [x, y] : b.vertices) v.push_back({to_string(x), to_string(y)});
    return {{"norm", to_string(b.norm)}, {"vertices", v}};
}

json step_to_json(const StepSpec& s) {
    json pts = json::array();
    for (const auto& p : s.points) {
        pts.push_back({{"minpoly_x", p.angle.minpoly().to_string()}, {"interval", interval_json(p.angle)}, {"J", p.J}});
    }
    return {{"sigma_at_zero", s.sigma_at_zero}, {"points", pts}};
}

json run_diagonalize(const json& form) {
    if (kind_of(form) == "diagonal") return form_to_json(load_form(form));
    return form_to_json(normal_form(load_matrix(form)));
}

json run_signature(const json& form, int plot_samples) {
    return profile_to_json(signature_profile(load_form(form)), plot_samples);
}

json run_rank(const json& form) { return rank_to_json(rank_lower_bound(load_form(form))); }

json run_realize(const json& step) {
    const StepSpec spec = load_step(step);
    const auto violations = validate_step(spec);
    if (!violations.empty()) {
        std::string msg = "step function is not realizable:";
        for (const auto& v : violations) msg += " (" + std::to_string(v.condition) + ") " + v.message + ";";
        msg.pop_back();
        throw MathError("invalid_step", msg);
    }
    const WittDiagonal w = realize(spec);
    json out = form_to_json(w);
    const int r = r_of_step(spec);
    out["verification"] = {
        {"r_of_step", r},
        {"dimension", w.dimension()},
        {"rank_of_result", rank_lower_bound(w).r},
        {"profile_match", profiles_equal(signature_profile(w), profile_from_step(spec))},
    };
    return out;
}

json run_norm_ball(const json& form1, const json& form2, Norm norm) {
    return ball_to_json(unit_ball(load_form(form1), load_form(form2), norm));
}

namespace {

json knot_report(const std::string& name, const SeifertMatrix& v) {
    const WittDiagonal w = v.size() == 0 ? WittDiagonal{} : normal_form(hermitianize(v));
    const RankReport r = rank_lower_bound(w);
    return {{"knot", name},
            {"seifert_dimension", v.size()},
            {"r", r.r},
            {"s", r.s},
            {"sigma_zero", r.sigma_zero},
            {"genus_lower_bound", (r.r + 1) / 2}};
}

}  // namespace

json run_knot(const json& fixtures, const std::optional<std::string>& expr) {
    const FixtureTable table = load_fixtures(fixtures);
    if (expr) {
        SeifertMatrix v = [&] {
            try {
                return evaluate_knot(*expr, table);
            } catch (const ParseError& e) {
                throw InputError(e.code(), e.what(), "--expr " + e.location().value_or(""));
            }
        }();
        return knot_report(*expr, v);
    }
    json list = json::array();
    for (const auto& [name, v] : table) list.push_back(knot_report(name, v));
    return {{"knots", list}};
}

}  // namespace wittrank
