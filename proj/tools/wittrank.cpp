#include "wittrank/error.hpp"
#include "wittrank/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace wittrank;

namespace {

void print_error(const std::string& code, const std::string& message, const std::optional<std::string>& location) {
    json err{{"code", code}, {"message", message}, {"location", location ? json(*location) : json(nullptr)}};
    std::cerr << json{{"error", err}}.dump() << "\n";
}

double approx(const Rational& q) { return q.get_d(); }

// θ of a root, for drawing only.
double theta_of(const AlgebraicAngle& a) {
    const AlgebraicAngle r = a.refined(Rational(1, 1 << 24));
    const double x = (approx(r.lo()) + approx(r.hi())) / 2;
    return std::acos(std::clamp(x / 2, -1.0, 1.0)) / (2 * M_PI);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string svg_plot(const SignatureProfile& p) {
    const double width = 800, height = 400, margin = 40;
    int top = 1;
    for (int v : p.intervals) top = std::max(top, std::abs(v));
    auto px = [&](double theta) { return margin + theta * 2 * (width - 2 * margin); };
    auto py = [&](double s) { return height / 2 - s / top * (height / 2 - margin); };

    std::vector<double> cuts{0.0};
    for (const auto& r : p.roots) cuts.push_back(theta_of(r));
    cuts.push_back(0.5);

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" viewBox=\"0 0 800 400\">\n";
    o << "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";
    o << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(0.5)) << "\" y2=\"" << fmt(py(0))
      << "\" stroke=\"#999\"/>\n";
    o << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(margin) << "\" x2=\"" << fmt(px(0)) << "\" y2=\"" << fmt(height - margin)
      << "\" stroke=\"#999\"/>\n";
    o << "<text x=\"" << fmt(px(0.5)) << "\" y=\"" << fmt(py(0) + 16) << "\" font-size=\"12\" text-anchor=\"end\">1/2</text>\n";
    o << "<text x=\"" << fmt(px(0) - 6) << "\" y=\"" << fmt(py(top) + 4) << "\" font-size=\"12\" text-anchor=\"end\">" << top << "</text>\n";
    o << "<text x=\"" << fmt(px(0) - 6) << "\" y=\"" << fmt(py(-top) + 4) << "\" font-size=\"12\" text-anchor=\"end\">" << -top
      << "</text>\n";
    for (std::size_t i = 0; i < p.intervals.size(); ++i) {
        const double y = py(p.intervals[i]);
        o << "<line x1=\"" << fmt(px(cuts[i])) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(px(cuts[i + 1])) << "\" y2=\"" << fmt(y)
          << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (std::size_t i = 0; i < p.roots.size(); ++i) {
        const int left = p.intervals[i];
        const int right = p.intervals[i + 1];
        if (left == right) continue;
        const double x = px(cuts[i + 1]);
        for (int v : {left, right}) {
            o << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(py(v)) << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
        }
        o << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(py((left + right) / 2.0)) << "\" r=\"4\" fill=\"black\"/>\n";
    }
    o << "</svg>\n";
    return o.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("io_error", "cannot write '" + path + "'", path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Witt-rank lower bounds for hermitian forms over Q(t)"};
    app.require_subcommand(1);

    std::string form_path, form2_path, step_path, fixtures_path, svg_path, norm_name, format = "json";
    int plot = 0;
    std::optional<std::string> expr;

    auto* diag = app.add_subcommand("diagonalize", "normal form of a form file");
    diag->add_option("FORM", form_path, "form JSON")->required();

    auto* sig = app.add_subcommand("signature", "signature profile of a form file");
    sig->add_option("FORM", form_path, "form JSON")->required();
    sig->add_option("--plot", plot, "number of evenly spaced samples")->check(CLI::Range(2, 100000));
    sig->add_option("--svg", svg_path, "write a step plot");
    sig->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* rank = app.add_subcommand("rank", "r, s and per-factor data of a form file");
    rank->add_option("FORM", form_path, "form JSON")->required();

    auto* real = app.add_subcommand("realize", "minimal diagonal form with a given step function");
    real->add_option("STEP", step_path, "step function JSON")->required();

    auto* ball = app.add_subcommand("norm-ball", "unit ball of a norm on the span of two forms");
    ball->add_option("FORM1", form_path, "first form JSON")->required();
    ball->add_option("FORM2", form2_path, "second form JSON")->required();
    ball->add_option("--norm", norm_name, "s or rho_s")->required()->check(CLI::IsMember({"s", "rho_s"}));

    auto* knot = app.add_subcommand("knot", "4-genus lower bounds from Seifert matrices");
    knot->add_option("FIXTURES", fixtures_path, "Seifert fixtures JSON")->required();
    knot->add_option("--expr", expr, "knot expression, e.g. sum(mirror(5_1),10_132)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what(), std::nullopt);
        return 1;
    }

    try {
        json out;
        if (*diag) {
            out = run_diagonalize(read_json_file(form_path));
        } else if (*sig) {
            const json form = read_json_file(form_path);
            const SignatureProfile p = signature_profile(load_form(form));
            const int samples = plot > 0 ? plot : (format == "csv" ? 32 : 0);
            if (!svg_path.empty()) write_file(svg_path, svg_plot(p));
            if (format == "csv") {
                std::cout << "theta,sigma\n";
                for (const auto& [t, v] : sample_plot(p, samples)) std::cout << to_string(t) << "," << to_string(v) << "\n";
                return 0;
            }
            out = profile_to_json(p, samples);
        } else if (*rank) {
            out = run_rank(read_json_file(form_path));
        } else if (*real) {
            out = run_realize(read_json_file(step_path));
        } else if (*ball) {
            out = run_norm_ball(read_json_file(form_path), read_json_file(form2_path), parse_norm(norm_name));
        } else if (*knot) {
            out = run_knot(read_json_file(fixtures_path), expr);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const InputError& e) {
        print_error(e.code(), e.what(), e.location());
        return 1;
    } catch (const MathError& e) {
        print_error(e.code(), e.what(), e.location());
        return 2;
    } catch (const std::exception& e) {
        print_error("internal", e.what(), std::nullopt);
        return 3;
    }
}
