#include "wittrank/error.hpp"
#include "wittrank/expr.hpp"
#include "wittrank/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wittrank;

namespace {

// JSON crosses the boundary as text; the Python package wraps these in json.loads/dumps.
std::string py_diagonalize(const std::string& form) { return run_diagonalize(parse_json_text(form)).dump(); }

std::string py_signature(const std::string& form, int plot) { return run_signature(parse_json_text(form), plot).dump(); }

std::string py_rank(const std::string& form) { return run_rank(parse_json_text(form)).dump(); }

std::string py_realize_step(const std::string& step) { return run_realize(parse_json_text(step)).dump(); }

std::string py_norm_ball(const std::string& a, const std::string& b, const std::string& norm) {
    return run_norm_ball(parse_json_text(a), parse_json_text(b), parse_norm(norm)).dump();
}

std::string py_knot(const std::string& fixtures, const std::optional<std::string>& expr) {
    return run_knot(parse_json_text(fixtures), expr).dump();
}

std::string py_normalize_expr(const std::string& text) { return parse_expr(text).to_string(); }

}  // namespace

PYBIND11_MODULE(_wittrank, m) {
    m.doc() = "Witt-rank lower bounds for hermitian forms over Q(t)";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<MathError>(m, "MathError", base.ptr());

    m.def("diagonalize", &py_diagonalize, py::arg("form"));
    m.def("signature", &py_signature, py::arg("form"), py::arg("plot") = 0);
    m.def("rank", &py_rank, py::arg("form"));
    m.def("realize", &py_realize_step, py::arg("step"));
    m.def("norm_ball", &py_norm_ball, py::arg("form1"), py::arg("form2"), py::arg("norm"));
    m.def("knot", &py_knot, py::arg("fixtures"), py::arg("expr") = std::nullopt);
    m.def("normalize_expr", &py_normalize_expr, py::arg("text"));
}
