#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leibniz/a_algebra.hpp"
#include "leibniz/api.hpp"
#include "leibniz/corpus.hpp"
#include "leibniz/io.hpp"

namespace py = pybind11;
using namespace leibniz;

namespace {

py::tuple run(const std::vector<std::string>& args) {
    RunResult r;
    {
        py::gil_scoped_release release;
        r = run_command(args);
    }
    return py::make_tuple(r.exit_code, r.report.dump());
}

// Same behaviour as the command line tool: returns (exit_code, rendered report), or
// writes the rendering to --output and returns an empty string.
py::tuple cli(const std::vector<std::string>& args) {
    RunResult r;
    {
        py::gil_scoped_release release;
        r = run_command(args);
    }
    std::string text = render(r);
    if (!r.output_path.empty()) {
        write_text_file(r.output_path, text);
        text.clear();
    }
    return py::make_tuple(r.exit_code, text);
}

std::string fixture_json(const std::string& name, const std::string& field) {
    return serialize_algebra(std::visit([](auto&& L) { return AnyAlgebra(L); }, fixture(name, parse_field(field))));
}

std::string verdict_json(const std::string& text) {
    const AnyAlgebra L = parse_algebra(text);
    return std::visit([](const auto& A) { return is_a_algebra(A).to_json().dump(); }, L);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-dimensional Leibniz algebras over Q and finite fields";

    py::register_exception<Error>(m, "LeibnizError");

    m.def("run", &run, py::arg("args"), "Run a CLI command; returns (exit_code, report as JSON text).");
    m.def("cli", &cli, py::arg("args"));
    m.def("render_text", [](const std::string& report) { return render_text(json::parse(report)); }, py::arg("report"));
    m.def("normalize", [](const std::string& text) { return serialize_algebra(parse_algebra(text)); }, py::arg("text"),
          "Parse and re-serialize an algebra document; raises on a table that is not Leibniz.");
    m.def("fixture", &fixture_json, py::arg("name"), py::arg("field"));
    m.def("fixture_names", &fixture_names);
    m.def("is_a_algebra", &verdict_json, py::arg("text"));
}
