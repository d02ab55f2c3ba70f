#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "operad_forge/commands.hpp"
#include "operad_forge/dsl.hpp"
#include "operad_forge/error.hpp"
#include "operad_forge/presets.hpp"
#include "operad_forge/serialize.hpp"

#include <sstream>

namespace py = pybind11;
using namespace operad_forge;

namespace {

std::vector<std::string> basis_text(const RelationModule& r) {
    std::vector<std::string> out;
    for (const auto& b : r.basis()) out.push_back(format(b));
    return out;
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations with binary quadratic operads";

    // translators run newest first, so the base class goes in first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnknownName>(m, "UnknownName", PyExc_KeyError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);

    py::class_<QuadraticOperad>(m, "Operad")
        .def_property_readonly("name", &QuadraticOperad::name)
        .def_property_readonly("symmetry", [](const QuadraticOperad& p) { return to_string(p.symmetry()); })
        .def_property_readonly("dim", [](const QuadraticOperad& p) { return p.relations().dim(); })
        .def_property_readonly("rank", [](const QuadraticOperad& p) { return rank(p.relations()); })
        .def("relations", [](const QuadraticOperad& p) { return basis_text(p.relations()); })
        .def("contains", [](const QuadraticOperad& p, const std::string& rel) {
            return p.relations().contains(parse_weight3(rel, p.symmetry()));
        })
        .def("to_json", [](const QuadraticOperad& p) { return to_py(to_json(p)); })
        .def("__eq__", [](const QuadraticOperad& a, const QuadraticOperad& b) { return operads_equal(a, b); })
        .def("__repr__", [](const QuadraticOperad& p) {
            return "<Operad " + p.name() + " " + to_string(p.symmetry()) + " dim " + std::to_string(p.relations().dim()) +
                   ">";
        });

    m.def("preset", &preset, py::arg("name"));
    m.def("preset_names", &preset_names);
    m.def("load", &load_operad, py::arg("name_or_path"));
    m.def("parse_definition", &parse_operad_definition, py::arg("text"));
    m.def("dual", &dual);
    m.def("tilde", &tilde, py::arg("operad"), py::arg("seed") = 0);
    m.def("minimal_companion", [](const QuadraticOperad& p) {
        return QuadraticOperad("companion(" + p.name() + ")", minimal_companion(p));
    });
    m.def("normalize", [](const std::string& rel) { return format(parse_relation(rel)); },
          "canonical text of a regular-class relation");

    m.def("theorem1", [](const QuadraticOperad& p, std::uint64_t seed) { return theorem1_check(p, seed).holds; },
          py::arg("operad"), py::arg("seed") = 0);
    m.def("closure_holds",
          [](const QuadraticOperad& a, const QuadraticOperad& b, std::array<std::string, 4> coeffs,
             std::vector<std::string> targets) {
              std::array<Rational, 4> c;
              for (std::size_t i = 0; i < 4; ++i) c[i] = parse_rational(coeffs[i]);
              std::vector<Weight3Element> ts;
              for (const auto& t : targets) ts.push_back(parse_relation(t));
              if (ts.empty()) ts = relation_targets(a.relations());
              return to_py(to_json(closure_holds(a.relations(), b.relations(), MixedProduct(c), ts)));
          },
          py::arg("a"), py::arg("b"), py::arg("product") = std::array<std::string, 4>{"1", "0", "0", "0"},
          py::arg("targets") = std::vector<std::string>{});

    m.def("run",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          "run the command line in-process; returns (exit code, stdout, stderr)");
    m.def("paper_tables", [](std::uint64_t seed) { return to_py(paper_tables_report(seed).json()); },
          py::arg("seed") = 0);
}
