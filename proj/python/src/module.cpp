#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypqch/cli.hpp"
#include "hypqch/errors.hpp"
#include "hypqch/hyp_core.hpp"
#include "hypqch/pants_graph.hpp"
#include "hypqch/qch_bounds.hpp"
#include "hypqch/tiled_surface.hpp"
#include "hypqch/topo_classify.hpp"

namespace py = pybind11;
using namespace hypqch;

namespace {

// JSON crosses the boundary as text; the Python package decodes it.
std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_hypqch, m) {
  m.doc() = "Native core of hypqch";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args = (kind, message, rule)
      py::tuple args = py::make_tuple(std::string(to_string(e.kind())), e.what(), e.rule());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("solve_pentagon", [](double b) {
    const PentagonSolution p = solve_pentagon(b);
    return py::make_tuple(double(p.b), double(p.a), double(p.c));
  }, py::arg("b"));
  m.def("collar_width", [](double l) { return double(collar_width(l)); }, py::arg("length"));
  m.def("annulus_modulus", [](double r0, double r1) { return double(annulus_modulus(r0, r1)); },
        py::arg("r_inner"), py::arg("r_outer"));
  m.def("geodesic_length_from_trace", [](double t) { return double(geodesic_length_from_trace(t)); },
        py::arg("trace"));
  m.def("shortpants_step", [](double M, double m_inj) { return double(shortpants_step(M, m_inj)); },
        py::arg("M"), py::arg("m_inj"));

  m.def("bound_report", [](double K, double L, std::optional<double> R, double m_inj,
                           std::optional<double> pants_bound) {
    std::optional<Real> r;
    if (R) r = *R;
    std::optional<Real> pb;
    if (pants_bound) pb = *pants_bound;
    return dump(to_json(report(make_params(K, L, r, m_inj), pb)));
  }, py::arg("K"), py::arg("L"), py::arg("R") = py::none(), py::arg("m_inj") = 1.0,
     py::arg("pants_bound") = py::none());

  m.def("pants_graph", [](int g, int b) { return dump(to_json(modular_pants_graph(g, b))); },
        py::arg("g"), py::arg("b"));

  m.def("certify", [](double b, int n, bool refine) { return dump(to_json(certify(b, n, refine))); },
        py::arg("b"), py::arg("n"), py::arg("refine") = false);

  m.def("classify_cover", [](int base_genus, const std::string& deck, bool planar) {
    return dump(to_json(classify_cover(base_genus, deck_from_json(nlohmann::json::parse(deck)), planar)));
  }, py::arg("base_genus"), py::arg("deck"), py::arg("planar"));
  m.def("qch_admissible", [](const std::string& surface) {
    const Admissibility a = qch_admissible(surface_from_json(nlohmann::json::parse(surface)));
    return py::make_tuple(a.admissible, a.reason);
  }, py::arg("surface"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
