#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wellround/asympt.hpp"
#include "wellround/general.hpp"
#include "wellround/io.hpp"
#include "wellround/sublattice.hpp"
#include "wellround/wr_hex.hpp"
#include "wellround/wr_square.hpp"

namespace py = pybind11;
using namespace wellround;

namespace {

std::vector<std::int64_t> values(const ArithSeq& f) { return {f.raw().begin() + 1, f.raw().end()}; }

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict estimate_dict(const Estimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["error"] = e.error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_wellround, m) {
  m.doc() = "Well-rounded sublattices of planar lattices";

  static PyObject* error_type = py::exception<Error>(m, "WellroundError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  m.def("reduce", [](const std::string& spec) {
    const auto [red, u] = gauss_reduce(parse_lattice_spec(spec));
    return py::make_tuple(from_json(gram_to_json(red)), to_string(classify_reduced(red.a, red.b, red.c)));
  }, py::arg("lattice"), "Reduced Gram matrix and lattice type.");

  m.def("classify", [](const std::string& spec) { return std::string(to_string(classify(parse_lattice_spec(spec)))); },
        py::arg("lattice"));

  m.def("census", [](const std::string& spec, std::int64_t max_index, bool primitive, int threads) {
    py::gil_scoped_release release;
    const auto report = wr_census_bruteforce(parse_lattice_spec(spec), max_index, {primitive, threads});
    py::gil_scoped_acquire acquire;
    return from_json(census_to_json(report));
  }, py::arg("lattice"), py::arg("max_index"), py::arg("primitive") = false, py::arg("threads") = 1,
     "Per-index counts by lattice type, one dict per index.");

  m.def("a_square", [](std::int64_t n) { return values(a_square(n)); }, py::arg("bound"));
  m.def("a_hex", [](std::int64_t n) { return values(a_hex(n)); }, py::arg("bound"));
  m.def("b_square", [](std::int64_t n) { return values(b_square(n)); }, py::arg("bound"));
  m.def("b_hex", [](std::int64_t n) { return values(b_hex(n)); }, py::arg("bound"));

  m.def("count_well_rounded", [](const std::string& spec, std::int64_t n) {
    const GramForm g = parse_lattice_spec(spec);
    return values(is_rational(g) ? count_wr_rational(g, n) : count_wr_nonrational(g, n));
  }, py::arg("lattice"), py::arg("bound"), "Well-rounded sublattice counts a(1..bound) from the frame sum.");

  m.def("existence", [](const std::string& spec) { return std::string(to_string(existence(parse_lattice_spec(spec)).kind)); },
        py::arg("lattice"));

  m.def("frames", [](const std::string& spec, std::int64_t bound) {
    py::list out;
    for (const auto& f : enumerate_frames(parse_lattice_spec(spec), bound)) out.append(from_json(frame_to_json(f)));
    return out;
  }, py::arg("lattice"), py::arg("bound"));

  m.def("constants", [](std::int64_t terms) {
    const auto t = constants_table(terms);
    py::dict d;
    d["c_square"] = estimate_dict(t.c_square);
    d["c_triangle"] = estimate_dict(t.c_triangle);
    d["L1_chi4"] = estimate_dict(t.L1_chi4);
    d["L1_chi3"] = estimate_dict(t.L1_chi3);
    d["Lp_over_L_chi4"] = estimate_dict(t.Lp_over_L_chi4);
    d["Lp_over_L_chi3"] = estimate_dict(t.Lp_over_L_chi3);
    return d;
  }, py::arg("terms") = 1'000'000);

  m.def("epstein", [](double a, double b, double c, double s, double radius) {
    const auto v = epstein_truncated({a, b, c}, s, radius);
    return py::make_tuple(v.value, v.tail);
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("s"), py::arg("radius") = 1e4,
     "Truncated Epstein zeta of a m^2 + 2 b m n + c n^2 with its tail estimate.");
}
