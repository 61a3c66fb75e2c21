#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "envelope_kit/birkhoff.hpp"
#include "envelope_kit/enumeration.hpp"
#include "envelope_kit/envelope_equiv.hpp"
#include "envelope_kit/error.hpp"
#include "envelope_kit/io.hpp"
#include "envelope_kit/valuation_ring.hpp"

namespace py = pybind11;
using namespace envkit;

namespace {

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

std::vector<py::int_> to_py(const IntVector& v) {
  std::vector<py::int_> out;
  for (const auto& z : v) out.push_back(to_py(z));
  return out;
}

IntVector from_py(const std::vector<py::int_>& v) {
  IntVector out;
  for (const auto& x : v) out.emplace_back(py::str(py::handle(x)).cast<std::string>());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Envelopes of finite distributive strong upper semilattices";

  static py::exception<Error> error(m, "EnvelopeKitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<Poset>(m, "Poset")
      .def(py::init([](std::vector<std::string> elements, std::vector<LabeledPair> covers) {
             return Poset::from_covers(std::move(elements), covers);
           }),
           py::arg("elements"), py::arg("covers"))
      .def("__len__", &Poset::size)
      .def("leq", &Poset::leq)
      .def_property_readonly("names", &Poset::names)
      .def_property_readonly("covers", [](const Poset& p) {
        std::vector<LabeledPair> out;
        for (const auto& [lo, hi] : p.covers()) out.emplace_back(p.name(lo), p.name(hi));
        return out;
      })
      .def("index", [](const Poset& p, const std::string& label) { return p.find(label); })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; });

  py::class_<Sus>(m, "Sus")
      .def_static("validate", &Sus::validate, py::arg("poset"), py::arg("require_distributive") = true)
      .def("__len__", &Sus::size)
      .def_property_readonly("poset", &Sus::poset)
      .def_property_readonly("top", &Sus::top)
      .def("join", &Sus::join)
      .def("meet", &Sus::meet)
      .def_property_readonly("meet_irreducibles", &Sus::meet_irreducibles)
      .def_property_readonly("minimal", &Sus::minimal)
      .def_property_readonly("is_lattice", &Sus::is_lattice);

  py::class_<FilterLattice>(m, "FilterLattice")
      .def_static("build", [](const Sus& s) { return FilterLattice::build(s); })
      .def("__len__", &FilterLattice::size)
      .def("label", &FilterLattice::label)
      .def("nu", &FilterLattice::nu)
      .def("leq", &FilterLattice::leq)
      .def("join", &FilterLattice::join)
      .def("meet", &FilterLattice::meet)
      .def_property_readonly("top", &FilterLattice::top)
      .def_property_readonly("bottom", &FilterLattice::bottom);

  py::class_<ValuationRing>(m, "ValuationRing")
      .def_static("build", &ValuationRing::build)
      .def_property_readonly("rank", &ValuationRing::rank)
      .def_property_readonly("snf_invariants", [](const ValuationRing& r) { return to_py(r.snf_invariants()); })
      .def_property_readonly("relations", [](const ValuationRing& r) {
        std::vector<std::vector<py::int_>> out;
        for (const auto& row : r.relations().rows()) out.push_back(to_py(row));
        return out;
      })
      .def("iota", [](const ValuationRing& r, Element x) { return to_py(r.iota(x)); })
      .def("canonical", [](const ValuationRing& r, const std::vector<py::int_>& v) {
        return to_py(r.canonical(from_py(v)));
      })
      .def("multiply", [](const ValuationRing& r, const std::vector<py::int_>& u, const std::vector<py::int_>& v) {
        return to_py(r.multiply(from_py(u), from_py(v)));
      })
      .def("format", [](const ValuationRing& r, const std::vector<py::int_>& v) { return r.format(from_py(v)); });

  m.def("meet_in_v", [](const ValuationRing& r, const ElementSet& xs) { return to_py(meet_in_v(r, xs)); });
  m.def("parse_instance", [](const std::string& text) { return to_poset(parse_instance(text)); });
  m.def("serialize_instance", [](const Poset& p) { return serialize_instance(to_document(p)); });
  m.def("dot_poset", [](const Poset& p) { return dot_poset(p); });
  m.def("dot_envelope", &dot_envelope);
  m.def("gen_dsus", &gen_dsus);
  m.def("count_posets", &count_posets, py::arg("n"), py::arg("up_to_iso") = true);
  m.def("instance_id", &instance_id);
  m.def(
      "run_suite_json",
      [](const Sus& s, std::uint64_t seed) { return report_json(run_suite(s, {seed}), false).dump(); },
      py::arg("sus"), py::arg("seed") = 0);
  m.def(
      "sweep_json",
      [](std::size_t max_size, std::size_t jobs, std::uint64_t seed) {
        py::gil_scoped_release release;
        return summary_json(sweep(max_size, jobs, {seed}), false).dump();
      },
      py::arg("max_size"), py::arg("jobs") = 1, py::arg("seed") = 0);
}
