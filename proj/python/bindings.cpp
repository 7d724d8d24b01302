#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relalg/algebra_io.hpp"
#include "relalg/batch.hpp"
#include "relalg/bound.hpp"
#include "relalg/comer.hpp"
#include "relalg/encode.hpp"
#include "relalg/number_theory.hpp"
#include "relalg/rep_io.hpp"

namespace py = pybind11;
using namespace relalg;

namespace {

using TripleTuple = std::tuple<int, int, int>;

std::vector<TripleTuple> to_tuples(const TripleSet& s) {
  std::vector<TripleTuple> out;
  for (const auto& t : s) out.emplace_back(t.x, t.y, t.z);
  return out;
}

EncodeOptions encode_options(std::optional<int> symmetry_break_atom, bool degree_bounds, bool nonempty_atoms) {
  EncodeOptions o;
  o.symmetry_break_atom = symmetry_break_atom;
  o.degree_bounds = degree_bounds;
  o.nonempty_atoms = nonempty_atoms;
  return o;
}

}  // namespace

PYBIND11_MODULE(_relalg, m) {
  m.doc() = "Relation algebra representation toolkit (native core)";

  py::register_exception<UnknownAlgebra>(m, "UnknownAlgebra", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PartialLabeling>(m, "PartialLabeling", PyExc_ValueError);
  py::register_exception<SolverLaunchError>(m, "SolverLaunchError", PyExc_RuntimeError);

  py::class_<AlgebraSpec>(m, "Algebra")
      .def_property_readonly("name", &AlgebraSpec::name)
      .def_property_readonly("atoms",
                             [](const AlgebraSpec& s) {
                               std::vector<std::string> out;
                               for (const auto& a : s.atoms()) out.push_back(a.name);
                               return out;
                             })
      .def_property_readonly("converse",
                             [](const AlgebraSpec& s) {
                               std::vector<int> out;
                               for (const auto& a : s.atoms()) out.push_back(a.converse);
                               return out;
                             })
      .def_property_readonly("forbidden", [](const AlgebraSpec& s) { return to_tuples(s.forbidden()); })
      .def("forbids", py::overload_cast<int, int, int>(&AlgebraSpec::forbids, py::const_))
      .def("needs", [](const AlgebraSpec& s, int atom) { return needs_of(s).needs(atom); })
      .def("violations", [](const AlgebraSpec& s) { return validate_spec(s).violations; })
      .def("to_text", [](const AlgebraSpec& s) { return to_text(s); })
      .def("to_json", [](const AlgebraSpec& s) { return to_json(s).dump(); })
      .def("__repr__", [](const AlgebraSpec& s) { return "<Algebra " + to_text(s) + ">"; });

  m.def("catalog", [](const std::string& name) { return catalog_get(name); });
  m.def("catalog_names", &catalog_names);
  m.def("parse_algebra", [](const std::string& text) { return parse_algebra(text); });
  m.def("peircean_closure", [](const std::vector<TripleTuple>& triples, const AlgebraSpec& sig_from) {
    TripleSet in;
    for (const auto& [x, y, z] : triples) in.insert({x, y, z});
    return to_tuples(peircean_closure(in, sig_from.atoms()));
  });

  m.def("is_prime", &nt::is_prime);
  m.def("smallest_primitive_root", &nt::smallest_primitive_root);

  m.def(
      "_classify_json",
      [](std::uint64_t p, int mod, std::optional<std::uint64_t> g) {
        py::gil_scoped_release nogil;
        const auto part = g ? CosetPartition(p, mod, *g) : CosetPartition(p, mod);
        return to_json(classify(part)).dump();
      },
      py::arg("p"), py::arg("m"), py::arg("g") = std::nullopt);
  m.def("cycle_table", [](std::uint64_t p, int mod) {
    py::gil_scoped_release nogil;
    const auto t = cycle_table(CosetPartition(p, mod));
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(mod));
    for (int d = 0; d < mod; ++d)
      for (int e = 0; e < mod; ++e) rows[static_cast<std::size_t>(d)].push_back(t.at(d, e) ? 1 : 0);
    return rows;
  });
  m.def(
      "scan",
      [](int colors, const std::string& mode, std::optional<std::uint64_t> max_p, unsigned workers) {
        ScanOptions o{colors, scan_mode_from_string(mode), max_p, workers};
        py::gil_scoped_release nogil;
        return scan(o);
      },
      py::arg("colors"), py::arg("mode") = "color", py::arg("max_p") = std::nullopt, py::arg("workers") = 1);

  m.def("_verify_json", [](const AlgebraSpec& spec, const std::string& rep_json) {
    const auto rep = representation_from_json(nlohmann::json::parse(rep_json), spec);
    py::gil_scoped_release nogil;
    return to_json(verify(spec, rep), spec).dump();
  });

  m.def(
      "encode",
      [](const AlgebraSpec& spec, const std::string& mode, int n, std::optional<int> symmetry_break_atom,
         bool degree_bounds, bool nonempty_atoms) {
        py::gil_scoped_release nogil;
        return emit_dimacs(encode(spec, encoding_mode_from_string(mode), n,
                                  encode_options(symmetry_break_atom, degree_bounds, nonempty_atoms)));
      },
      py::arg("algebra"), py::arg("mode"), py::arg("n"), py::arg("symmetry_break_atom") = std::nullopt,
      py::arg("degree_bounds") = false, py::arg("nonempty_atoms") = false);
  m.def("fnv1a64", [](const std::string& s) { return fnv1a64(s); });

  m.def(
      "_solve_json",
      [](const AlgebraSpec& spec, const std::string& mode, int n_from, int n_to, const std::string& solver_cmd,
         double timeout, unsigned workers, const std::string& results_path) {
        BatchOptions o;
        o.mode = encoding_mode_from_string(mode);
        o.n_from = n_from;
        o.n_to = n_to;
        o.solver.command = solver_cmd;
        o.solver.timeout_seconds = timeout;
        o.workers = workers;
        o.results_path = results_path;
        py::gil_scoped_release nogil;
        auto arr = nlohmann::json::array();
        for (const auto& e : solve_batch(spec, o)) arr.push_back(to_json(e));
        return arr.dump();
      },
      py::arg("algebra"), py::arg("mode"), py::arg("n_from"), py::arg("n_to"), py::arg("solver_cmd"),
      py::arg("timeout") = 0.0, py::arg("workers") = 1, py::arg("results_path") = "");

  m.def("_point_bound_json", [](const AlgebraSpec& spec) -> std::optional<std::string> {
    const auto d = point_bound(spec);
    if (!d) return std::nullopt;
    nlohmann::json j = {{"algebra", d->algebra},
                        {"coarse_bound", d->coarse_bound},
                        {"bound", d->bound},
                        {"degree_caps", d->degree_caps},
                        {"trace", d->trace}};
    return j.dump();
  });
}
