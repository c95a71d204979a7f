// Thin pybind11 layer. Exact values cross the boundary as the JSON used in
// certificates; python/diracsym/__init__.py decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diracsym/certificate.hpp"
#include "diracsym/cli.hpp"
#include "diracsym/spectra.hpp"

namespace py = pybind11;
using namespace diracsym;

namespace {

std::string gamma_json(int d, const std::string& basis) {
  const GammaSystem gs = system_for(d, parse_gamma_basis(basis));
  Json out = Json::array();
  for (const auto& g : gs.gammas) out.push_back(to_json(g));
  return out.dump();
}

bool clifford_holds(int d, const std::string& basis) {
  const GammaSystem gs = system_for(d, parse_gamma_basis(basis));
  return relations_hold(gs) && hermiticity_holds(gs);
}

DiracModel cell(int d, const std::string& variant, const std::string& mass, const std::string& basis) {
  return build_model(d, parse_variant(variant), parse_rational(mass), parse_gamma_basis(basis));
}

std::string solve_tau_json(int d, const std::string& variant, const std::string& symmetry, const std::string& mass,
                           const std::string& basis, const std::string& ansatz) {
  SolveOptions opts;
  opts.ansatz = Ansatz::parse(ansatz);
  return to_json(solve_tau(cell(d, variant, mass, basis), candidates::builtin(symmetry), opts)).dump();
}

std::string classify_json(const std::vector<int>& dims, const std::vector<std::string>& variants,
                          const std::vector<std::string>& names, const std::string& mass, const std::string& basis,
                          unsigned jobs) {
  std::vector<Variant> vs;
  for (const auto& v : variants) vs.push_back(parse_variant(v));
  ClassifyOptions opts;
  opts.basis = parse_gamma_basis(basis);
  opts.mass = parse_rational(mass);
  opts.jobs = jobs;
  if (!names.empty()) opts.candidates = names;
  Json out = Json::array();
  for (const auto& r : classify(dims, vs, opts)) out.push_back(to_json(r));
  return out.dump();
}

std::string dispersion_json(int d, const std::string& variant, const std::vector<std::string>& momentum,
                            const std::string& mass, const std::string& basis) {
  std::vector<Rational> p;
  for (const auto& q : momentum) p.push_back(parse_rational(q));
  return to_json(dispersion_check(cell(d, variant, mass, basis), p)).dump();
}

std::vector<std::string> labels(const std::string& variant, const std::string& mass, const std::string& basis) {
  std::vector<std::string> out;
  for (const auto& l : claims::sorted_labels(little_group_labels(cell(4, variant, mass, basis))))
    out.push_back(l.to_string());
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact discrete-symmetry audit of Dirac-type equations";
  m.attr("__version__") = DIRACSYM_VERSION;

  m.def("gamma_json", &gamma_json, py::arg("d"), py::arg("basis") = "dirac");
  m.def("clifford_holds", &clifford_holds, py::arg("d"), py::arg("basis") = "dirac");
  m.def("solve_tau_json", &solve_tau_json, py::arg("d"), py::arg("variant"), py::arg("symmetry"),
        py::arg("mass") = "1", py::arg("basis") = "dirac", py::arg("ansatz") = "full",
        py::call_guard<py::gil_scoped_release>());
  m.def("classify_json", &classify_json, py::arg("dims"), py::arg("variants"),
        py::arg("candidates") = std::vector<std::string>{}, py::arg("mass") = "1", py::arg("basis") = "dirac",
        py::arg("jobs") = 1u, py::call_guard<py::gil_scoped_release>());
  m.def("dispersion_json", &dispersion_json, py::arg("d"), py::arg("variant"), py::arg("momentum"),
        py::arg("mass") = "1", py::arg("basis") = "dirac");
  m.def("labels", &labels, py::arg("variant") = "single", py::arg("mass") = "1", py::arg("basis") = "dirac");
  m.def("run_cli", &run_cli, py::arg("args"));
}
