#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hrhlab/accept.hpp"
#include "hrhlab/bsato.hpp"
#include "hrhlab/cli.hpp"
#include "hrhlab/families.hpp"
#include "hrhlab/spectrum.hpp"

namespace py = pybind11;
using namespace hrhlab;

namespace {

BPSpec make_bp(const std::vector<long>& exponents) {
  BPSpec spec{exponents};
  validate_bp(spec);
  return spec;
}

std::string hrh_str(const HRHValue& h) { return h.str(); }

}  // namespace

PYBIND11_MODULE(hrhlab, m) {
  m.doc() =
      "Exact calculator for the rational-homology level of singularities: "
      "spectra of Brieskorn-Pham hypersurfaces, reduced Bernstein-Sato root "
      "sets, determinantal local cohomology, and cone/toric/secant verdicts.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError",
                                           PyExc_RuntimeError);

  m.def(
      "run_text",
      [](const std::string& line) {
        Report r = run_line(line, Command::Format::Text);
        return py::make_tuple(r.exit_code, r.output());
      },
      py::arg("line"),
      "Run one command line; returns (exit_code, text_output).");

  m.def(
      "run_json",
      [](const std::string& line) {
        Report r = run_line(line, Command::Format::Json);
        return py::make_tuple(r.exit_code, r.json.dump(2) + "\n");
      },
      py::arg("line"),
      "Run one command line; returns (exit_code, json_output).");

  m.def(
      "mu",
      [](const std::vector<long>& exponents) {
        return bp_mu(make_bp(exponents)).str();
      },
      py::arg("exponents"), "Milnor number of bp(exponents), as a string.");

  m.def(
      "spectrum",
      [](const std::vector<long>& exponents) {
        SpectrumData sd = bp_spectrum(make_bp(exponents));
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [v, mult] : sd.values.entries())
          out.emplace_back(v.str(), mult.str());
        return out;
      },
      py::arg("exponents"),
      "Spectrum of bp(exponents) as (value, multiplicity) string pairs.");

  m.def(
      "hrh",
      [](const std::vector<long>& exponents) {
        return hrh_str(hrh_isolated_hypersurface(bp_spectrum(make_bp(exponents))));
      },
      py::arg("exponents"),
      "Rational-homology level of bp(exponents): 'k', 'inf', '[lo,hi]'.");

  m.def(
      "bp_roots",
      [](const std::vector<long>& exponents) {
        RootSet rs = bp_reduced_roots(make_bp(exponents));
        std::vector<std::string> out;
        for (const auto& [v, mult] : rs.roots.entries())
          for (Int i = 0; i < mult; ++i) out.push_back(v.str());
        return out;
      },
      py::arg("exponents"),
      "Full reduced Bernstein-Sato root multiset of bp(exponents).");

  m.def(
      "qbinomial",
      [](long a, long b, long step) { return qbinomial(a, b, step).str(); },
      py::arg("a"), py::arg("b"), py::arg("step") = 1,
      "Gaussian binomial coefficient in q^step, as a Laurent string.");

  m.def(
      "toric_hrh",
      [](const std::vector<std::vector<long>>& rays) {
        std::vector<std::vector<Int>> r;
        for (const auto& ray : rays) r.emplace_back(ray.begin(), ray.end());
        return hrh_str(toric_hrh(make_toric_cone(r)));
      },
      py::arg("rays"), "Level of an affine toric cone given by its rays.");

  m.def(
      "cone_hrh",
      [](long n, const std::vector<std::tuple<long, long, long long>>& h) {
        return hrh_str(cone_hrh(HodgeDiamond(n, h)));
      },
      py::arg("n"), py::arg("h"),
      "Level of a cone over a smooth projective base with Hodge numbers h.");

  m.def(
      "secant_hrh",
      [](bool is_p1, bool has_vanishing) {
        return hrh_str(secant_hrh(is_p1, has_vanishing));
      },
      py::arg("is_p1"), py::arg("has_vanishing"),
      "Level verdict for secant varieties of smooth curves.");

  m.def(
      "verify",
      [](const std::string& suite) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : accept::run_suite(suite))
          out.emplace_back(r.name, r.pass, r.detail);
        return out;
      },
      py::arg("suite") = "all",
      "Run the acceptance criteria; returns (name, pass, detail) triples.");
}
