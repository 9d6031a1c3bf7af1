// Python bindings for the unclab core: set types, energies, checkers,
// eigen layer, and campaign driver. Structured payloads cross the boundary
// as JSON strings so the wire format stays identical to the CLI's.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unclab/bandlimited.hpp"
#include "unclab/campaign.hpp"
#include "unclab/circlepoly.hpp"
#include "unclab/errors.hpp"
#include "unclab/json_io.hpp"
#include "unclab/rearrange.hpp"
#include "unclab/sets.hpp"
#include "unclab/specsup.hpp"
#include "unclab/trigbound.hpp"

namespace py = pybind11;
using namespace unclab;

namespace {

py::dict report_to_dict(const ClaimReport& r) {
  py::dict d;
  d["claim_id"] = to_string(r.claim_id);
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["margin"] = r.margin;
  d["satisfied"] = r.satisfied;
  d["tol"] = r.tol;
  d["witness_json"] = r.witness.dump();
  if (r.ratio) d["ratio"] = *r.ratio;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Concentration-inequality verification lab (C++ core)";

  py::register_exception<MalformedInputError>(m, "MalformedInputError",
                                              PyExc_ValueError);
  py::register_exception<InfeasibleRequestError>(m, "InfeasibleRequestError",
                                                 PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError",
                                          PyExc_ValueError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError",
                                               PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<IntervalUnion>(m, "IntervalUnion")
      .def(py::init([](const std::vector<std::pair<double, double>>& parts) {
             return normalize_intervals(parts);
           }),
           py::arg("parts"))
      .def_property_readonly("parts", &IntervalUnion::parts)
      .def("measure", &IntervalUnion::measure)
      .def("__eq__", [](const IntervalUnion& a, const IntervalUnion& b) {
        return a == b;
      })
      .def("__repr__", [](const IntervalUnion& u) {
        return "IntervalUnion(" + to_json(u).dump() + ")";
      });

  py::class_<ArcUnion>(m, "ArcUnion")
      .def(py::init([](const std::vector<std::pair<double, double>>& arcs) {
             return ArcUnion::from_raw(arcs);
           }),
           py::arg("arcs"))
      .def_property_readonly("arcs", &ArcUnion::arcs)
      .def("measure", &ArcUnion::measure)
      .def("rotated", &ArcUnion::rotated, py::arg("s"))
      .def_static("full_circle", &ArcUnion::full_circle)
      .def_static("centered_interval", &ArcUnion::centered_interval,
                  py::arg("delta"))
      .def("__repr__", [](const ArcUnion& u) {
        return "ArcUnion(" + to_json(u).dump() + ")";
      });

  py::class_<Poly>(m, "Poly")
      .def(py::init<std::vector<std::complex<double>>, bool>(),
           py::arg("coeffs"), py::arg("keep_trailing_zeros") = false)
      .def_property_readonly("coeffs", &Poly::coeffs)
      .def_property_readonly("degree", &Poly::degree)
      .def("__repr__", [](const Poly& p) {
        return "Poly(" + to_json(p).dump() + ")";
      });

  py::class_<Spectrum>(m, "Spectrum")
      .def(py::init<double, std::vector<double>, std::vector<double>,
                    std::vector<std::complex<double>>>(),
           py::arg("W"), py::arg("nodes"), py::arg("weights"),
           py::arg("values"))
      .def_property_readonly("W", &Spectrum::W)
      .def_property_readonly("nodes", &Spectrum::nodes)
      .def_property_readonly("weights", &Spectrum::weights)
      .def_property_readonly("values", &Spectrum::values)
      .def("norm_sq", &Spectrum::norm_sq);

  py::class_<TrigConfig>(m, "TrigConfig")
      .def(py::init(&make_trig_config), py::arg("A"), py::arg("B"))
      .def_readonly("A", &TrigConfig::A)
      .def_readonly("B", &TrigConfig::B)
      .def_property_readonly("L", &TrigConfig::L);

  py::class_<CosineSeries>(m, "CosineSeries")
      .def(py::init<std::vector<double>>(), py::arg("a"))
      .def_property_readonly("a", &CosineSeries::a);

  // setlib
  m.def("symmetric_difference", &symmetric_difference, py::arg("u"),
        py::arg("v"));
  m.def("unite", &unite, py::arg("u"), py::arg("v"));
  m.def("intersect", &intersect, py::arg("u"), py::arg("v"));
  m.def("from_indicator", &from_indicator, py::arg("samples"));
  m.def("random_union", &random_union, py::arg("r"), py::arg("total"),
        py::arg("window"), py::arg("seed"));
  m.def("random_arcs", &random_arcs, py::arg("r"), py::arg("total"),
        py::arg("seed"));

  // circlepoly
  m.def("arc_energy", &arc_energy, py::arg("p"), py::arg("omega"));
  m.def("norm_sq", &norm_sq, py::arg("p"));
  m.def("concentration", &concentration, py::arg("p"), py::arg("omega"));
  m.def("modulus_poly", &modulus_poly, py::arg("p"));
  m.def("rotate_poly", &rotate_poly, py::arg("p"), py::arg("theta"));
  m.def(
      "check_thm_discrete",
      [](const Poly& p, const ArcUnion& omega, double tol, bool override_h) {
        return report_to_dict(check_thm_discrete(p, omega, tol, override_h));
      },
      py::arg("p"), py::arg("omega"), py::arg("tol") = 1e-10,
      py::arg("override_hypothesis") = false);

  // rearrange
  m.def("hlp_order", &hlp_order, py::arg("coeffs"));
  m.def(
      "toeplitz_weights",
      [](std::size_t n, double delta) { return toeplitz_weights(n, delta).s; },
      py::arg("n"), py::arg("delta"));
  m.def("interval_energy_form", &interval_energy_form, py::arg("p"),
        py::arg("delta"));
  m.def("brute_force_best_permutation", &brute_force_best_permutation,
        py::arg("coeffs"), py::arg("delta"));
  m.def("montgomery_embed", &montgomery_embed, py::arg("f"));
  m.def(
      "check_thm_improv",
      [](const Poly& p, const ArcUnion& omega, double tol, bool override_h) {
        return report_to_dict(check_thm_improv(p, omega, tol, override_h));
      },
      py::arg("p"), py::arg("omega"), py::arg("tol") = 1e-10,
      py::arg("override_hypothesis") = false);
  m.def(
      "check_montgomery20",
      [](const CosineSeries& f, const ArcUnion& omega, double tol) {
        return report_to_dict(check_montgomery20(f, omega, tol));
      },
      py::arg("f"), py::arg("omega"), py::arg("tol") = 1e-10);

  // bandlimited
  m.def("make_spectrum", &make_spectrum, py::arg("W"), py::arg("profile"),
        py::arg("N"));
  m.def("make_spectrum_panels", &make_spectrum_panels, py::arg("W"),
        py::arg("breaks"), py::arg("profile"), py::arg("N"));
  m.def("time_kernel", &time_kernel, py::arg("u"), py::arg("tset"));
  m.def("time_energy", &time_energy, py::arg("s"), py::arg("tset"));
  m.def("modulus_spectrum", &modulus_spectrum, py::arg("s"));
  m.def(
      "check_thm_main",
      [](const Spectrum& s, const IntervalUnion& tset, double tol,
         bool override_h) {
        return report_to_dict(check_thm_main(s, tset, tol, override_h));
      },
      py::arg("s"), py::arg("tset"), py::arg("tol") = 1e-10,
      py::arg("override_hypothesis") = false);

  // trigbound
  m.def("h_value", &h_value, py::arg("config"));
  m.def("claimed_bound", &claimed_bound, py::arg("L"));
  m.def(
      "check_lemma_h",
      [](const TrigConfig& c, double tol) {
        return report_to_dict(check_lemma_h(c, tol));
      },
      py::arg("config"), py::arg("tol") = 1e-10);
  m.def("multistart_max_h", &multistart_max_h, py::arg("r"), py::arg("L"),
        py::arg("restarts"), py::arg("seed"));
  m.def("residue_clusters", &residue_clusters, py::arg("x"), py::arg("tol"));
  m.def("max_sum_sin_reduced", &max_sum_sin_reduced, py::arg("n"),
        py::arg("L"), py::arg("grid"));

  // specsup
  m.def("sup_concentration", &sup_concentration, py::arg("omega"),
        py::arg("n"));
  m.def(
      "top_eigenpair_circle",
      [](const ArcUnion& omega, std::size_t n) {
        const EigenResult r = top_eigenpair(circle_conc_matrix(omega, n));
        return py::make_tuple(r.lambda, r.vector, r.residual);
      },
      py::arg("omega"), py::arg("n"));
  m.def(
      "top_eigenpair_continuous",
      [](const IntervalUnion& tset, double W, std::size_t N) {
        const EigenResult r =
            top_eigenpair(continuous_conc_matrix(tset, W, N));
        return py::make_tuple(r.lambda, r.vector, r.residual);
      },
      py::arg("tset"), py::arg("W"), py::arg("N"));
  m.def("search_extremal_set", &search_extremal_set, py::arg("n"),
        py::arg("delta"), py::arg("r_max"), py::arg("budget"), py::arg("seed"));

  // labcli
  m.def(
      "run_campaign",
      [](const std::string& config_json, bool include_runtime) {
        const Campaign c =
            parse_campaign(nlohmann::json::parse(config_json));
        return run_campaign(c).to_json(include_runtime).dump();
      },
      py::arg("config_json"), py::arg("include_runtime") = false);
  m.def(
      "recheck",
      [](const std::string& certificate_json) {
        return recheck(nlohmann::json::parse(certificate_json));
      },
      py::arg("certificate_json"));
  m.def(
      "check_instance",
      [](const std::string& claim, const std::string& witness_json, double tol,
         bool override_h) {
        return report_to_dict(
            check_instance(claim_id_from_string(claim),
                           nlohmann::json::parse(witness_json), tol,
                           override_h));
      },
      py::arg("claim"), py::arg("witness_json"), py::arg("tol") = 1e-10,
      py::arg("override_hypothesis") = false);
}
