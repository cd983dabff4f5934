#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rindler/core_math.hpp"
#include "rindler/error.hpp"
#include "rindler/freefield.hpp"
#include "rindler/localize.hpp"
#include "rindler/mirror.hpp"
#include "rindler/montecarlo.hpp"
#include "rindler/validation.hpp"

namespace py = pybind11;
using namespace rindler;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array& a) {
  if (a.ndim() != 1) throw py::value_error("expected a one-dimensional array");
  return {a.data(), a.data() + a.size()};
}

Array to_array(const WignerGrid& g) {
  Array out({g.eta.size(), g.nu.size()});
  std::copy(g.values.begin(), g.values.end(), out.mutable_data());
  return out;
}

WignerGrid from_array(const Array& values, const std::vector<double>& eta, const std::vector<double>& nu) {
  if (values.ndim() != 2 || static_cast<std::size_t>(values.shape(0)) != eta.size() ||
      static_cast<std::size_t>(values.shape(1)) != nu.size()) {
    throw py::value_error("grid shape must be (len(eta), len(nu))");
  }
  WignerGrid g(eta, nu);
  std::copy(values.data(), values.data() + values.size(), g.values.begin());
  return g;
}

py::dict to_dict(const CriterionResult& r) {
  py::dict d;
  d["id"] = r.id;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["measured"] = r.measured;
  d["threshold"] = r.threshold;
  d["detail"] = r.detail;
  d["seconds"] = r.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectra seen by an accelerated observer in ambient wave noise";

  static py::exception<Error> error(m, "RindlerError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "psi_closed",
      [](double v, double a, double b, double c) {
        const auto r = psi_closed(v, {a, b, c});
        return py::make_tuple(r.value, static_cast<int>(r.branch), r.delta);
      },
      py::arg("v"), py::arg("a"), py::arg("b"), py::arg("c"),
      "Closed-form PV integral; returns (value, case, delta).");
  m.def(
      "psi_quadrature",
      [](double v, double a, double b, double c) {
        const auto r = psi_quadrature(v, {a, b, c});
        return py::make_tuple(r.real, r.imag, r.error);
      },
      py::arg("v"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("rindler_wigner", &rindler_wigner, py::arg("xi"), py::arg("f0"), py::arg("omega"), py::arg("c0") = 1.0);
  m.def("rindler_wigner_planck", &rindler_wigner_planck, py::arg("xi"), py::arg("f0"), py::arg("omega"),
        py::arg("c0") = 1.0);
  m.def("rindler_wigner_regularized", &rindler_wigner_regularized, py::arg("xi"), py::arg("f0"), py::arg("eps"),
        py::arg("tau"), py::arg("omega"), py::arg("c0") = 1.0);

  m.def(
      "correction_R",
      [](double alpha, double alpha0, double eta, double nu) {
        const auto r = correction_R(alpha, alpha0, eta, nu);
        return py::make_tuple(r.value, r.delta);
      },
      py::arg("alpha"), py::arg("alpha0"), py::arg("eta"), py::arg("nu"), "Returns (value, delta).");
  m.def(
      "correction_grid",
      [](double alpha, double alpha0, const Array& eta, const Array& nu) {
        return to_array(correction_grid(alpha, alpha0, to_vector(eta), to_vector(nu)));
      },
      py::arg("alpha"), py::arg("alpha0"), py::arg("eta"), py::arg("nu"));
  m.def(
      "mirror_wigner",
      [](double xi, double xi0, double alpha, double f0, double tau, double omega, double c0) {
        return mirror_wigner(MirrorScene{xi, xi0, alpha, c0}, f0, tau, omega);
      },
      py::arg("xi"), py::arg("xi0"), py::arg("alpha"), py::arg("f0"), py::arg("tau"), py::arg("omega"),
      py::arg("c0") = 1.0);
  m.def("near_wall_limit", &near_wall_limit, py::arg("alpha"), py::arg("nu"));
  m.def("stationary_mirror_spectrum", &stationary_mirror_spectrum, py::arg("d"), py::arg("f0"), py::arg("omega"),
        py::arg("c0") = 1.0);

  m.def(
      "fit_scene",
      [](const Array& R, const Array& eta, const Array& nu, std::optional<Array> stderr_grid) {
        const auto e = to_vector(eta), n = to_vector(nu);
        const auto observed = from_array(R, e, n);
        FitConfig cfg;
        std::optional<WignerGrid> se;
        if (stderr_grid) {
          se = from_array(*stderr_grid, e, n);
          cfg.weights = WeightMode::InverseVariance;
        }
        const auto fit = fit_scene(observed, se ? &*se : nullptr, cfg);
        py::dict d;
        d["alpha"] = fit.alpha;
        d["alpha0"] = fit.alpha0;
        d["residual"] = fit.residual;
        d["evaluations"] = fit.evaluations;
        d["budget_exhausted"] = fit.budget_exhausted;
        d["no_obstacle"] = fit.no_obstacle;
        d["sign_ambiguous"] = fit.sign_ambiguous;
        return d;
      },
      py::arg("R"), py::arg("eta"), py::arg("nu"), py::arg("stderr") = py::none());
  m.def(
      "fit_distance_stationary",
      [](const Array& omega, const Array& W, double f0, double c0) {
        const auto fit = fit_distance_stationary(to_vector(omega), to_vector(W), f0, c0);
        return py::make_tuple(fit.distance, fit.residual, fit.at_boundary);
      },
      py::arg("omega"), py::arg("W"), py::arg("f0") = 1.0, py::arg("c0") = 1.0,
      "Returns (distance, residual, at_boundary).");

  m.def(
      "simulate_rindler",
      [](double xi, double eps, const Array& tau, const Array& lag, const Array& omega, std::size_t realizations,
         std::size_t waves, std::uint64_t seed, double Tc) {
        EstimatorConfig cfg;
        cfg.realizations = realizations;
        cfg.waves = waves;
        cfg.seed = seed;
        cfg.window = Window{WindowKind::Gaussian, Tc};
        cfg.tau = to_vector(tau);
        cfg.lag = to_vector(lag);
        const auto w = to_vector(omega);
        WignerEstimate est;
        {
          py::gil_scoped_release release;
          est = estimate_wigner(SourceSpectrum{1.0, 0.0, eps}, traj::Rindler{xi}, cfg, w, false, 1.0, xi);
        }
        return py::make_tuple(to_array(est.mean), to_array(est.std_error));
      },
      py::arg("xi"), py::arg("eps"), py::arg("tau"), py::arg("lag"), py::arg("omega"), py::arg("realizations"),
      py::arg("waves") = 4096, py::arg("seed") = 1, py::arg("Tc") = 1.0,
      "Monte-Carlo windowed spectrum (mean, stderr), rows over tau and columns over omega.");

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        ValidationOptions opt;
        opt.seed = seed;
        const auto report = run_suite(name, opt);
        py::list out;
        for (const auto& r : report.results) out.append(to_dict(r));
        return out;
      },
      py::arg("name"), py::arg("seed") = ValidationOptions{}.seed);
}
