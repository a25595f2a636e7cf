#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wfgcri/chaos.hpp"
#include "wfgcri/distributions.hpp"
#include "wfgcri/errors.hpp"
#include "wfgcri/estimators.hpp"
#include "wfgcri/finance.hpp"
#include "wfgcri/measures.hpp"
#include "wfgcri/model_parse.hpp"
#include "wfgcri/montecarlo.hpp"
#include "wfgcri/theory.hpp"
#include "wfgcri/version.hpp"

namespace py = pybind11;
using namespace wfgcri;

namespace {

MeasureRequest make_request(const SurvivalModel& x, const SurvivalModel& y,
                            double beta, double weight_exp, double t) {
  return MeasureRequest{x, y, beta, {weight_exp}, t, {}};
}

py::dict result_dict(const MeasureResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["upper_truncation"] = r.upper_truncation;
  d["err_estimate"] = r.err_estimate;
  d["subdivisions"] = r.subdivisions;
  return d;
}

py::dict check_dict(const BoundCheck& c) {
  py::dict d;
  d["theorem"] = std::string(theorem_name(c.theorem));
  d["status"] = std::string(status_name(c.status));
  d["lhs"] = c.lhs;
  d["rhs"] = c.rhs;
  d["slack"] = c.slack;
  d["margin"] = c.margin;
  d["config"] = c.config;
  d["config_hash"] = c.config_hash;
  d["note"] = c.note;
  return d;
}

Scenario make_scenario(const std::string& name, double rate, double alpha,
                       double rate_x, double rate_y) {
  if (name == "phr") return PhrScenario{rate, alpha};
  if (name == "two-sample") return TwoSampleScenario{rate_x, rate_y};
  throw std::invalid_argument("scenario must be 'phr' or 'two-sample'");
}

MapKind map_from_name(const std::string& name) {
  if (name == "ricker") return MapKind::ricker;
  if (name == "tent") return MapKind::tent;
  throw std::invalid_argument("map must be 'ricker' or 'tent'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "weighted fractional cumulative residual inaccuracy measures";
  m.attr("__version__") = WFGCRI_VERSION;

  py::register_exception<Error>(m, "MeasureError");

  py::class_<SurvivalModel>(m, "SurvivalModel")
      .def("sf", &SurvivalModel::sf, py::arg("w"))
      .def("log_sf", &SurvivalModel::log_sf, py::arg("w"))
      .def("cdf", &SurvivalModel::cdf, py::arg("w"))
      .def("pdf", &SurvivalModel::pdf, py::arg("w"))
      .def("hazard", &SurvivalModel::hazard, py::arg("w"))
      .def("quantile", &SurvivalModel::quantile, py::arg("q"))
      .def("sample", &SurvivalModel::sample, py::arg("n"), py::arg("seed"))
      .def("describe", &SurvivalModel::describe)
      .def("__repr__", [](const SurvivalModel& s) {
        return "SurvivalModel(" + s.describe() + ")";
      })
      .def_static("exponential", &SurvivalModel::exponential, py::arg("rate"))
      .def_static("weibull", &SurvivalModel::weibull, py::arg("shape"),
                  py::arg("eta"))
      .def_static("rayleigh", &SurvivalModel::rayleigh, py::arg("b"))
      .def_static("gamma_shape2", &SurvivalModel::gamma_shape2)
      .def_static("mixture_hazard", &SurvivalModel::mixture_hazard,
                  py::arg("components"))
      .def_static("phr", &SurvivalModel::phr, py::arg("base"), py::arg("alpha"))
      .def_static("po", &SurvivalModel::po, py::arg("base"), py::arg("alpha"))
      .def_static("truncated", &SurvivalModel::truncated, py::arg("base"),
                  py::arg("a"), py::arg("b"))
      .def_static("affine", &SurvivalModel::affine, py::arg("base"),
                  py::arg("scale"), py::arg("shift"));

  m.def("parse_model", &parse_survival_model, py::arg("spec"));

  m.def(
      "wfgcri",
      [](const SurvivalModel& x, const SurvivalModel& y, double beta,
         double weight_exp) {
        return result_dict(wfgcri::wfgcri(make_request(x, y, beta, weight_exp, 0.0)));
      },
      py::arg("true_model"), py::arg("ref_model"), py::arg("beta") = 1.0,
      py::arg("weight_exp") = 1.0);

  m.def(
      "dwfgcri",
      [](const SurvivalModel& x, const SurvivalModel& y, double beta,
         double weight_exp, double t) {
        return result_dict(dwfgcri(make_request(x, y, beta, weight_exp, t)));
      },
      py::arg("true_model"), py::arg("ref_model"), py::arg("beta") = 1.0,
      py::arg("weight_exp") = 1.0, py::arg("t") = 0.0);

  m.def(
      "dwfgcri_phr",
      [](const SurvivalModel& x, const SurvivalModel& y, double beta,
         double alpha, double weight_exp, double t) {
        return result_dict(
            dwfgcri_phr(make_request(x, y, beta, weight_exp, t), alpha));
      },
      py::arg("true_model"), py::arg("ref_model"), py::arg("beta") = 1.0,
      py::arg("alpha") = 1.0, py::arg("weight_exp") = 1.0, py::arg("t") = 0.0);

  m.def(
      "dwfgcri_po",
      [](const SurvivalModel& x, const SurvivalModel& y, double beta,
         double alpha, double weight_exp, double t) {
        return result_dict(
            dwfgcri_po(make_request(x, y, beta, weight_exp, t), alpha));
      },
      py::arg("true_model"), py::arg("ref_model"), py::arg("beta") = 1.0,
      py::arg("alpha") = 1.0, py::arg("weight_exp") = 1.0, py::arg("t") = 0.0);

  m.def(
      "cre",
      [](const SurvivalModel& x) { return result_dict(cre(x)); },
      py::arg("model"));
  m.def(
      "wcri",
      [](const SurvivalModel& x, const SurvivalModel& y, double weight_exp) {
        return result_dict(wcri(x, y, WeightSpec{weight_exp}));
      },
      py::arg("true_model"), py::arg("ref_model"), py::arg("weight_exp") = 1.0);
  m.def(
      "fgcre",
      [](const SurvivalModel& x, double beta) {
        return result_dict(fgcre(x, beta));
      },
      py::arg("model"), py::arg("beta"));
  m.def(
      "wfgcre",
      [](const SurvivalModel& x, double beta, double weight_exp) {
        return result_dict(wfgcre(x, beta, WeightSpec{weight_exp}));
      },
      py::arg("model"), py::arg("beta"), py::arg("weight_exp") = 1.0);
  m.def(
      "shannon_entropy",
      [](const SurvivalModel& x) { return result_dict(shannon_entropy(x)); },
      py::arg("model"));
  m.def("wfgcri_closed_form_exp", &wfgcri_closed_form_exp, py::arg("lam1"),
        py::arg("lam2"), py::arg("beta"), py::arg("c"));

  m.def(
      "estimate_wfgcri_phr",
      [](const std::vector<double>& sample, double beta, double alpha,
         double weight_exp) {
        return estimate_wfgcri_phr(EmpiricalSample(sample), beta, alpha,
                                   weight_exp);
      },
      py::arg("sample"), py::arg("beta"), py::arg("alpha") = 1.0,
      py::arg("weight_exp") = 1.0);
  m.def(
      "estimate_wfgcri_two_sample",
      [](const std::vector<double>& x, const std::vector<double>& y,
         double beta, double weight_exp) {
        return estimate_wfgcri_two_sample(EmpiricalSample(x),
                                          EmpiricalSample(y), beta, weight_exp);
      },
      py::arg("x"), py::arg("y"), py::arg("beta"), py::arg("weight_exp") = 1.0);

  m.def(
      "run_study",
      [](const std::string& scenario, const std::vector<double>& betas,
         const std::vector<std::size_t>& ns, std::size_t replications,
         std::uint64_t seed, double weight_exp, int jobs, double rate,
         double alpha, double rate_x, double rate_y) {
        StudyConfig cfg;
        cfg.scenario = make_scenario(scenario, rate, alpha, rate_x, rate_y);
        cfg.betas = betas;
        cfg.ns = ns;
        cfg.replications = replications;
        cfg.seed = seed;
        cfg.weight_exp = weight_exp;
        StudyReport report = run_study(cfg, jobs);
        py::list rows;
        for (const CellStats& c : report.cells) {
          py::dict d;
          d["beta"] = c.beta;
          d["n"] = c.n;
          d["true_value"] = c.true_value;
          d["mean_estimate"] = c.mean_estimate;
          d["ab"] = c.ab;
          d["rmse"] = c.rmse;
          d["variance"] = c.variance;
          d["ci_length"] = c.ci_length;
          rows.append(std::move(d));
        }
        return rows;
      },
      py::arg("scenario"), py::arg("betas"), py::arg("ns"),
      py::arg("replications") = 1000, py::arg("seed") = 1,
      py::arg("weight_exp") = 1.0, py::arg("jobs") = 1, py::arg("rate") = 0.8,
      py::arg("alpha") = 0.5, py::arg("rate_x") = 2.5, py::arg("rate_y") = 3.5);

  m.def(
      "run_suite",
      [](const std::string& theorem, std::uint64_t seed, std::size_t configs,
         int jobs) {
        auto id = theorem_from_name(theorem);
        if (!id) throw std::invalid_argument("unknown theorem: " + theorem);
        SuiteConfig cfg;
        cfg.theorem = *id;
        cfg.seed = seed;
        cfg.configs = configs;
        py::list rows;
        for (const BoundCheck& c : run_suite(cfg, jobs))
          rows.append(check_dict(c));
        return rows;
      },
      py::arg("theorem"), py::arg("seed") = 42, py::arg("configs") = 200,
      py::arg("jobs") = 1);

  m.def(
      "iterate_map",
      [](const std::string& map, double r, double x0, std::size_t n,
         std::size_t burn_in) {
        return iterate_map({map_from_name(map), r, x0, n, burn_in});
      },
      py::arg("map"), py::arg("r"), py::arg("x0") = 0.01,
      py::arg("n") = 10000, py::arg("burn_in") = 0);

  m.def(
      "chaos_curve",
      [](const std::string& map, const std::vector<double>& r_values,
         const std::vector<double>& betas, double alpha, double x0,
         std::size_t n, double weight_exp, int jobs) {
        py::list rows;
        for (const CurveCell& c :
             wfgcri_curve(map_from_name(map), r_values, betas, alpha, x0, n,
                          weight_exp, jobs)) {
          py::dict d;
          d["r"] = c.r;
          d["beta"] = c.beta;
          d["value"] = c.value;
          d["degenerate"] = c.degenerate;
          rows.append(std::move(d));
        }
        return rows;
      },
      py::arg("map"), py::arg("r_values"), py::arg("betas"),
      py::arg("alpha") = 0.5, py::arg("x0") = 0.01, py::arg("n") = 10000,
      py::arg("weight_exp") = 1.0, py::arg("jobs") = 1);

  m.def(
      "rolling_wfgcri",
      [](const std::vector<double>& raw_returns, std::size_t window,
         std::size_t step, const std::vector<double>& betas,
         const std::vector<double>& alphas, double weight_exp,
         bool per_window_shift, int jobs) {
        ReturnSeries series = make_return_series(raw_returns);
        py::list rows;
        for (const RollCell& c :
             rolling_wfgcri(series, window, step, betas, alphas, weight_exp,
                            per_window_shift, jobs)) {
          py::dict d;
          d["window_index"] = c.window_index;
          d["window_start"] = c.window_start;
          d["beta"] = c.beta;
          d["alpha"] = c.alpha;
          d["value"] = c.value;
          d["degenerate"] = c.degenerate;
          rows.append(std::move(d));
        }
        return rows;
      },
      py::arg("raw_returns"), py::arg("window") = 250, py::arg("step") = 100,
      py::arg("betas") = std::vector<double>{0.5},
      py::arg("alphas") = std::vector<double>{5.0},
      py::arg("weight_exp") = 1.0, py::arg("per_window_shift") = false,
      py::arg("jobs") = 1);

  m.def(
      "compare_series",
      [](const std::vector<double>& truth, const std::vector<double>& reference,
         const std::vector<double>& betas, double weight_exp) {
        py::list rows;
        for (const CompareCell& c :
             compare_series(make_return_series(truth),
                            make_return_series(reference), betas, weight_exp)) {
          py::dict d;
          d["beta"] = c.beta;
          d["value"] = c.value;
          rows.append(std::move(d));
        }
        return rows;
      },
      py::arg("truth"), py::arg("reference"), py::arg("betas"),
      py::arg("weight_exp") = 1.0);
}
