#include "wfgcri/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wfgcri/errors.hpp"
#include "wfgcri/quadrature.hpp"
#include "wfgcri/special.hpp"

namespace wfgcri {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 25.0))
    throw_domain("beta must lie in [0, 25]");
}

void validate_weight(const WeightSpec& w) {
  if (!(w.exponent >= 0.0)) throw_domain("weight exponent must be >= 0");
}

void validate_cfg(const IntegrationConfig& cfg) {
  if (!(cfg.rel_tol > 0.0 && cfg.abs_tol > 0.0))
    throw_domain("integration tolerances must be > 0");
  if (!(cfg.sf_cut > 0.0 && cfg.sf_cut < 0.5))
    throw_domain("sf_cut must lie in (0, 0.5)");
  if (cfg.max_subdivisions < 4)
    throw_domain("max_subdivisions must be >= 4");
}

std::function<double(double)> power_weight(const WeightSpec& w) {
  double c = w.exponent;
  if (c == 0.0) return [](double) { return 1.0; };
  if (c == 1.0) return [](double x) { return x; };
  return [c](double x) { return std::pow(x, c); };
}

// Breakpoint levels on the conditioned log-sf scale. The near-zero levels
// resolve the kernel kink at u -> 0 when beta < 1.
const double kCoarseLevels[] = {-0.05, -0.3, -1.0, -2.5, -5.0, -9.0, -14.0, -20.0};
const double kFineLevels[] = {-1e-6, -1e-4, -0.01};

}  // namespace

double gamma_norm(double beta) { return lanczos_gamma(beta + 1.0); }

MeasureResult tail_integral(
    const std::vector<std::function<double(double)>>& decay_curves,
    const std::function<double(double)>& integrand, double lower,
    const IntegrationConfig& cfg) {
  validate_cfg(cfg);
  const double target = std::log(cfg.sf_cut);

  // condition every curve to start at 0
  std::vector<std::function<double(double)>> curves;
  curves.reserve(decay_curves.size());
  for (const auto& c : decay_curves) {
    double at_lo = c(lower);
    if (!std::isfinite(at_lo))
      throw Error(ErrorCode::conditioning,
                  "decay curve is not finite at the lower limit");
    curves.push_back([c, at_lo](double w) { return c(w) - at_lo; });
  }

  // initial truncation point: all curves below sf_cut
  double upper = lower;
  for (const auto& c : curves)
    upper = std::max(upper, solve_log_sf_level(c, target, lower));
  if (!(upper > lower)) upper = lower + 1.0;

  std::vector<double> pts{lower};
  for (const auto& c : curves) {
    for (double lv : kFineLevels) {
      double w = solve_log_sf_level(c, lv, lower);
      if (w > lower && w < upper) pts.push_back(w);
    }
    for (double lv : kCoarseLevels) {
      if (lv <= target) continue;
      double w = solve_log_sf_level(c, lv, lower);
      if (w > lower && w < upper) pts.push_back(w);
    }
  }
  pts.push_back(upper);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](double a, double b) {
                          return b - a <= 1e-12 * std::max(1.0, upper - lower);
                        }),
            pts.end());
  if (pts.back() < upper) pts.push_back(upper);

  // Tolerance budget: the finite-range pass gets half, the accepted tail
  // bound a quarter, leaving slack for extension-pass error accumulation.
  AdaptiveResult acc =
      integrate_adaptive(integrand, pts, 0.5 * cfg.rel_tol, 0.5 * cfg.abs_tol,
                         cfg.max_subdivisions);
  double value = acc.value;
  double quad_err = acc.err;
  int panels = acc.panels;

  // Tail handling: estimate the remainder past `upper` from the local decay
  // rate of |integrand| and extend the truncation until it is negligible.
  auto absg = [&](double w) { return std::fabs(integrand(w)); };
  double tail = 0.0;
  int stalled = 0;
  for (int ext = 0;; ++ext) {
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
    double gu = absg(upper);
    if (gu == 0.0 || !(gu > 0.0)) {
      tail = 0.0;
      break;
    }
    double delta = std::max(5e-3 * (upper - lower), 1e-9 * (1.0 + upper));
    double gin = absg(upper - delta);
    double rho = (gin > 0.0 && gu > 0.0)
                     ? (std::log(gin) - std::log(gu)) / delta
                     : 0.0;
    if (rho > 0.0) {
      tail = gu / rho;
      if (tail <= 0.25 * tol) break;
    } else {
      tail = kInf;
    }
    if (ext >= 48 || upper > 1e14)
      throw Error(ErrorCode::divergence,
                  "integral tail does not decay; treated as divergent "
                  "(upper=" + format_g(upper, 6) + ", tail integrand=" +
                  format_g(gu, 6) + ")");
    double span = upper - lower;
    double step;
    if (rho > 0.0) {
      step = std::log(std::max(tail / (0.125 * std::max(tol, 1e-300)), 4.0)) / rho;
      step = std::min(std::max(step, 0.05 * span), 4.0 * span);
    } else {
      step = std::max(span, 1.0);
      if (++stalled >= 6)
        throw Error(ErrorCode::divergence,
                    "integrand stops decaying in the tail; integral diverges");
    }
    double next = upper + step;
    std::vector<double> ext_pts{upper, upper + 0.25 * step, upper + 0.5 * step,
                                next};
    AdaptiveResult add = integrate_adaptive(
        integrand, ext_pts, 0.5 * cfg.rel_tol, 0.5 * cfg.abs_tol,
        std::max(16, cfg.max_subdivisions - panels));
    value += add.value;
    quad_err += add.err;
    panels += add.panels;
    upper = next;
  }

  double err = quad_err + (std::isfinite(tail) ? tail : 0.0);
  double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
  if (err > tol) {
    if (panels >= cfg.max_subdivisions)
      throw Error(ErrorCode::integration,
                  "quadrature did not converge within the subdivision budget "
                  "(value=" + format_g(value, 9) + ", err=" +
                  format_g(err, 3) + ", panels=" + std::to_string(panels) + ")");
    throw Error(ErrorCode::integration,
                "quadrature error above tolerance (value=" +
                format_g(value, 9) + ", err=" + format_g(err, 3) + ")");
  }
  return MeasureResult{value, upper, err, panels};
}

namespace {

MeasureResult measure_engine(const std::function<double(double)>& log_sf_x,
                             const std::function<double(double)>& log_sf_y,
                             double beta,
                             const std::function<double(double)>& weight,
                             double t, const IntegrationConfig& cfg) {
  double lsx_t = log_sf_x(t);
  double lsy_t = log_sf_y(t);
  if (!std::isfinite(lsx_t) || !std::isfinite(lsy_t))
    throw Error(ErrorCode::conditioning,
                "survival function vanishes at the conditioning time t=" +
                    format_g(t, 6));
  auto integrand = [log_sf_x, log_sf_y, lsx_t, lsy_t, beta,
                    weight](double w) {
    double sxr = std::exp(log_sf_x(w) - lsx_t);
    if (sxr <= 0.0) return 0.0;  // true-model support exhausted: kernel is 0
    double u = lsy_t - log_sf_y(w);
    if (u < 0.0) u = 0.0;
    double k = std::pow(u, beta);  // pow(0,0)=1 keeps the beta=0 convention
    if (k == 0.0) return 0.0;
    return weight(w) * sxr * k;
  };
  MeasureResult r = tail_integral({log_sf_x, log_sf_y}, integrand, t, cfg);
  double g = gamma_norm(beta);
  r.value /= g;
  r.err_estimate /= g;
  return r;
}

MeasureResult measure_request(const MeasureRequest& req, double t) {
  validate_beta(req.beta);
  validate_weight(req.weight);
  if (!(t >= 0.0)) throw_domain("conditioning time t must be >= 0");
  const SurvivalModel x = req.true_model;
  const SurvivalModel y = req.ref_model;
  return measure_engine([x](double w) { return x.log_sf(w); },
                        [y](double w) { return y.log_sf(w); }, req.beta,
                        power_weight(req.weight), t, req.integration);
}

}  // namespace

MeasureResult wfgcri(const MeasureRequest& req) {
  return measure_request(req, 0.0);
}

MeasureResult dwfgcri(const MeasureRequest& req) {
  return measure_request(req, req.t);
}

MeasureResult dwfgcri_phr(const MeasureRequest& req, double alpha) {
  if (!(alpha > 0.0)) throw_domain("phr alpha must be > 0");
  MeasureRequest tilted = req;
  tilted.true_model = SurvivalModel::phr(req.true_model, alpha);
  tilted.ref_model = SurvivalModel::phr(req.ref_model, alpha);
  return dwfgcri(tilted);
}

MeasureResult dwfgcri_po(const MeasureRequest& req, double alpha) {
  if (!(alpha > 0.0)) throw_domain("po alpha must be > 0");
  MeasureRequest tilted = req;
  tilted.true_model = SurvivalModel::po(req.true_model, alpha);
  tilted.ref_model = SurvivalModel::po(req.ref_model, alpha);
  return dwfgcri(tilted);
}

std::optional<double> wfgcri_closed_form_exp(double lam1, double lam2,
                                             double beta, double c) {
  if (!(lam1 > 0.0) || !(lam2 > 0.0) || !(beta >= 0.0 && beta <= 25.0) ||
      !(c >= 0.0))
    return std::nullopt;
  return lanczos_gamma(beta + c + 1.0) / lanczos_gamma(beta + 1.0) *
         std::pow(lam2, beta) / std::pow(lam1, beta + c + 1.0);
}

MeasureResult shannon_entropy(const SurvivalModel& model,
                              const IntegrationConfig& cfg) {
  auto integrand = [model](double w) {
    double ls = model.log_sf(w);
    if (!std::isfinite(ls)) return 0.0;
    double hz = model.hazard(w);
    if (!(hz > 0.0)) return 0.0;  // zero density contributes 0 to f ln f
    double lf = ls + std::log(hz);
    return -std::exp(lf) * lf;
  };
  auto curve = [model](double w) { return model.log_sf(w); };
  return tail_integral({curve}, integrand, 0.0, cfg);
}

MeasureResult cre(const SurvivalModel& model, const IntegrationConfig& cfg) {
  auto integrand = [model](double w) {
    double ls = model.log_sf(w);
    if (!std::isfinite(ls)) return 0.0;
    return -std::exp(ls) * ls;
  };
  auto curve = [model](double w) { return model.log_sf(w); };
  return tail_integral({curve}, integrand, 0.0, cfg);
}

MeasureResult wcri(const SurvivalModel& x, const SurvivalModel& y,
                   const WeightSpec& weight, const IntegrationConfig& cfg) {
  validate_weight(weight);
  auto wfun = power_weight(weight);
  auto integrand = [x, y, wfun](double w) {
    double lsx = x.log_sf(w);
    if (!std::isfinite(lsx)) return 0.0;
    double sx = std::exp(lsx);
    if (sx <= 0.0) return 0.0;
    double u = -y.log_sf(w);
    if (u == 0.0) return 0.0;
    return wfun(w) * sx * u;
  };
  auto cx = [x](double w) { return x.log_sf(w); };
  auto cy = [y](double w) { return y.log_sf(w); };
  return tail_integral({cx, cy}, integrand, 0.0, cfg);
}

MeasureResult fgcre(const SurvivalModel& model, double beta,
                    const IntegrationConfig& cfg) {
  return wfgcre(model, beta, WeightSpec{0.0}, cfg);
}

MeasureResult wfgcre(const SurvivalModel& model, double beta,
                     const WeightSpec& weight, const IntegrationConfig& cfg) {
  MeasureRequest req{model, model, beta, weight, 0.0, cfg};
  return wfgcri(req);
}

MeasureResult wfgcri_general(const std::function<double(double)>& log_sf_x,
                             const std::function<double(double)>& log_sf_y,
                             double beta,
                             const std::function<double(double)>& weight,
                             double t, const IntegrationConfig& cfg) {
  validate_beta(beta);
  if (!(t >= 0.0)) throw_domain("conditioning time t must be >= 0");
  return measure_engine(log_sf_x, log_sf_y, beta, weight, t, cfg);
}

}  // namespace wfgcri
