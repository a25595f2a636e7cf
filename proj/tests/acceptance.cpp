// Release gate: every criterion prints exactly one [PASS]/[FAIL] line and the
// process exits nonzero when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wfgcri/chaos.hpp"
#include "wfgcri/distributions.hpp"
#include "wfgcri/estimators.hpp"
#include "wfgcri/finance.hpp"
#include "wfgcri/measures.hpp"
#include "wfgcri/montecarlo.hpp"
#include "wfgcri/theory.hpp"

using namespace wfgcri;

namespace {

struct Gate {
  std::string detail;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }

  void require_close(double got, double want, double tol,
                     const std::string& what) {
    require(std::isfinite(got) && std::fabs(got - want) <= tol,
            what + ": got " + std::to_string(got) + ", want " +
                std::to_string(want) + " +- " + std::to_string(tol));
  }

  void require_rel(double got, double want, double rel,
                   const std::string& what) {
    double scale = std::max(std::fabs(got), std::fabs(want));
    if (scale == 0.0) return;  // both exactly zero
    require(std::isfinite(got) && std::fabs(got - want) <= rel * scale,
            what + ": got " + std::to_string(got) + ", want " +
                std::to_string(want) + " within rel " + std::to_string(rel));
  }
};

// ---- 1: pinned values, exponential against its hazard-tilted reference ----

bool criterion_tilt_table(Gate& g) {
  const double lambda = 0.8, alpha = 0.5;
  const double betas[] = {0.2, 0.5, 0.7, 0.9, 1.3, 1.5};
  const double pins[] = {1.632282, 1.657282, 1.635114,
                         1.590914, 1.459516, 1.381068};
  SurvivalModel x = SurvivalModel::exponential(lambda);
  SurvivalModel y = SurvivalModel::phr(x, alpha);
  for (int i = 0; i < 6; ++i) {
    const double analytic =
        std::pow(alpha, betas[i]) * (betas[i] + 1.0) / (lambda * lambda);
    g.require_close(analytic, pins[i], 5e-6,
                    "analytic tilt value at beta=" + std::to_string(betas[i]));
    const double quad = wfgcri::wfgcri({x, y, betas[i], {1.0}, 0.0, {}}).value;
    g.require_close(quad, pins[i], 5e-6,
                    "quadrature tilt value at beta=" + std::to_string(betas[i]));
  }
  return g.ok;
}

// ---- 2: pinned values, exponential pair ----

bool criterion_pair_table(Gate& g) {
  const double lam1 = 2.5, lam2 = 3.5;
  const double betas[] = {0.3, 0.5, 0.7, 0.9, 1.2, 1.5};
  const double pins[] = {0.230092, 0.283972, 0.344238,
                         0.411518, 0.527104, 0.662601};
  SurvivalModel x = SurvivalModel::exponential(lam1);
  SurvivalModel y = SurvivalModel::exponential(lam2);
  for (int i = 0; i < 6; ++i) {
    const double analytic = (betas[i] + 1.0) * std::pow(lam2, betas[i]) /
                            std::pow(lam1, betas[i] + 2.0);
    g.require_close(analytic, pins[i], 5e-6,
                    "analytic pair value at beta=" + std::to_string(betas[i]));
    const double quad = wfgcri::wfgcri({x, y, betas[i], {1.0}, 0.0, {}}).value;
    g.require_rel(quad, analytic, 1e-7,
                  "quadrature pair value at beta=" + std::to_string(betas[i]));
  }
  return g.ok;
}

// ---- 3: equal-shape Weibull residual identity ----

bool criterion_weibull_identity(Gate& g) {
  const double etas[] = {0.5, 1.0, 2.0};
  const double alphas[] = {0.5, 1.0, 2.0};
  const double ts[] = {0.0, 0.5, 2.0};
  const double betas[] = {0.8, 1.4};
  for (double eta1 : etas)
    for (double eta2 : etas)
      for (double alpha : alphas) {
        SurvivalModel x = SurvivalModel::weibull(2.0, eta1);
        SurvivalModel y = SurvivalModel::weibull(2.0, eta2);
        for (double beta : betas) {
          const double closed =
              std::pow(eta2, beta) / (2.0 * alpha * std::pow(eta1, beta + 1.0));
          double at_zero = 0.0;
          for (double t : ts) {
            const double v =
                dwfgcri_phr({x, y, beta, {1.0}, t, {}}, alpha).value;
            g.require_rel(v, closed, 1e-6,
                          "residual identity at eta1=" + std::to_string(eta1) +
                              " eta2=" + std::to_string(eta2) +
                              " alpha=" + std::to_string(alpha) +
                              " t=" + std::to_string(t));
            if (t == 0.0) at_zero = v;
            g.require_rel(v, at_zero, 1e-6, "conditioning-time invariance");
          }
        }
      }
  return g.ok;
}

// ---- 4: Monte Carlo bias / RMSE study ----

// nonincreasing over the n axis, allowing `slack_inversions` noise upticks
std::size_t count_inversions(const std::vector<double>& column) {
  std::size_t inversions = 0;
  for (std::size_t i = 1; i < column.size(); ++i)
    inversions += column[i] > column[i - 1];
  return inversions;
}

void check_study(Gate& g, const StudyReport& report, const std::string& name) {
  const std::size_t n_count = report.config.ns.size();
  for (const auto& cell : report.cells) {
    g.require(std::fabs(cell.mean_estimate - cell.true_value) <=
                  3.0 * cell.rmse,
              name + ": mean outside 3*RMSE at beta=" +
                  std::to_string(cell.beta) + " n=" + std::to_string(cell.n));
  }
  for (std::size_t bi = 0; bi < report.config.betas.size(); ++bi) {
    std::vector<double> ab, rmse;
    for (std::size_t ni = 0; ni < n_count; ++ni) {
      ab.push_back(report.cells[bi * n_count + ni].ab);
      rmse.push_back(report.cells[bi * n_count + ni].rmse);
    }
    g.require(count_inversions(ab) <= 1,
              name + ": absolute bias not decreasing in n at beta=" +
                  std::to_string(report.config.betas[bi]));
    g.require(count_inversions(rmse) <= 1,
              name + ": RMSE not decreasing in n at beta=" +
                  std::to_string(report.config.betas[bi]));
  }
}

bool criterion_monte_carlo(Gate& g) {
  StudyConfig phr;
  phr.scenario = PhrScenario{0.8, 0.5};
  phr.betas = {0.2, 0.5, 1.5};
  phr.ns = {100, 300, 1000};
  phr.replications = 1000;
  phr.seed = 1;
  check_study(g, run_study(phr, 1), "tilt scenario");

  StudyConfig two;
  two.scenario = TwoSampleScenario{2.5, 3.5};
  two.betas = {0.3, 0.9, 1.5};
  two.ns = {100, 300, 1000};
  two.replications = 1000;
  two.seed = 1;
  check_study(g, run_study(two, 1), "two-sample scenario");
  return g.ok;
}

// ---- 5: randomized inequality suite ----

bool criterion_bound_suite(Gate& g) {
  for (TheoremId id : all_theorems()) {
    auto checks = run_suite({id, 42, 200, {}}, 1);
    g.require(checks.size() >= 200,
              std::string(theorem_name(id)) + ": suite came back short");
    for (const auto& c : checks) {
      g.require(c.status == CheckStatus::holds ||
                    c.status == CheckStatus::premise_violated,
                std::string(theorem_name(id)) + " " + c.config + ": status " +
                    status_name(c.status));
    }
  }
  return g.ok;
}

// ---- 6: estimators against counting oracles ----

bool criterion_oracle_equivalence(Gate& g) {
  std::mt19937 gen(123);
  std::uniform_int_distribution<std::size_t> size_dist(2, 50);
  std::uniform_real_distribution<double> beta_dist(0.05, 2.2);
  std::uniform_real_distribution<double> alpha_dist(0.5, 3.0);
  std::uniform_real_distribution<double> rate_dist(0.5, 3.0);
  std::uniform_int_distribution<int> c_dist(0, 2);
  std::exponential_distribution<double> draw(1.0);

  for (int rep = 0; rep < 100; ++rep) {
    const double scale = 1.0 / rate_dist(gen);
    std::vector<double> sample(size_dist(gen));
    for (double& v : sample) v = scale * draw(gen);
    const double beta = beta_dist(gen);
    const double alpha = alpha_dist(gen);
    const double c = c_dist(gen);
    const double est =
        estimate_wfgcri_phr(EmpiricalSample(sample), beta, alpha, c);
    const double want = oracle::phr_plugin_counting(sample, beta, alpha, c);
    g.require_rel(est, want, 1e-12,
                  "tilt estimator vs counting oracle, rep " +
                      std::to_string(rep));
  }
  for (int rep = 0; rep < 100; ++rep) {
    const double sx = 1.0 / rate_dist(gen), sy = 1.0 / rate_dist(gen);
    std::vector<double> xs(size_dist(gen)), ys(size_dist(gen));
    for (double& v : xs) v = sx * draw(gen);
    for (double& v : ys) v = sy * draw(gen);
    const double beta = beta_dist(gen);
    const double c = c_dist(gen);
    const double est = estimate_wfgcri_two_sample(EmpiricalSample(xs),
                                                  EmpiricalSample(ys), beta, c);
    const double want = oracle::two_sample_counting(xs, ys, beta, c);
    g.require_rel(est, want, 1e-12,
                  "two-sample estimator vs counting oracle, rep " +
                      std::to_string(rep));
  }
  return g.ok;
}

// ---- 7: chaotic-map trajectory ordering ----

std::vector<double> beta_grid(double lo, double hi, double step) {
  std::vector<double> out;
  auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9);
  for (std::size_t k = 0; k <= count; ++k) out.push_back(lo + k * step);
  return out;
}

bool criterion_chaos_ordering(Gate& g) {
  const std::vector<double> rs = {1.0, 3.1, 3.5, 4.0, 4.5, 4.9};
  const auto betas = beta_grid(0.01, 5.0, 0.01);
  auto cells =
      wfgcri_curve(MapKind::ricker, rs, betas, 0.5, 0.01, 10000, 1.0, 1);
  const std::size_t nb = betas.size();
  g.require(cells.size() == rs.size() * nb, "curve grid size mismatch");
  if (!g.ok) return false;
  std::vector<double> means(rs.size(), 0.0);
  for (std::size_t ri = 0; ri < rs.size(); ++ri) {
    for (std::size_t bi = 0; bi < nb; ++bi)
      means[ri] += cells[ri * nb + bi].value;
    means[ri] /= static_cast<double>(nb);
  }
  for (std::size_t bi = 0; bi < nb; ++bi) {
    g.require(cells[5 * nb + bi].value > cells[0 * nb + bi].value,
              "growth-rate 4.9 curve not above 1.0 at beta=" +
                  std::to_string(betas[bi]));
  }
  for (std::size_t ri = 1; ri < rs.size(); ++ri) {
    g.require(means[ri] > means[ri - 1],
              "mean curve ordering broken between r=" +
                  std::to_string(rs[ri - 1]) + " and r=" +
                  std::to_string(rs[ri]));
  }
  auto tent = wfgcri_curve(MapKind::tent, {1.0}, beta_grid(0.01, 2.0, 0.01),
                           0.5, 0.01, 10000, 1.0, 1);
  for (const auto& c : tent)
    g.require(c.value < 0.05, "tent value at r=1 not near zero");
  return g.ok;
}

// ---- 8: synthetic price pipeline ----

bool criterion_finance_pipeline(Gate& g) {
  const double rate = 5.0, beta = 0.5, alpha = 5.0;
  const double closed = std::pow(alpha, beta) * (beta + 1.0) / (rate * rate);
  auto raw = SurvivalModel::exponential(rate).sample(5000, 73);
  auto returns = make_return_series(raw);
  auto cells = rolling_wfgcri(returns, 250, 100, {beta}, {alpha});
  g.require(cells.size() == 48, "expected 48 rolling windows");
  double mean = 0.0;
  for (const auto& c : cells) mean += c.value;
  mean /= static_cast<double>(cells.size());
  double var = 0.0;
  for (const auto& c : cells) var += (c.value - mean) * (c.value - mean);
  const double sd = std::sqrt(var / static_cast<double>(cells.size()));
  for (const auto& c : cells) {
    g.require(std::fabs(c.value - closed) <= 3.0 * sd,
              "window " + c.window_start + " outside the 3-sd band");
  }

  // scale identity of the underlying estimator: x -> a*x multiplies the
  // weight-w value by a^2 exactly
  {
    std::vector<double> window(returns.shifted.begin() + 2000,
                               returns.shifted.begin() + 2250);
    std::vector<double> scaled;
    for (double v : window) scaled.push_back(3.0 * v);
    const double base = estimate_wfgcri_phr(EmpiricalSample(window), 1.0, 5.0);
    const double blown =
        estimate_wfgcri_phr(EmpiricalSample(scaled), 1.0, 5.0);
    g.require_rel(blown, 9.0 * base, 1e-12, "a^2 scale identity");
  }

  auto burst_raw = raw;
  for (std::size_t i = 2000; i < 2250; ++i) burst_raw[i] *= 3.0;
  auto burst = make_return_series(burst_raw);
  for (double b : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    auto roll = rolling_wfgcri(burst, 250, 100, {b}, {alpha});
    g.require(roll[20].value > roll[19].value &&
                  roll[20].value > roll[21].value,
              "burst window not above both neighbors at beta=" +
                  std::to_string(b));
  }
  return g.ok;
}

// ---- 9: reduction identities ----

bool criterion_reductions(Gate& g) {
  std::mt19937 gen(2026);
  std::uniform_real_distribution<double> rate_dist(0.6, 2.8);
  std::uniform_real_distribution<double> shape_dist(0.9, 2.4);
  std::uniform_real_distribution<double> beta_dist(0.15, 2.5);
  std::uniform_int_distribution<int> family(0, 2);
  std::uniform_int_distribution<int> c_pick(0, 3);
  const double cs[] = {0.0, 0.5, 1.0, 2.0};

  auto draw_model = [&]() {
    switch (family(gen)) {
      case 0: return SurvivalModel::exponential(rate_dist(gen));
      case 1: return SurvivalModel::weibull(shape_dist(gen), rate_dist(gen));
      default: return SurvivalModel::rayleigh(rate_dist(gen));
    }
  };

  for (int rep = 0; rep < 20; ++rep) {
    SurvivalModel x = draw_model();
    SurvivalModel y = draw_model();
    const double beta = beta_dist(gen);
    const WeightSpec weight{cs[c_pick(gen)]};
    const std::string tag = " (config " + std::to_string(rep) + ")";

    g.require_rel(wfgcri::wfgcri({x, y, 1.0, weight, 0.0, {}}).value,
                  wcri(x, y, weight).value, 1e-9,
                  "beta=1 equals the first-order weighted measure" + tag);
    g.require_rel(wfgcri::wfgcri({x, x, beta, weight, 0.0, {}}).value,
                  wfgcre(x, beta, weight).value, 1e-9,
                  "self-pair equals the self measure" + tag);
    g.require_rel(dwfgcri({x, y, beta, weight, 0.0, {}}).value,
                  wfgcri::wfgcri({x, y, beta, weight, 0.0, {}}).value, 1e-9,
                  "t=0 residual equals the unconditional measure" + tag);
    const double t = rep % 2 == 0 ? 0.0 : 0.4;
    g.require_rel(dwfgcri_phr({x, y, beta, weight, t, {}}, 1.0).value,
                  dwfgcri({x, y, beta, weight, t, {}}).value, 1e-9,
                  "hazard tilt at alpha=1 equals the base measure" + tag);
    g.require_rel(dwfgcri_po({x, y, beta, weight, t, {}}, 1.0).value,
                  dwfgcri({x, y, beta, weight, t, {}}).value, 1e-9,
                  "odds tilt at alpha=1 equals the base measure" + tag);
  }
  return g.ok;
}

struct Criterion {
  const char* name;
  std::function<bool(Gate&)> run;
  double budget_seconds;  // 0 = untimed
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 pinned values: exponential vs hazard-tilted reference",
       criterion_tilt_table, 1.0},
      {"2 pinned values: exponential pair", criterion_pair_table, 1.0},
      {"3 equal-shape Weibull residual identity", criterion_weibull_identity,
       0.0},
      {"4 estimator bias and RMSE study", criterion_monte_carlo, 120.0},
      {"5 randomized inequality suite", criterion_bound_suite, 300.0},
      {"6 plug-in estimators match counting oracles",
       criterion_oracle_equivalence, 0.0},
      {"7 chaotic-map trajectory ordering", criterion_chaos_ordering, 60.0},
      {"8 synthetic price pipeline", criterion_finance_pipeline, 0.0},
      {"9 reduction identities", criterion_reductions, 0.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Gate gate;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(gate);
    } catch (const std::exception& e) {
      gate.ok = false;
      gate.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criterion.budget_seconds > 0.0 &&
        seconds > criterion.budget_seconds) {
      ok = false;
      gate.detail = "runtime " + std::to_string(seconds) + " s over budget " +
                    std::to_string(criterion.budget_seconds) + " s";
    }
    if (!ok) ++failures;
    std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.name,
                seconds, gate.detail.empty() ? "" : ": ",
                gate.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
