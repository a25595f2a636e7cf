#include "wfgcri/montecarlo.hpp"

#include <cmath>

#include "wfgcri/distributions.hpp"
#include "wfgcri/errors.hpp"
#include "wfgcri/estimators.hpp"
#include "wfgcri/measures.hpp"
#include "wfgcri/parallel.hpp"
#include "wfgcri/rng.hpp"
#include "wfgcri/special.hpp"

namespace wfgcri {

namespace {

void validate_config(const StudyConfig& c) {
  if (c.betas.empty() || c.ns.empty())
    throw_domain("study needs at least one beta and one n");
  if (c.replications < 1) throw_domain("study needs replications >= 1");
  for (std::size_t n : c.ns)
    if (n < 2) throw_domain("study cell sizes must be >= 2");
}

}  // namespace

double scenario_true_value(const Scenario& scenario, double beta,
                           double weight_exp) {
  if (!(beta >= 0.0 && beta <= 25.0)) throw_domain("beta must lie in [0, 25]");
  if (weight_exp != 1.0) {
    // general power weight: closed forms via the exponential pair formula
    if (const auto* phr = std::get_if<PhrScenario>(&scenario)) {
      return std::pow(phr->alpha, beta) *
             *wfgcri_closed_form_exp(phr->rate, phr->rate, beta, weight_exp);
    }
    const auto& ts = std::get<TwoSampleScenario>(scenario);
    return *wfgcri_closed_form_exp(ts.rate_x, ts.rate_y, beta, weight_exp);
  }
  if (const auto* phr = std::get_if<PhrScenario>(&scenario)) {
    if (!(phr->rate > 0.0 && phr->alpha > 0.0))
      throw_domain("scenario parameters must be > 0");
    return std::pow(phr->alpha, beta) * (beta + 1.0) / (phr->rate * phr->rate);
  }
  const auto& ts = std::get<TwoSampleScenario>(scenario);
  if (!(ts.rate_x > 0.0 && ts.rate_y > 0.0))
    throw_domain("scenario parameters must be > 0");
  return (beta + 1.0) * std::pow(ts.rate_y, beta) /
         std::pow(ts.rate_x, beta + 2.0);
}

std::uint64_t replication_seed(std::uint64_t study_seed,
                               std::uint64_t cell_index, std::uint64_t rep) {
  return derive_seed(study_seed, cell_index, rep);
}

CellStats summarize(const std::vector<double>& estimates, double true_value,
                    double beta, std::size_t n) {
  if (estimates.empty())
    throw Error(ErrorCode::degenerate, "no replications to summarize");
  const double r = static_cast<double>(estimates.size());
  CellStats s;
  s.beta = beta;
  s.n = n;
  s.true_value = true_value;
  s.mean_estimate = pairwise_sum(estimates) / r;
  s.ab = std::fabs(s.mean_estimate - true_value);
  std::vector<double> sq(estimates.size()), dev(estimates.size());
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    double e = estimates[i] - true_value;
    sq[i] = e * e;
    double d = estimates[i] - s.mean_estimate;
    dev[i] = d * d;
  }
  s.rmse = std::sqrt(pairwise_sum(sq) / r);
  s.variance = pairwise_sum(dev) / r;
  s.ci_length = 2.0 * 1.96 * std::sqrt(s.variance);
  return s;
}

StudyReport run_study(const StudyConfig& config, int jobs) {
  validate_config(config);
  StudyReport report;
  report.config = config;
  std::uint64_t cell_index = 0;
  for (double beta : config.betas) {
    for (std::size_t n : config.ns) {
      const double truth =
          scenario_true_value(config.scenario, beta, config.weight_exp);
      std::vector<double> estimates(config.replications);
      if (const auto* phr = std::get_if<PhrScenario>(&config.scenario)) {
        SurvivalModel parent = SurvivalModel::exponential(phr->rate);
        double alpha = phr->alpha;
        double c = config.weight_exp;
        std::uint64_t seed = config.seed, ci = cell_index;
        parallel_for(config.replications, jobs, [&, alpha, c, seed,
                                                 ci](std::size_t rep) {
          EmpiricalSample sample(
              parent.sample(n, replication_seed(seed, ci, rep)));
          estimates[rep] = estimate_wfgcri_phr(sample, beta, alpha, c);
        });
      } else {
        const auto& ts = std::get<TwoSampleScenario>(config.scenario);
        SurvivalModel mx = SurvivalModel::exponential(ts.rate_x);
        SurvivalModel my = SurvivalModel::exponential(ts.rate_y);
        double c = config.weight_exp;
        std::uint64_t seed = config.seed, ci = cell_index;
        parallel_for(config.replications, jobs, [&, c, seed,
                                                 ci](std::size_t rep) {
          std::uint64_t rs = replication_seed(seed, ci, rep);
          EmpiricalSample sx(mx.sample(n, derive_seed(rs, 1)));
          EmpiricalSample sy(my.sample(n, derive_seed(rs, 2)));
          estimates[rep] = estimate_wfgcri_two_sample(sx, sy, beta, c);
        });
      }
      report.cells.push_back(summarize(estimates, truth, beta, n));
      ++cell_index;
    }
  }
  return report;
}

std::string emit_table(const StudyReport& report, bool markdown) {
  std::string out;
  if (markdown) {
    out += "| beta | n | true | mean | AB | RMSE | CI length |\n";
    out += "|---|---|---|---|---|---|---|\n";
    for (const auto& c : report.cells) {
      out += "| " + format_g9(c.beta) + " | " + std::to_string(c.n) + " | " +
             format_g9(c.true_value) + " | " + format_g9(c.mean_estimate) +
             " | " + format_g9(c.ab) + " | " + format_g9(c.rmse) + " | " +
             format_g9(c.ci_length) + " |\n";
    }
    return out;
  }
  out += "beta,n,true_value,mean_estimate,ab,rmse,ci_length\n";
  for (const auto& c : report.cells) {
    out += format_g9(c.beta) + "," + std::to_string(c.n) + "," +
           format_g9(c.true_value) + "," + format_g9(c.mean_estimate) + "," +
           format_g9(c.ab) + "," + format_g9(c.rmse) + "," +
           format_g9(c.ci_length) + "\n";
  }
  return out;
}

}  // namespace wfgcri
