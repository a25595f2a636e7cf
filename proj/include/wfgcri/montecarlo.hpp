#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace wfgcri {

// Exponential parent with a proportional-hazard reference S^alpha; the
// single-sample estimator is evaluated against alpha^beta*(beta+1)/rate^2.
struct PhrScenario {
  double rate = 0.8;
  double alpha = 0.5;
};

// Independent exponential pair; the two-sample estimator is evaluated
// against (beta+1)*rate_y^beta/rate_x^(beta+2).
struct TwoSampleScenario {
  double rate_x = 2.5;
  double rate_y = 3.5;
};

using Scenario = std::variant<PhrScenario, TwoSampleScenario>;

struct StudyConfig {
  Scenario scenario;
  std::vector<double> betas;
  std::vector<std::size_t> ns;
  std::size_t replications = 1000;
  std::uint64_t seed = 1;
  double weight_exp = 1.0;
};

struct CellStats {
  double beta = 0.0;
  std::size_t n = 0;
  double true_value = 0.0;
  double mean_estimate = 0.0;
  double ab = 0.0;        // |mean - true|
  double rmse = 0.0;      // sqrt(mean((est - true)^2))
  double variance = 0.0;  // population variance of the estimates
  double ci_length = 0.0; // 2 * 1.96 * sd
};

struct StudyReport {
  StudyConfig config;
  std::vector<CellStats> cells;  // row-major over (beta, n)
};

double scenario_true_value(const Scenario& scenario, double beta,
                           double weight_exp = 1.0);

// Counter-based per-replication stream: independent of worker scheduling.
std::uint64_t replication_seed(std::uint64_t study_seed,
                               std::uint64_t cell_index, std::uint64_t rep);

// Aggregation over a replication vector; summation order is fixed, so the
// statistics are identical for any worker count. RMSE^2 = AB^2 + variance
// holds exactly by construction.
CellStats summarize(const std::vector<double>& estimates, double true_value,
                    double beta, std::size_t n);

StudyReport run_study(const StudyConfig& config, int jobs = 1);

// CSV (default) or markdown rows: beta,n,true,mean,ab,rmse,ci_length.
std::string emit_table(const StudyReport& report, bool markdown = false);

}  // namespace wfgcri
