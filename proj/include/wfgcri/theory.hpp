#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfgcri/distributions.hpp"
#include "wfgcri/measures.hpp"

namespace wfgcri {

enum class TheoremId {
  T2_1i,   // kernel lower bound via 1 - S >= ... : lhs >= int psi S_X F_Y^beta / Gamma
  T2_1ii,  // log-sum lower bound: lhs >= exp(D + H(X)) / Gamma(beta+1)
  T2_2,    // stochastic order vs self-pair min/max bounds
  T2_3,    // monotonicity in either argument under stochastic order
  T2_4,    // two-sided triangle: K(X,Y) + K(Y,Z) >= 2 K(X,Z)
  T2_7i,   // finite support lower bound, beta >= 1
  T2_7ii,  // finite support upper bound, 0 < beta <= 1
  T2_8,    // psi = zeta^beta power bound vs first-order measure
  T2_9,    // hazard-mixture subadditivity
  T3_2,    // proportional-hazard tilt scaling alpha^beta
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

enum class CheckStatus { holds, violated, premise_violated, inconclusive };
const char* status_name(CheckStatus status);

struct BoundCheck {
  TheoremId theorem = TheoremId::T2_1i;
  CheckStatus status = CheckStatus::inconclusive;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;   // oriented so slack >= -margin means the bound holds
  double margin = 0.0;  // 1e-7 * max(|lhs|, |rhs|, 1)
  std::string config;
  std::string config_hash;  // fnv1a64 of config
  std::string note;
  bool holds() const { return status == CheckStatus::holds; }
};

enum class OrderDirection { x_le_st_y, x_ge_st_y, detect };

// +1 when X <=st Y on the probe grid, -1 when X >=st Y, 0 when unordered.
// Equal models report +1.
int stochastic_order_direction(const SurvivalModel& x, const SurvivalModel& y);

BoundCheck check_lower_bound_T2_1_i(const SurvivalModel& x,
                                    const SurvivalModel& y, double beta,
                                    const WeightSpec& weight,
                                    const IntegrationConfig& cfg = {});

BoundCheck check_lower_bound_T2_1_ii(const SurvivalModel& x,
                                     const SurvivalModel& y, double beta,
                                     const WeightSpec& weight,
                                     const IntegrationConfig& cfg = {});

// The premise for the requested direction is verified on the probe grid
// first; premise_violated when it fails. `detect` applies whichever
// direction holds.
BoundCheck check_order_bounds_T2_2(const SurvivalModel& x,
                                   const SurvivalModel& y, double beta,
                                   const WeightSpec& weight,
                                   OrderDirection direction = OrderDirection::detect,
                                   const IntegrationConfig& cfg = {});

// Premise X <=st Y <=st Z. Emits both monotonicity checks and the
// two-sided triangle check, in that order.
std::vector<BoundCheck> check_monotonicity_T2_3_T2_4(
    const SurvivalModel& x, const SurvivalModel& y, const SurvivalModel& z,
    double beta, const WeightSpec& weight, const IntegrationConfig& cfg = {});

// Models are restricted to (a, b) as conditional laws. part 1 requires
// beta >= 1, part 2 requires 0 < beta <= 1.
BoundCheck check_finite_support_T2_7(int part, const SurvivalModel& x,
                                     const SurvivalModel& y, double a,
                                     double b, double beta,
                                     const WeightSpec& weight,
                                     const IntegrationConfig& cfg = {});

// psi = w^(beta*zeta_exp) against the first-order measure with weight
// w^zeta_exp. Direction >= for beta > 1, <= for beta < 1.
// Valid on the sampled scale regime (rates/scales >= 1); the source bound is
// not scale-free.
BoundCheck check_weight_power_T2_8(const SurvivalModel& x,
                                   const SurvivalModel& y, double beta,
                                   double zeta_exp,
                                   const IntegrationConfig& cfg = {});

BoundCheck check_mixture_T2_9(
    const std::vector<std::pair<double, SurvivalModel>>& components,
    const SurvivalModel& y, double beta, const WeightSpec& weight,
    const IntegrationConfig& cfg = {});

BoundCheck check_phr_scaling_T3_2(const SurvivalModel& x,
                                  const SurvivalModel& y, double beta,
                                  const WeightSpec& weight, double t,
                                  double alpha,
                                  const IntegrationConfig& cfg = {});

// General-weight variants used by transform-covariance tests.
BoundCheck check_order_bounds_T2_2_general(
    const SurvivalModel& x, const SurvivalModel& y, double beta,
    const std::function<double(double)>& weight, const std::string& weight_desc,
    OrderDirection direction = OrderDirection::detect,
    const IntegrationConfig& cfg = {});
std::vector<BoundCheck> check_monotonicity_T2_3_T2_4_general(
    const SurvivalModel& x, const SurvivalModel& y, const SurvivalModel& z,
    double beta, const std::function<double(double)>& weight,
    const std::string& weight_desc, const IntegrationConfig& cfg = {});

struct SuiteConfig {
  TheoremId theorem = TheoremId::T2_1i;
  std::uint64_t seed = 42;
  std::size_t configs = 200;
  IntegrationConfig integration;
};

// Deterministic randomized configurations over the exponential / Weibull /
// Rayleigh families (rates and scales in [1,3], Weibull shape in [0.8,2.5]),
// beta in [0.1,3] (clamped per theorem), weight exponents in {0,0.3,1,2}.
std::vector<BoundCheck> run_suite(const SuiteConfig& config, int jobs = 1);

// theorem,config-hash,lhs,rhs,slack,holds rows (holds carries the status).
std::string suite_csv(const std::vector<BoundCheck>& checks);

}  // namespace wfgcri
