#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wfgcri {

namespace detail {
class ModelNode;
}

// Immutable nonnegative lifetime model. Copies are cheap (shared node) and
// all evaluation methods are const and thread-safe.
class SurvivalModel {
 public:
  // w >= 0 everywhere a point is evaluated; negative w is a domain error.
  double sf(double w) const;
  double log_sf(double w) const;
  double cdf(double w) const;
  double pdf(double w) const;
  double hazard(double w) const;

  // Smallest w with cdf(w) >= q, q in [0, 1). Closed form where the family
  // has one, otherwise bisection on log-sf to abs tol 1e-12.
  double quantile(double q) const;

  // Inverse-transform draws; reproducible for fixed (n, seed).
  std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

  // Round-trips through parse_model for the grammar families.
  const std::string& describe() const;

  static SurvivalModel exponential(double rate);
  static SurvivalModel weibull(double shape, double eta);  // sf = exp(-eta*w^shape)
  static SurvivalModel rayleigh(double b);                 // sf = exp(-(b*w)^2)
  static SurvivalModel gamma_shape2();                     // sf = (1+w)*exp(-w)
  static SurvivalModel mixture_hazard(
      std::vector<std::pair<double, SurvivalModel>> components);
  static SurvivalModel phr(SurvivalModel base, double alpha);  // sf = S^alpha
  static SurvivalModel po(SurvivalModel base, double alpha);   // sf = a*S/(1-(1-a)*S)
  // Conditional restriction to (a, b); used by finite-support checks.
  static SurvivalModel truncated(SurvivalModel base, double a, double b);
  // Y = scale*X + shift, scale > 0, shift >= 0.
  static SurvivalModel affine(SurvivalModel base, double scale, double shift);

 private:
  explicit SurvivalModel(std::shared_ptr<const detail::ModelNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::ModelNode> node_;
  friend class detail::ModelNode;
};

// Solve log_sf(w) = target (target <= 0) for a nonincreasing log-sf curve,
// expanding the bracket from `from` upward. Shared by quantiles and the
// integration engine's truncation search.
double solve_log_sf_level(const std::function<double(double)>& log_sf,
                          double target, double from);

}  // namespace wfgcri
