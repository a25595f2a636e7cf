#include "wfgcri/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "wfgcri/errors.hpp"
#include "wfgcri/special.hpp"

namespace wfgcri {

namespace {

// (b^(c+1) - a^(c+1)) / (c+1): exact integral of w^c over [a, b).
double weight_cell(double a, double b, double c) {
  if (c == 1.0) return 0.5 * (b * b - a * a);
  double p = c + 1.0;
  return (std::pow(b, p) - std::pow(a, p)) / p;
}

void validate_exponents(double beta, double weight_exp) {
  if (!(beta >= 0.0 && beta <= 25.0)) throw_domain("beta must lie in [0, 25]");
  if (!(weight_exp >= 0.0)) throw_domain("weight exponent must be >= 0");
}

}  // namespace

EmpiricalSample::EmpiricalSample(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty())
    throw Error(ErrorCode::degenerate, "empirical sample is empty");
  for (double v : values_)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw_domain("observations must be finite and >= 0");
  std::sort(values_.begin(), values_.end());
}

double EmpiricalSample::sf(double w) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), w);
  return static_cast<double>(values_.end() - it) /
         static_cast<double>(values_.size());
}

std::size_t EmpiricalSample::distinct_count() const {
  std::size_t k = 1;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] != values_[i - 1]) ++k;
  return k;
}

double empirical_sf(const EmpiricalSample& sample, double w) {
  if (!(w >= 0.0)) throw_domain("evaluation point must satisfy w >= 0");
  return sample.sf(w);
}

double estimate_wfgcri_phr(const EmpiricalSample& sample, double beta,
                           double alpha, double weight_exp) {
  validate_exponents(beta, weight_exp);
  if (!(alpha > 0.0)) throw_domain("alpha must be > 0");
  const auto& x = sample.sorted();
  const std::size_t n = x.size();
  if (n < 2)
    throw Error(ErrorCode::degenerate,
                "estimation needs at least 2 observations");
  double sum = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    double cell = weight_cell(x[j - 1], x[j], weight_exp);
    if (cell == 0.0) continue;  // tied order statistics span no width
    double frac = static_cast<double>(j) / static_cast<double>(n);
    double s = 1.0 - frac;
    double u = -std::log1p(-frac);
    sum += cell * s * std::pow(u, beta);
  }
  return sum * std::pow(alpha, beta) / lanczos_gamma(beta + 1.0);
}

double estimate_wfgcri_two_sample(const EmpiricalSample& x,
                                  const EmpiricalSample& y, double beta,
                                  double weight_exp) {
  validate_exponents(beta, weight_exp);
  std::vector<double> grid;
  grid.reserve(x.size() + y.size() + 1);
  grid.push_back(0.0);
  grid.insert(grid.end(), x.sorted().begin(), x.sorted().end());
  grid.insert(grid.end(), y.sorted().begin(), y.sorted().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    double sx = x.sf(grid[k]);
    if (sx == 0.0) continue;
    double sy = y.sf(grid[k]);
    if (sy == 0.0) continue;  // kernel infinite but mass-free: cell skipped
    double u = -std::log(sy);
    double kern = std::pow(u, beta);
    if (kern == 0.0) continue;
    sum += weight_cell(grid[k], grid[k + 1], weight_exp) * sx * kern;
  }
  return sum / lanczos_gamma(beta + 1.0);
}

}  // namespace wfgcri
