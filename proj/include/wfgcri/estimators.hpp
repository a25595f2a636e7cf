#pragma once

#include <cstddef>
#include <vector>

namespace wfgcri {

// Sorted nonnegative observations with the right-continuous empirical
// survival function S(w) = #{x_i > w}/n (ties collapse naturally).
class EmpiricalSample {
 public:
  explicit EmpiricalSample(std::vector<double> values);

  const std::vector<double>& sorted() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double sf(double w) const;
  std::size_t distinct_count() const;

 private:
  std::vector<double> values_;
};

double empirical_sf(const EmpiricalSample& sample, double w);

// Plug-in estimate of the measure between the sample law and its
// proportional-hazard tilt S^alpha, with weight w^weight_exp:
// (alpha^beta/Gamma(beta+1)) * sum_j cell(w^(c+1)) * S_j * (-ln S_j)^beta,
// cell(w^(c+1)) = (x_{j+1}^(c+1) - x_j^(c+1))/(c+1), S_j = 1 - j/n.
// Requires n >= 2.
double estimate_wfgcri_phr(const EmpiricalSample& sample, double beta,
                           double alpha, double weight_exp = 1.0);

// Two-sample plug-in over the union grid {0} U values(x) U values(y):
// cells with S_y(t_k) = 0 are skipped; cells with S_x(t_k) = 0 contribute 0.
double estimate_wfgcri_two_sample(const EmpiricalSample& x,
                                  const EmpiricalSample& y, double beta,
                                  double weight_exp = 1.0);

}  // namespace wfgcri
