#include "wfgcri/chaos.hpp"

#include <cmath>
#include <optional>

#include "wfgcri/errors.hpp"
#include "wfgcri/estimators.hpp"
#include "wfgcri/parallel.hpp"

namespace wfgcri {

namespace {

void validate_spec(MapKind kind, double r, double x0, std::size_t n) {
  if (n < 2) throw_domain("trajectory length must be >= 2");
  if (kind == MapKind::ricker) {
    if (!(r > 0.0)) throw_domain("ricker growth rate must be > 0");
    if (!(x0 > 0.0)) throw_domain("ricker initial state must be > 0");
  } else {
    if (!(r >= 0.0 && r <= 2.0)) throw_domain("tent rate must lie in [0, 2]");
    if (!(x0 > 0.0 && x0 < 1.0))
      throw_domain("tent initial state must lie in (0, 1)");
  }
}

double step(MapKind kind, double r, double x) {
  if (kind == MapKind::ricker) return x * std::exp(r * (1.0 - x));
  return x < 0.5 ? r * x : r * (1.0 - x);
}

}  // namespace

std::vector<double> iterate_map(const MapSpec& spec) {
  validate_spec(spec.kind, spec.r, spec.x0, spec.n);
  double x = spec.x0;
  for (std::size_t i = 0; i < spec.burn_in; ++i) x = step(spec.kind, spec.r, x);
  std::vector<double> out(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    out[i] = x;
    x = step(spec.kind, spec.r, x);
  }
  return out;
}

std::vector<CurveCell> wfgcri_curve(MapKind kind,
                                    const std::vector<double>& r_values,
                                    const std::vector<double>& betas,
                                    double alpha, double x0, std::size_t n,
                                    double weight_exp, int jobs) {
  if (r_values.empty() || betas.empty())
    throw_domain("curve needs at least one r and one beta");
  if (!(alpha > 0.0)) throw_domain("alpha must be > 0");

  // one sorted sample per r, shared read-only across beta cells
  std::vector<std::optional<EmpiricalSample>> samples(r_values.size());
  std::vector<bool> degenerate(r_values.size(), false);
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    MapSpec spec{kind, r_values[i], x0, n, 0};
    samples[i].emplace(iterate_map(spec));
    degenerate[i] = samples[i]->distinct_count() < 2;
  }

  std::vector<CurveCell> cells(r_values.size() * betas.size());
  parallel_for(cells.size(), jobs, [&](std::size_t idx) {
    std::size_t ri = idx / betas.size();
    std::size_t bi = idx % betas.size();
    CurveCell& cell = cells[idx];
    cell.r = r_values[ri];
    cell.beta = betas[bi];
    if (degenerate[ri]) {
      cell.value = 0.0;
      cell.degenerate = true;
      return;
    }
    cell.value = estimate_wfgcri_phr(*samples[ri], betas[bi], alpha, weight_exp);
  });
  return cells;
}

std::vector<BifurcationPoint> bifurcation_data(MapKind kind, double r_lo,
                                               double r_hi,
                                               std::size_t r_steps, double x0,
                                               std::size_t transient,
                                               std::size_t keep) {
  if (r_steps < 1 || keep < 1)
    throw_domain("bifurcation needs r_steps >= 1 and keep >= 1");
  if (!(r_hi >= r_lo)) throw_domain("bifurcation needs r_hi >= r_lo");
  std::vector<BifurcationPoint> out;
  out.reserve(r_steps * keep);
  for (std::size_t i = 0; i < r_steps; ++i) {
    double r = r_steps == 1
                   ? r_lo
                   : r_lo + (r_hi - r_lo) * static_cast<double>(i) /
                         static_cast<double>(r_steps - 1);
    MapSpec spec{kind, r, x0, keep, transient};
    for (double x : iterate_map(spec)) out.push_back({r, x});
  }
  return out;
}

}  // namespace wfgcri
