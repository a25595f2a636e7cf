#pragma once

#include <cstddef>
#include <vector>

namespace wfgcri {

enum class MapKind { ricker, tent };

// ricker: x <- x*exp(r*(1-x)), r > 0, x0 > 0 (states stay positive)
// tent:   x <- r*x (x < 1/2), r*(1-x) (x >= 1/2), r in [0,2], x0 in (0,1)
struct MapSpec {
  MapKind kind = MapKind::ricker;
  double r = 1.0;
  double x0 = 0.01;
  std::size_t n = 10000;
  std::size_t burn_in = 0;
};

// n states after discarding burn_in; deterministic.
std::vector<double> iterate_map(const MapSpec& spec);

struct CurveCell {
  double r = 0.0;
  double beta = 0.0;
  double value = 0.0;
  bool degenerate = false;  // trajectory had < 2 distinct states
};

// Trajectory-as-sample plug-in estimates under the proportional-hazard tilt,
// one cell per (r, beta). Degenerate trajectories report value 0 per cell.
std::vector<CurveCell> wfgcri_curve(MapKind kind,
                                    const std::vector<double>& r_values,
                                    const std::vector<double>& betas,
                                    double alpha, double x0, std::size_t n,
                                    double weight_exp = 1.0, int jobs = 1);

struct BifurcationPoint {
  double r = 0.0;
  double x = 0.0;
};

// For each of r_steps evenly spaced r in [r_lo, r_hi]: iterate `transient`
// steps from x0, then emit the next `keep` states.
std::vector<BifurcationPoint> bifurcation_data(MapKind kind, double r_lo,
                                               double r_hi,
                                               std::size_t r_steps, double x0,
                                               std::size_t transient,
                                               std::size_t keep);

}  // namespace wfgcri
