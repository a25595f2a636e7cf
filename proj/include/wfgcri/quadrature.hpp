#pragma once

#include <functional>
#include <vector>

namespace wfgcri {

struct PanelEstimate {
  double value = 0.0;
  double err = 0.0;
  double resabs = 0.0;  // integral of |f|, for roundoff floors
};

// 15-point Kronrod with embedded 7-point Gauss on [a, b]; the error estimate
// follows the classic (200*|K-G|/resasc)^1.5 rescaling capped by resasc.
PanelEstimate gk15(const std::function<double(double)>& f, double a, double b);

struct AdaptiveResult {
  double value = 0.0;
  double err = 0.0;
  int panels = 0;      // total GK panel evaluations
  bool converged = false;
};

// Worst-panel-first refinement over the initial panels [pts[i], pts[i+1]].
// Stops when err <= max(abs_tol, rel_tol*|value|) or the panel budget is
// exhausted. Throws on non-finite panel values (divergent integrand).
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                  const std::vector<double>& pts,
                                  double rel_tol, double abs_tol,
                                  int max_panels);

}  // namespace wfgcri
