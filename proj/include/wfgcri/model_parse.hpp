#pragma once

#include <string>

#include "wfgcri/distributions.hpp"

namespace wfgcri {

// Grammar (round-trips with SurvivalModel::describe):
//   exp:rate=R
//   weibull:k=K,eta=E
//   rayleigh:b=B
//   gamma2
//   mix:[P1*SPEC;P2*SPEC;...]
//   phr:alpha=A,base=SPEC
//   po:alpha=A,base=SPEC
//   trunc:a=A,b=B,base=SPEC
//   affine:a=A,b=B,base=SPEC
// base= consumes the rest of its scope, so it comes last.
SurvivalModel parse_survival_model(const std::string& spec);

}  // namespace wfgcri
