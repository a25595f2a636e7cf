#include "wfgcri/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "wfgcri/errors.hpp"
#include "wfgcri/parallel.hpp"
#include "wfgcri/rng.hpp"
#include "wfgcri/special.hpp"

namespace wfgcri {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct Eval {
  double lhs;
  double rhs;
};

std::function<double(double)> power_fn(double c) {
  if (c == 0.0) return [](double) { return 1.0; };
  if (c == 1.0) return [](double w) { return w; };
  return [c](double w) { return std::pow(w, c); };
}

IntegrationConfig tighten(IntegrationConfig cfg) {
  cfg.rel_tol *= 0.1;
  cfg.abs_tol *= 0.1;
  cfg.max_subdivisions *= 4;
  return cfg;
}

double check_margin(double lhs, double rhs) {
  return 1e-7 * std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
}

// Evaluates both sides, orients slack so >= -margin means the bound holds,
// and re-evaluates at 10x tighter tolerance before declaring a violation so
// quadrature noise cannot masquerade as a counterexample.
BoundCheck finish_check(TheoremId id, bool lhs_at_most_rhs,
                        const std::function<Eval(const IntegrationConfig&)>& eval,
                        const IntegrationConfig& cfg, std::string desc) {
  BoundCheck out;
  out.theorem = id;
  out.config = std::move(desc);
  out.config_hash = hex64(fnv1a64(out.config));
  auto slack_of = [lhs_at_most_rhs](const Eval& e) {
    return lhs_at_most_rhs ? e.rhs - e.lhs : e.lhs - e.rhs;
  };
  try {
    Eval e = eval(cfg);
    double slack = slack_of(e);
    double margin = check_margin(e.lhs, e.rhs);
    if (slack < -margin) {
      e = eval(tighten(cfg));
      slack = slack_of(e);
      margin = check_margin(e.lhs, e.rhs);
    }
    out.lhs = e.lhs;
    out.rhs = e.rhs;
    out.slack = slack;
    out.margin = margin;
    out.status =
        slack >= -margin ? CheckStatus::holds : CheckStatus::violated;
  } catch (const Error& err) {
    out.lhs = out.rhs = out.slack = kNan;
    out.status = CheckStatus::inconclusive;
    out.note = err.what();
  }
  return out;
}

BoundCheck premise_failure(TheoremId id, std::string desc, std::string note) {
  BoundCheck out;
  out.theorem = id;
  out.status = CheckStatus::premise_violated;
  out.lhs = out.rhs = out.slack = kNan;
  out.config = std::move(desc);
  out.config_hash = hex64(fnv1a64(out.config));
  out.note = std::move(note);
  return out;
}

// Pointwise S_X <= S_Y over a 1000-point log-spaced grid reaching down to
// survival 1e-9 on both models.
bool order_le_on_grid(const SurvivalModel& x, const SurvivalModel& y) {
  auto lx = [&](double w) { return x.log_sf(w); };
  auto ly = [&](double w) { return y.log_sf(w); };
  double target = std::log(1e-9);
  double hi = std::max(solve_log_sf_level(lx, target, 0.0),
                       solve_log_sf_level(ly, target, 0.0));
  if (!(hi > 0.0)) hi = 1.0;
  double lo = hi * 1e-6;
  for (int i = 0; i < 1000; ++i) {
    double w = lo * std::pow(hi / lo, i / 999.0);
    double a = x.log_sf(w);
    double b = y.log_sf(w);
    double diff = a - b;
    if (std::isnan(diff)) continue;  // both supports exhausted
    double fa = std::isfinite(a) ? std::fabs(a) : 0.0;
    double fb = std::isfinite(b) ? std::fabs(b) : 0.0;
    if (diff > 1e-9 * std::max({1.0, fa, fb})) return false;
  }
  return true;
}

std::string weight_desc_of(const WeightSpec& w) {
  return "w^" + format_g(w.exponent, 12);
}

std::string pair_desc(const char* name, const SurvivalModel& x,
                      const SurvivalModel& y, double beta,
                      const std::string& weight_desc) {
  return std::string(name) + "|x=" + x.describe() + "|y=" + y.describe() +
         "|beta=" + format_g(beta, 12) + "|psi=" + weight_desc;
}

}  // namespace

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1i: return "T2_1i";
    case TheoremId::T2_1ii: return "T2_1ii";
    case TheoremId::T2_2: return "T2_2";
    case TheoremId::T2_3: return "T2_3";
    case TheoremId::T2_4: return "T2_4";
    case TheoremId::T2_7i: return "T2_7i";
    case TheoremId::T2_7ii: return "T2_7ii";
    case TheoremId::T2_8: return "T2_8";
    case TheoremId::T2_9: return "T2_9";
    case TheoremId::T3_2: return "T3_2";
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (TheoremId id : all_theorems())
    if (name == theorem_name(id)) return id;
  return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::T2_1i, TheoremId::T2_1ii, TheoremId::T2_2,
          TheoremId::T2_3,  TheoremId::T2_4,   TheoremId::T2_7i,
          TheoremId::T2_7ii, TheoremId::T2_8,  TheoremId::T2_9,
          TheoremId::T3_2};
}

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::premise_violated: return "premise_violated";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

int stochastic_order_direction(const SurvivalModel& x, const SurvivalModel& y) {
  if (order_le_on_grid(x, y)) return 1;
  if (order_le_on_grid(y, x)) return -1;
  return 0;
}

BoundCheck check_lower_bound_T2_1_i(const SurvivalModel& x,
                                    const SurvivalModel& y, double beta,
                                    const WeightSpec& weight,
                                    const IntegrationConfig& cfg) {
  auto eval = [x, y, beta, weight](const IntegrationConfig& icfg) -> Eval {
    double lhs = wfgcri(MeasureRequest{x, y, beta, weight, 0.0, icfg}).value;
    auto wfun = power_fn(weight.exponent);
    auto integrand = [x, y, beta, wfun](double w) {
      double lsx = x.log_sf(w);
      if (!std::isfinite(lsx)) return 0.0;
      double sx = std::exp(lsx);
      if (sx <= 0.0) return 0.0;
      double fy = -std::expm1(y.log_sf(w));
      double k = std::pow(fy, beta);
      if (k == 0.0) return 0.0;
      return wfun(w) * sx * k;
    };
    auto cx = [x](double w) { return x.log_sf(w); };
    double rhs =
        tail_integral({cx}, integrand, 0.0, icfg).value / gamma_norm(beta);
    return {lhs, rhs};
  };
  return finish_check(TheoremId::T2_1i, false, eval, cfg,
                      pair_desc("T2_1i", x, y, beta, weight_desc_of(weight)));
}

BoundCheck check_lower_bound_T2_1_ii(const SurvivalModel& x,
                                     const SurvivalModel& y, double beta,
                                     const WeightSpec& weight,
                                     const IntegrationConfig& cfg) {
  double c = weight.exponent;
  auto eval = [x, y, beta, c](const IntegrationConfig& icfg) -> Eval {
    double lhs =
        wfgcri(MeasureRequest{x, y, beta, WeightSpec{c}, 0.0, icfg}).value;
    double entropy = shannon_entropy(x, icfg).value;
    auto integrand = [x, y, beta, c](double w) {
      double lsx = x.log_sf(w);
      if (!std::isfinite(lsx)) return 0.0;
      double hz = x.hazard(w);
      if (!(hz > 0.0)) return 0.0;
      double f = std::exp(lsx) * hz;
      if (f <= 0.0) return 0.0;
      double u = -y.log_sf(w);
      if (!(u > 0.0)) u = 1e-300;  // log of the kernel, not the kernel itself
      double log_psi = c == 0.0 ? 0.0 : c * std::log(std::max(w, 1e-300));
      return f * (log_psi + lsx + beta * std::log(u));
    };
    auto cx = [x](double w) { return x.log_sf(w); };
    double d = tail_integral({cx}, integrand, 0.0, icfg).value;
    double rhs = std::exp(d + entropy) / gamma_norm(beta);
    if (!std::isfinite(rhs))
      throw Error(ErrorCode::conditioning,
                  "log-sum bound overflows: d=" + format_g(d, 6) +
                      ", entropy=" + format_g(entropy, 6));
    return {lhs, rhs};
  };
  return finish_check(TheoremId::T2_1ii, false, eval, cfg,
                      pair_desc("T2_1ii", x, y, beta, weight_desc_of(weight)));
}

BoundCheck check_order_bounds_T2_2_general(
    const SurvivalModel& x, const SurvivalModel& y, double beta,
    const std::function<double(double)>& weight, const std::string& weight_desc,
    OrderDirection direction, const IntegrationConfig& cfg) {
  std::string desc = pair_desc("T2_2", x, y, beta, weight_desc);
  int dir = 0;
  switch (direction) {
    case OrderDirection::x_le_st_y:
      dir = order_le_on_grid(x, y) ? 1 : 0;
      break;
    case OrderDirection::x_ge_st_y:
      dir = order_le_on_grid(y, x) ? -1 : 0;
      break;
    case OrderDirection::detect:
      dir = stochastic_order_direction(x, y);
      break;
  }
  if (dir == 0)
    return premise_failure(TheoremId::T2_2, std::move(desc),
                           "models are not stochastically ordered in the "
                           "requested direction on the probe grid");
  auto lsx = [x](double w) { return x.log_sf(w); };
  auto lsy = [y](double w) { return y.log_sf(w); };
  auto eval = [lsx, lsy, beta, weight, dir](const IntegrationConfig& icfg) -> Eval {
    double k = wfgcri_general(lsx, lsy, beta, weight, 0.0, icfg).value;
    double hx = wfgcri_general(lsx, lsx, beta, weight, 0.0, icfg).value;
    double hy = wfgcri_general(lsy, lsy, beta, weight, 0.0, icfg).value;
    double bound = dir > 0 ? std::min(hx, hy) : std::max(hx, hy);
    return {k, bound};
  };
  return finish_check(TheoremId::T2_2, dir > 0, eval, cfg, std::move(desc));
}

BoundCheck check_order_bounds_T2_2(const SurvivalModel& x,
                                   const SurvivalModel& y, double beta,
                                   const WeightSpec& weight,
                                   OrderDirection direction,
                                   const IntegrationConfig& cfg) {
  return check_order_bounds_T2_2_general(x, y, beta,
                                         power_fn(weight.exponent),
                                         weight_desc_of(weight), direction,
                                         cfg);
}

std::vector<BoundCheck> check_monotonicity_T2_3_T2_4_general(
    const SurvivalModel& x, const SurvivalModel& y, const SurvivalModel& z,
    double beta, const std::function<double(double)>& weight,
    const std::string& weight_desc, const IntegrationConfig& cfg) {
  std::string base = "|x=" + x.describe() + "|y=" + y.describe() +
                     "|z=" + z.describe() + "|beta=" + format_g(beta, 12) +
                     "|psi=" + weight_desc;
  bool ordered = order_le_on_grid(x, y) && order_le_on_grid(y, z);
  if (!ordered) {
    std::string note =
        "models are not a stochastically increasing triple on the probe grid";
    return {premise_failure(TheoremId::T2_3, "T2_3i" + base, note),
            premise_failure(TheoremId::T2_3, "T2_3ii" + base, note),
            premise_failure(TheoremId::T2_4, "T2_4" + base, note)};
  }
  auto lsx = [x](double w) { return x.log_sf(w); };
  auto lsy = [y](double w) { return y.log_sf(w); };
  auto lsz = [z](double w) { return z.log_sf(w); };
  auto measure = [beta, weight](const std::function<double(double)>& a,
                                const std::function<double(double)>& b,
                                const IntegrationConfig& icfg) {
    return wfgcri_general(a, b, beta, weight, 0.0, icfg).value;
  };
  // (i) second argument anti-monotone under X <=st Y, first argument Z
  auto eval_i = [=](const IntegrationConfig& icfg) -> Eval {
    return {measure(lsz, lsx, icfg), measure(lsz, lsy, icfg)};
  };
  // (ii) second argument anti-monotone under Y <=st Z, first argument X
  auto eval_ii = [=](const IntegrationConfig& icfg) -> Eval {
    return {measure(lsx, lsy, icfg), measure(lsx, lsz, icfg)};
  };
  auto eval_tri = [=](const IntegrationConfig& icfg) -> Eval {
    double kxy = measure(lsx, lsy, icfg);
    double kyz = measure(lsy, lsz, icfg);
    double kxz = measure(lsx, lsz, icfg);
    return {kxy + kyz, 2.0 * kxz};
  };
  std::vector<BoundCheck> out;
  out.push_back(
      finish_check(TheoremId::T2_3, false, eval_i, cfg, "T2_3i" + base));
  out.push_back(
      finish_check(TheoremId::T2_3, false, eval_ii, cfg, "T2_3ii" + base));
  out.push_back(
      finish_check(TheoremId::T2_4, false, eval_tri, cfg, "T2_4" + base));
  return out;
}

std::vector<BoundCheck> check_monotonicity_T2_3_T2_4(
    const SurvivalModel& x, const SurvivalModel& y, const SurvivalModel& z,
    double beta, const WeightSpec& weight, const IntegrationConfig& cfg) {
  return check_monotonicity_T2_3_T2_4_general(x, y, z, beta,
                                              power_fn(weight.exponent),
                                              weight_desc_of(weight), cfg);
}

BoundCheck check_finite_support_T2_7(int part, const SurvivalModel& x,
                                     const SurvivalModel& y, double a,
                                     double b, double beta,
                                     const WeightSpec& weight,
                                     const IntegrationConfig& cfg) {
  if (part != 1 && part != 2) throw_domain("T2_7 part must be 1 or 2");
  if (!(a > 0.0 && b > a)) throw_domain("T2_7 needs 0 < a < b");
  if (part == 1 && !(beta >= 1.0))
    throw_domain("T2_7 part 1 needs beta >= 1");
  if (part == 2 && !(beta > 0.0 && beta <= 1.0))
    throw_domain("T2_7 part 2 needs beta in (0, 1]");
  TheoremId id = part == 1 ? TheoremId::T2_7i : TheoremId::T2_7ii;
  SurvivalModel tx = SurvivalModel::truncated(x, a, b);
  SurvivalModel ty = SurvivalModel::truncated(y, a, b);
  double c = weight.exponent;
  // psi = w^c with c >= 0 is nondecreasing, so inf/sup sit at the endpoints
  double psi_bound = part == 1 ? std::pow(a, c) : std::pow(b, c);
  auto eval = [tx, ty, beta, c, a, b, psi_bound](
                  const IntegrationConfig& icfg) -> Eval {
    double lhs =
        wfgcri(MeasureRequest{tx, ty, beta, WeightSpec{c}, 0.0, icfg}).value;
    double cri = wcri(tx, ty, WeightSpec{0.0}, icfg).value;
    double rhs = psi_bound * std::pow(cri, beta) /
                 (gamma_norm(beta) * std::pow(b - a, beta - 1.0));
    return {lhs, rhs};
  };
  std::string desc = std::string(part == 1 ? "T2_7i" : "T2_7ii") +
                     "|x=" + tx.describe() + "|y=" + ty.describe() +
                     "|beta=" + format_g(beta, 12) +
                     "|psi=" + weight_desc_of(weight);
  return finish_check(id, part == 2, eval, cfg, std::move(desc));
}

BoundCheck check_weight_power_T2_8(const SurvivalModel& x,
                                   const SurvivalModel& y, double beta,
                                   double zeta_exp,
                                   const IntegrationConfig& cfg) {
  if (!(zeta_exp >= 0.0)) throw_domain("zeta exponent must be >= 0");
  auto eval = [x, y, beta, zeta_exp](const IntegrationConfig& icfg) -> Eval {
    double lhs =
        wfgcri(MeasureRequest{x, y, beta, WeightSpec{beta * zeta_exp}, 0.0,
                              icfg})
            .value;
    double first = wcri(x, y, WeightSpec{zeta_exp}, icfg).value;
    double rhs = std::pow(first, beta) / gamma_norm(beta);
    return {lhs, rhs};
  };
  std::string desc = pair_desc("T2_8", x, y, beta,
                               "zeta=w^" + format_g(zeta_exp, 12));
  return finish_check(TheoremId::T2_8, beta < 1.0, eval, cfg, std::move(desc));
}

BoundCheck check_mixture_T2_9(
    const std::vector<std::pair<double, SurvivalModel>>& components,
    const SurvivalModel& y, double beta, const WeightSpec& weight,
    const IntegrationConfig& cfg) {
  SurvivalModel mixed = SurvivalModel::mixture_hazard(components);
  auto eval = [components, mixed, y, beta, weight](
                  const IntegrationConfig& icfg) -> Eval {
    double lhs =
        wfgcri(MeasureRequest{mixed, y, beta, weight, 0.0, icfg}).value;
    double rhs = 0.0;
    for (const auto& [p, comp] : components)
      rhs += p *
             wfgcri(MeasureRequest{comp, y, beta, weight, 0.0, icfg}).value;
    return {lhs, rhs};
  };
  return finish_check(TheoremId::T2_9, true, eval, cfg,
                      pair_desc("T2_9", mixed, y, beta,
                                weight_desc_of(weight)));
}

BoundCheck check_phr_scaling_T3_2(const SurvivalModel& x,
                                  const SurvivalModel& y, double beta,
                                  const WeightSpec& weight, double t,
                                  double alpha,
                                  const IntegrationConfig& cfg) {
  if (!(alpha > 0.0)) throw_domain("phr alpha must be > 0");
  auto eval = [x, y, beta, weight, t, alpha](
                  const IntegrationConfig& icfg) -> Eval {
    MeasureRequest req{x, y, beta, weight, t, icfg};
    double lhs = dwfgcri_phr(req, alpha).value;
    double rhs = std::pow(alpha, beta) * dwfgcri(req).value;
    return {lhs, rhs};
  };
  std::string desc = pair_desc("T3_2", x, y, beta, weight_desc_of(weight)) +
                     "|alpha=" + format_g(alpha, 12) +
                     "|t=" + format_g(t, 12);
  return finish_check(TheoremId::T3_2, alpha >= 1.0, eval, cfg,
                      std::move(desc));
}

namespace {

double unif(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

std::size_t pick(std::mt19937_64& eng, std::size_t n) {
  auto k = static_cast<std::size_t>(uniform01(eng) * static_cast<double>(n));
  return k >= n ? n - 1 : k;
}

double pick_weight_exponent(std::mt19937_64& eng) {
  static const double kChoices[] = {0.0, 0.3, 1.0, 2.0};
  return kChoices[pick(eng, 4)];
}

// Rates and scale parameters stay in [1,3] (Rayleigh [1,2]): the power-weight
// bound T2_8 is not scale-free and this is its documented validity regime.
SurvivalModel random_model(std::mt19937_64& eng) {
  switch (pick(eng, 3)) {
    case 0: return SurvivalModel::exponential(unif(eng, 1.0, 3.0));
    case 1:
      return SurvivalModel::weibull(unif(eng, 0.8, 2.5), unif(eng, 1.0, 3.0));
    default: return SurvivalModel::rayleigh(unif(eng, 1.0, 2.0));
  }
}

// Stochastically nondecreasing chain of `count` models; a slice of draws
// produces cross-family pairs that exercise the premise_violated path.
std::vector<SurvivalModel> ordered_chain(std::mt19937_64& eng,
                                         std::size_t count) {
  std::vector<SurvivalModel> chain;
  switch (pick(eng, 5)) {
    case 0: {  // exponentials, rates nonincreasing
      std::vector<double> r;
      for (std::size_t i = 0; i < count; ++i) r.push_back(unif(eng, 1.0, 3.0));
      std::sort(r.rbegin(), r.rend());
      for (double v : r) chain.push_back(SurvivalModel::exponential(v));
      break;
    }
    case 1: {  // shared-shape Weibulls, scales nonincreasing
      double k = unif(eng, 0.8, 2.5);
      std::vector<double> r;
      for (std::size_t i = 0; i < count; ++i) r.push_back(unif(eng, 1.0, 3.0));
      std::sort(r.rbegin(), r.rend());
      for (double v : r) chain.push_back(SurvivalModel::weibull(k, v));
      break;
    }
    case 2: {  // Rayleighs, rates nonincreasing
      std::vector<double> r;
      for (std::size_t i = 0; i < count; ++i) r.push_back(unif(eng, 1.0, 2.0));
      std::sort(r.rbegin(), r.rend());
      for (double v : r) chain.push_back(SurvivalModel::rayleigh(v));
      break;
    }
    case 3: {  // proportional-hazard tilts of a common base, tilt decreasing
      SurvivalModel base = random_model(eng);
      std::vector<double> a;
      for (std::size_t i = 0; i < count; ++i) a.push_back(unif(eng, 1.0, 2.5));
      std::sort(a.rbegin(), a.rend());
      for (double v : a)
        chain.push_back(v == 1.0 ? base : SurvivalModel::phr(base, v));
      break;
    }
    default:  // independent draws: usually unordered
      for (std::size_t i = 0; i < count; ++i) chain.push_back(random_model(eng));
      break;
  }
  return chain;
}

std::vector<BoundCheck> eval_config(TheoremId id, std::uint64_t seed,
                                    std::size_t idx,
                                    const IntegrationConfig& icfg) {
  std::mt19937_64 eng(
      derive_seed(seed, static_cast<std::uint64_t>(id) + 1, idx));
  double beta = unif(eng, 0.1, 3.0);
  WeightSpec weight{pick_weight_exponent(eng)};
  switch (id) {
    case TheoremId::T2_1i: {
      SurvivalModel x = random_model(eng), y = random_model(eng);
      return {check_lower_bound_T2_1_i(x, y, beta, weight, icfg)};
    }
    case TheoremId::T2_1ii: {
      SurvivalModel x = random_model(eng), y = random_model(eng);
      return {check_lower_bound_T2_1_ii(x, y, beta, weight, icfg)};
    }
    case TheoremId::T2_2: {
      auto chain = ordered_chain(eng, 2);
      return {check_order_bounds_T2_2(chain[0], chain[1], beta, weight,
                                      OrderDirection::detect, icfg)};
    }
    case TheoremId::T2_3:
    case TheoremId::T2_4: {
      auto chain = ordered_chain(eng, 3);
      auto all = check_monotonicity_T2_3_T2_4(chain[0], chain[1], chain[2],
                                              beta, weight, icfg);
      if (id == TheoremId::T2_4) return {all[2]};
      return {all[idx % 2]};  // alternate the two monotonicity parts
    }
    case TheoremId::T2_7i:
    case TheoremId::T2_7ii: {
      SurvivalModel x = random_model(eng), y = random_model(eng);
      double a = unif(eng, 0.2, 1.0);
      double b = a + unif(eng, 0.5, 2.5);
      int part = id == TheoremId::T2_7i ? 1 : 2;
      double b2 = part == 1 ? unif(eng, 1.0, 3.0) : unif(eng, 0.1, 1.0);
      return {check_finite_support_T2_7(part, x, y, a, b, b2, weight, icfg)};
    }
    case TheoremId::T2_8: {
      SurvivalModel x = random_model(eng), y = random_model(eng);
      double b2 = uniform01(eng) < 0.5 ? unif(eng, 0.1, 0.9)
                                       : unif(eng, 1.1, 3.0);
      double z = pick_weight_exponent(eng);
      return {check_weight_power_T2_8(x, y, b2, z, icfg)};
    }
    case TheoremId::T2_9: {
      std::vector<std::pair<double, SurvivalModel>> comps;
      double total = 0.0;
      std::vector<double> raw;
      for (int i = 0; i < 3; ++i) {
        raw.push_back(unif(eng, 0.2, 1.0));
        total += raw.back();
      }
      for (int i = 0; i < 3; ++i)
        comps.emplace_back(raw[i] / total,
                           SurvivalModel::exponential(unif(eng, 1.0, 3.0)));
      comps.back().first =
          1.0 - comps[0].first - comps[1].first;  // exact unit sum
      SurvivalModel y = random_model(eng);
      return {check_mixture_T2_9(comps, y, beta, weight, icfg)};
    }
    case TheoremId::T3_2: {
      SurvivalModel x = random_model(eng), y = random_model(eng);
      double alpha = unif(eng, 0.25, 4.0);
      if (alpha > 0.95 && alpha < 1.05) alpha = alpha < 1.0 ? 0.9 : 1.1;
      double t = unif(eng, 0.0, 1.2);
      return {check_phr_scaling_T3_2(x, y, beta, weight, t, alpha, icfg)};
    }
  }
  throw_domain("unknown theorem id");
}

}  // namespace

std::vector<BoundCheck> run_suite(const SuiteConfig& config, int jobs) {
  if (config.configs == 0) throw_domain("suite needs at least one config");
  std::vector<std::vector<BoundCheck>> slots(config.configs);
  parallel_for(config.configs, jobs, [&](std::size_t i) {
    slots[i] = eval_config(config.theorem, config.seed, i, config.integration);
  });
  std::vector<BoundCheck> out;
  out.reserve(config.configs);
  for (auto& s : slots)
    for (auto& c : s) out.push_back(std::move(c));
  return out;
}

std::string suite_csv(const std::vector<BoundCheck>& checks) {
  std::string out = "theorem,config-hash,lhs,rhs,slack,holds\n";
  for (const auto& c : checks) {
    const char* verdict = "inconclusive";
    if (c.status == CheckStatus::holds) verdict = "true";
    else if (c.status == CheckStatus::violated) verdict = "false";
    else if (c.status == CheckStatus::premise_violated)
      verdict = "premise-violated";
    out += std::string(theorem_name(c.theorem)) + "," + c.config_hash + "," +
           format_g9(c.lhs) + "," + format_g9(c.rhs) + "," +
           format_g9(c.slack) + "," + verdict + "\n";
  }
  return out;
}

}  // namespace wfgcri
