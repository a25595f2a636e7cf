#include "wfgcri/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wfgcri/errors.hpp"
#include "wfgcri/rng.hpp"
#include "wfgcri/special.hpp"

namespace wfgcri {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonneg_point(double w) {
  if (!(w >= 0.0)) throw_domain("evaluation point must satisfy w >= 0");
}

std::string num(double v) { return format_g(v, 12); }

}  // namespace

namespace detail {

// Nodes are immutable after construction. log_sf is the primitive; sf, cdf
// and pdf derive from it, with pdf = sf * hazard so densities stay finite
// and consistent deep in the tail.
class ModelNode {
 public:
  virtual ~ModelNode() = default;
  virtual double log_sf(double w) const = 0;
  virtual double hazard(double w) const = 0;
  virtual double quantile(double q) const {
    return solve_log_sf_level([this](double w) { return log_sf(w); },
                              std::log1p(-q), 0.0);
  }
  const std::string& describe() const { return description_; }

 protected:
  explicit ModelNode(std::string description)
      : description_(std::move(description)) {}

 private:
  std::string description_;
};

namespace {

class ExponentialNode final : public ModelNode {
 public:
  explicit ExponentialNode(double rate)
      : ModelNode("exp:rate=" + num(rate)), rate_(rate) {}
  double log_sf(double w) const override { return -rate_ * w; }
  double hazard(double) const override { return rate_; }
  double quantile(double q) const override { return -std::log1p(-q) / rate_; }

 private:
  double rate_;
};

class WeibullNode final : public ModelNode {
 public:
  WeibullNode(double shape, double eta)
      : ModelNode("weibull:k=" + num(shape) + ",eta=" + num(eta)),
        shape_(shape),
        eta_(eta) {}
  double log_sf(double w) const override { return -eta_ * std::pow(w, shape_); }
  double hazard(double w) const override {
    return eta_ * shape_ * std::pow(w, shape_ - 1.0);
  }
  double quantile(double q) const override {
    return std::pow(-std::log1p(-q) / eta_, 1.0 / shape_);
  }

 private:
  double shape_, eta_;
};

class RayleighNode final : public ModelNode {
 public:
  explicit RayleighNode(double b)
      : ModelNode("rayleigh:b=" + num(b)), b_(b) {}
  double log_sf(double w) const override { return -(b_ * w) * (b_ * w); }
  double hazard(double w) const override { return 2.0 * b_ * b_ * w; }
  double quantile(double q) const override {
    return std::sqrt(-std::log1p(-q)) / b_;
  }

 private:
  double b_;
};

class GammaShape2Node final : public ModelNode {
 public:
  GammaShape2Node() : ModelNode("gamma2") {}
  double log_sf(double w) const override { return std::log1p(w) - w; }
  double hazard(double w) const override { return w / (1.0 + w); }

 private:
};

class MixtureHazardNode final : public ModelNode {
 public:
  MixtureHazardNode(std::vector<std::pair<double, SurvivalModel>> comps,
                    std::string description)
      : ModelNode(std::move(description)), comps_(std::move(comps)) {}
  // Product of component survival powers: log S = sum p_i log S_i, so the
  // hazard is the weight-mixed component hazard.
  double log_sf(double w) const override {
    double s = 0.0;
    for (const auto& [p, m] : comps_) s += p * m.log_sf(w);
    return s;
  }
  double hazard(double w) const override {
    double h = 0.0;
    for (const auto& [p, m] : comps_) h += p * m.hazard(w);
    return h;
  }

 private:
  std::vector<std::pair<double, SurvivalModel>> comps_;
};

class PhrNode final : public ModelNode {
 public:
  PhrNode(SurvivalModel base, double alpha)
      : ModelNode("phr:alpha=" + num(alpha) + ",base=" + base.describe()),
        base_(std::move(base)),
        alpha_(alpha) {}
  double log_sf(double w) const override { return alpha_ * base_.log_sf(w); }
  double hazard(double w) const override { return alpha_ * base_.hazard(w); }
  double quantile(double q) const override {
    // S^alpha = 1-q  =>  base sf level (1-q)^(1/alpha)
    return base_.quantile(-std::expm1(std::log1p(-q) / alpha_));
  }

 private:
  SurvivalModel base_;
  double alpha_;
};

class PoNode final : public ModelNode {
 public:
  PoNode(SurvivalModel base, double alpha)
      : ModelNode("po:alpha=" + num(alpha) + ",base=" + base.describe()),
        base_(std::move(base)),
        alpha_(alpha),
        abar_(1.0 - alpha) {}
  double log_sf(double w) const override {
    double ls = base_.log_sf(w);
    // log of alpha*S/(1 - (1-alpha)*S); at w=0 this is exactly 0.
    return std::log(alpha_) + ls - std::log1p(-abar_ * std::exp(ls));
  }
  double hazard(double w) const override {
    return base_.hazard(w) / (1.0 - abar_ * base_.sf(w));
  }
  double quantile(double q) const override {
    double s = (1.0 - q) / (alpha_ + abar_ * (1.0 - q));
    return base_.quantile(1.0 - s);
  }

 private:
  SurvivalModel base_;
  double alpha_, abar_;
};

class TruncatedNode final : public ModelNode {
 public:
  TruncatedNode(SurvivalModel base, double a, double b)
      : ModelNode("trunc:a=" + num(a) + ",b=" + num(b) +
                  ",base=" + base.describe()),
        base_(std::move(base)),
        a_(a),
        b_(b),
        sa_(base_.sf(a)),
        sb_(base_.sf(b)) {
    if (!(sa_ - sb_ > 0.0))
      throw_domain("truncation interval carries no probability mass");
  }
  double log_sf(double w) const override {
    if (w <= a_) return 0.0;
    if (w >= b_) return -kInf;
    double s = (base_.sf(w) - sb_) / (sa_ - sb_);
    return s > 0.0 ? std::log(s) : -kInf;
  }
  double hazard(double w) const override {
    if (w <= a_ || w >= b_) return 0.0;
    return base_.pdf(w) / (base_.sf(w) - sb_);
  }

 private:
  SurvivalModel base_;
  double a_, b_, sa_, sb_;
};

class AffineNode final : public ModelNode {
 public:
  AffineNode(SurvivalModel base, double scale, double shift)
      : ModelNode("affine:a=" + num(scale) + ",b=" + num(shift) +
                  ",base=" + base.describe()),
        base_(std::move(base)),
        scale_(scale),
        shift_(shift) {}
  double log_sf(double w) const override {
    if (w <= shift_) return 0.0;
    return base_.log_sf((w - shift_) / scale_);
  }
  double hazard(double w) const override {
    if (w < shift_) return 0.0;
    return base_.hazard((w - shift_) / scale_) / scale_;
  }
  double quantile(double q) const override {
    return scale_ * base_.quantile(q) + shift_;
  }

 private:
  SurvivalModel base_;
  double scale_, shift_;
};

}  // namespace

}  // namespace detail

double solve_log_sf_level(const std::function<double(double)>& log_sf,
                          double target, double from) {
  if (target >= 0.0) return from;
  double lo = from;
  double hi = from > 0.0 ? from * 2.0 : 1.0;
  int guard = 0;
  while (log_sf(hi) > target) {
    lo = hi;
    hi = hi * 2.0 + 1.0;
    if (++guard > 1200)
      throw Error(ErrorCode::divergence,
                  "survival function does not reach the requested level");
  }
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (log_sf(mid) > target)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-12 * std::max(1.0, hi) || hi - lo <= 1e-12) break;
  }
  return 0.5 * (lo + hi);
}

double SurvivalModel::sf(double w) const {
  require_nonneg_point(w);
  return std::exp(node_->log_sf(w));
}

double SurvivalModel::log_sf(double w) const {
  require_nonneg_point(w);
  return node_->log_sf(w);
}

double SurvivalModel::cdf(double w) const {
  require_nonneg_point(w);
  return -std::expm1(node_->log_sf(w));
}

double SurvivalModel::pdf(double w) const {
  require_nonneg_point(w);
  double ls = node_->log_sf(w);
  if (ls == -kInf) return 0.0;
  return std::exp(ls) * node_->hazard(w);
}

double SurvivalModel::hazard(double w) const {
  require_nonneg_point(w);
  return node_->hazard(w);
}

double SurvivalModel::quantile(double q) const {
  if (!(q >= 0.0 && q < 1.0)) throw_domain("quantile level must lie in [0, 1)");
  if (q == 0.0) return 0.0;
  return node_->quantile(q);
}

std::vector<double> SurvivalModel::sample(std::size_t n,
                                          std::uint64_t seed) const {
  std::mt19937_64 eng(seed);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = node_->quantile(uniform01(eng));
  return out;
}

const std::string& SurvivalModel::describe() const { return node_->describe(); }

SurvivalModel SurvivalModel::exponential(double rate) {
  if (!(rate > 0.0)) throw_domain("exponential rate must be > 0");
  return SurvivalModel(std::make_shared<detail::ExponentialNode>(rate));
}

SurvivalModel SurvivalModel::weibull(double shape, double eta) {
  if (!(shape > 0.0)) throw_domain("weibull shape must be > 0");
  if (!(eta > 0.0)) throw_domain("weibull eta must be > 0");
  return SurvivalModel(std::make_shared<detail::WeibullNode>(shape, eta));
}

SurvivalModel SurvivalModel::rayleigh(double b) {
  if (!(b > 0.0)) throw_domain("rayleigh b must be > 0");
  return SurvivalModel(std::make_shared<detail::RayleighNode>(b));
}

SurvivalModel SurvivalModel::gamma_shape2() {
  return SurvivalModel(std::make_shared<detail::GammaShape2Node>());
}

SurvivalModel SurvivalModel::mixture_hazard(
    std::vector<std::pair<double, SurvivalModel>> components) {
  if (components.empty()) throw_domain("mixture needs at least one component");
  double total = 0.0;
  std::string desc = "mix:[";
  for (std::size_t i = 0; i < components.size(); ++i) {
    double p = components[i].first;
    if (!(p > 0.0)) throw_domain("mixture weights must be > 0");
    total += p;
    if (i) desc += ";";
    desc += num(p) + "*" + components[i].second.describe();
  }
  desc += "]";
  if (std::abs(total - 1.0) > 1e-9)
    throw_domain("mixture weights must sum to 1");
  return SurvivalModel(std::make_shared<detail::MixtureHazardNode>(
      std::move(components), std::move(desc)));
}

SurvivalModel SurvivalModel::phr(SurvivalModel base, double alpha) {
  if (!(alpha > 0.0)) throw_domain("phr alpha must be > 0");
  return SurvivalModel(
      std::make_shared<detail::PhrNode>(std::move(base), alpha));
}

SurvivalModel SurvivalModel::po(SurvivalModel base, double alpha) {
  if (!(alpha > 0.0)) throw_domain("po alpha must be > 0");
  return SurvivalModel(std::make_shared<detail::PoNode>(std::move(base), alpha));
}

SurvivalModel SurvivalModel::truncated(SurvivalModel base, double a, double b) {
  if (!(a >= 0.0 && b > a)) throw_domain("truncation needs 0 <= a < b");
  return SurvivalModel(
      std::make_shared<detail::TruncatedNode>(std::move(base), a, b));
}

SurvivalModel SurvivalModel::affine(SurvivalModel base, double scale,
                                    double shift) {
  if (!(scale > 0.0)) throw_domain("affine scale must be > 0");
  if (!(shift >= 0.0)) throw_domain("affine shift must be >= 0");
  return SurvivalModel(
      std::make_shared<detail::AffineNode>(std::move(base), scale, shift));
}

}  // namespace wfgcri
