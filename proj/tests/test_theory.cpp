#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "wfgcri/distributions.hpp"
#include "wfgcri/errors.hpp"
#include "wfgcri/theory.hpp"

using namespace wfgcri;

namespace {

const WeightSpec kLinear{1.0};

bool same_statuses(const std::vector<BoundCheck>& a,
                   const std::vector<BoundCheck>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].status != b[i].status) return false;
  return true;
}

}  // namespace

TEST_CASE("theorem names round-trip") {
  for (TheoremId id : all_theorems()) {
    auto back = theorem_from_name(theorem_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(theorem_from_name("T9_9").has_value());
  CHECK(all_theorems().size() == 10);
}

TEST_CASE("stochastic order detection") {
  auto e1 = SurvivalModel::exponential(1.0);
  auto e2 = SurvivalModel::exponential(2.0);
  auto w21 = SurvivalModel::weibull(2.0, 1.0);
  CHECK(stochastic_order_direction(e2, e1) == 1);
  CHECK(stochastic_order_direction(e1, e2) == -1);
  CHECK(stochastic_order_direction(e1, e1) == 1);
  CHECK(stochastic_order_direction(e1, w21) == 0);
}

TEST_CASE("kernel lower bound") {
  auto got = check_lower_bound_T2_1_i(SurvivalModel::exponential(1.0),
                                      SurvivalModel::exponential(2.0), 0.5,
                                      kLinear);
  CHECK(got.status == CheckStatus::holds);
  CHECK(got.lhs > got.rhs);
  CHECK(got.rhs > 0.0);
  CHECK(got.margin > 0.0);
  CHECK(got.config_hash.size() == 16);
}

TEST_CASE("log-sum lower bound on the self pair") {
  auto m = SurvivalModel::exponential(1.0);
  auto got = check_lower_bound_T2_1_ii(m, m, 1.0, kLinear);
  CHECK(got.status == CheckStatus::holds);
  // lhs is the exponential self value 2; rhs is exp(-2*eulergamma)
  CHECK(got.lhs == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(got.rhs == doctest::Approx(std::exp(-2.0 * 0.5772156649015329))
                       .epsilon(1e-5));
}

TEST_CASE("stochastic order sandwich bounds") {
  auto x = SurvivalModel::exponential(2.0);
  auto y = SurvivalModel::exponential(1.0);
  SUBCASE("ordered pair holds in detect and in the stated direction") {
    for (auto dir : {OrderDirection::detect, OrderDirection::x_le_st_y}) {
      auto got = check_order_bounds_T2_2(x, y, 0.8, kLinear, dir);
      CHECK(got.status == CheckStatus::holds);
    }
    auto rev = check_order_bounds_T2_2(y, x, 0.8, kLinear,
                                       OrderDirection::x_ge_st_y);
    CHECK(rev.status == CheckStatus::holds);
  }
  SUBCASE("wrong stated direction is a premise violation") {
    auto got = check_order_bounds_T2_2(x, y, 0.8, kLinear,
                                       OrderDirection::x_ge_st_y);
    CHECK(got.status == CheckStatus::premise_violated);
    CHECK(std::isnan(got.lhs));
  }
  SUBCASE("crossing survival curves violate the premise in detect") {
    auto got = check_order_bounds_T2_2(SurvivalModel::exponential(1.0),
                                       SurvivalModel::weibull(2.0, 1.0), 0.8,
                                       kLinear, OrderDirection::detect);
    CHECK(got.status == CheckStatus::premise_violated);
  }
  SUBCASE("equal models sit inside both bounds") {
    auto got = check_order_bounds_T2_2(x, x, 1.2, kLinear);
    CHECK(got.status == CheckStatus::holds);
  }
}

TEST_CASE("monotonicity and two-sided bounds on ordered triples") {
  SUBCASE("exponential chain") {
    auto rows = check_monotonicity_T2_3_T2_4(SurvivalModel::exponential(3.0),
                                             SurvivalModel::exponential(2.0),
                                             SurvivalModel::exponential(1.0),
                                             0.9, kLinear);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].theorem == TheoremId::T2_3);
    CHECK(rows[1].theorem == TheoremId::T2_3);
    CHECK(rows[2].theorem == TheoremId::T2_4);
    for (const auto& r : rows) CHECK(r.status == CheckStatus::holds);
    CHECK(rows[0].config.substr(0, 5) == "T2_3i");
    CHECK(rows[1].config.substr(0, 6) == "T2_3ii");
  }
  SUBCASE("shared-shape Weibull chain") {
    auto rows = check_monotonicity_T2_3_T2_4(SurvivalModel::weibull(2.0, 3.0),
                                             SurvivalModel::weibull(2.0, 2.0),
                                             SurvivalModel::weibull(2.0, 1.0),
                                             1.4, kLinear);
    for (const auto& r : rows) CHECK(r.status == CheckStatus::holds);
  }
  SUBCASE("unordered triple violates the premise in every row") {
    auto rows = check_monotonicity_T2_3_T2_4(SurvivalModel::exponential(1.0),
                                             SurvivalModel::weibull(2.0, 1.0),
                                             SurvivalModel::exponential(0.5),
                                             0.9, kLinear);
    for (const auto& r : rows) {
      CHECK(r.status == CheckStatus::premise_violated);
      CHECK(std::isnan(r.slack));
    }
  }
}

TEST_CASE("finite support bounds on conditional models") {
  auto x = SurvivalModel::exponential(1.0);
  auto y = SurvivalModel::exponential(2.0);
  for (double beta : {1.0, 2.0}) {
    auto got = check_finite_support_T2_7(1, x, y, 0.5, 3.0, beta, kLinear);
    CHECK(got.status == CheckStatus::holds);
  }
  for (double beta : {0.5, 1.0}) {
    auto got = check_finite_support_T2_7(2, x, y, 0.5, 3.0, beta, kLinear);
    CHECK(got.status == CheckStatus::holds);
  }
  CHECK_THROWS_AS(check_finite_support_T2_7(1, x, y, 0.5, 3.0, 0.5, kLinear),
                  Error);
  CHECK_THROWS_AS(check_finite_support_T2_7(2, x, y, 0.5, 3.0, 1.5, kLinear),
                  Error);
  CHECK_THROWS_AS(check_finite_support_T2_7(3, x, y, 0.5, 3.0, 1.0, kLinear),
                  Error);
  CHECK_THROWS_AS(check_finite_support_T2_7(1, x, y, 0.0, 3.0, 1.5, kLinear),
                  Error);
}

TEST_CASE("power-weight bound against the first-order measure") {
  auto x = SurvivalModel::exponential(1.2);
  auto y = SurvivalModel::exponential(1.5);
  SUBCASE("beta 1 is an equality") {
    auto got = check_weight_power_T2_8(x, y, 1.0, 1.0);
    CHECK(got.status == CheckStatus::holds);
    CHECK(std::fabs(got.lhs - got.rhs) <= got.margin);
  }
  SUBCASE("directed cases") {
    CHECK(check_weight_power_T2_8(x, y, 2.0, 1.0).status ==
          CheckStatus::holds);
    CHECK(check_weight_power_T2_8(x, y, 0.5, 1.0).status ==
          CheckStatus::holds);
  }
}

TEST_CASE("hazard-mixture subadditivity") {
  auto y = SurvivalModel::exponential(2.0);
  SUBCASE("identical components collapse to an equality") {
    auto e = SurvivalModel::exponential(1.0);
    auto got = check_mixture_T2_9({{0.5, e}, {0.5, e}}, y, 0.9, kLinear);
    CHECK(got.status == CheckStatus::holds);
    CHECK(std::fabs(got.lhs - got.rhs) <= got.margin);
  }
  SUBCASE("heterogeneous components") {
    auto got = check_mixture_T2_9({{0.3, SurvivalModel::exponential(1.2)},
                                   {0.4, SurvivalModel::exponential(1.5)},
                                   {0.3, SurvivalModel::exponential(2.5)}},
                                  y, 1.0, kLinear);
    CHECK(got.status == CheckStatus::holds);
    CHECK(got.lhs < got.rhs);
  }
}

TEST_CASE("hazard-tilt scaling bound") {
  auto m = SurvivalModel::exponential(0.8);
  SUBCASE("alpha 1 is an equality") {
    auto got = check_phr_scaling_T3_2(m, m, 0.7, kLinear, 0.3, 1.0);
    CHECK(got.status == CheckStatus::holds);
    CHECK(std::fabs(got.lhs - got.rhs) <= got.margin);
  }
  SUBCASE("tilted directions hold on both sides of 1") {
    CHECK(check_phr_scaling_T3_2(m, m, 0.7, kLinear, 0.3, 0.5).status ==
          CheckStatus::holds);
    CHECK(check_phr_scaling_T3_2(m, m, 0.7, kLinear, 0.3, 2.0).status ==
          CheckStatus::holds);
    auto e = SurvivalModel::exponential(1.0);
    auto two = check_phr_scaling_T3_2(e, e, 1.0, kLinear, 0.0, 2.0);
    CHECK(two.lhs == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(two.rhs == doctest::Approx(4.0).epsilon(1e-7));
  }
}

TEST_CASE("check outcomes are invariant under a common affine transport") {
  const double a = 1.7, b = 0.4, c = 1.0;
  auto transport_weight = [a, b, c](double w) {
    return std::pow(std::max((w - b) / a, 0.0), c);
  };
  SUBCASE("order sandwich") {
    std::vector<std::pair<SurvivalModel, SurvivalModel>> pairs = {
        {SurvivalModel::exponential(2.0), SurvivalModel::exponential(1.0)},
        {SurvivalModel::exponential(1.0), SurvivalModel::exponential(2.0)},
        {SurvivalModel::exponential(1.0), SurvivalModel::weibull(2.0, 1.0)},
    };
    for (const auto& [x, y] : pairs) {
      auto base = check_order_bounds_T2_2(x, y, 0.8, WeightSpec{c});
      auto moved = check_order_bounds_T2_2_general(
          SurvivalModel::affine(x, a, b), SurvivalModel::affine(y, a, b), 0.8,
          transport_weight, "psi((w-b)/a)");
      CHECK(moved.status == base.status);
    }
  }
  SUBCASE("monotonicity and two-sided rows") {
    auto x = SurvivalModel::exponential(3.0);
    auto y = SurvivalModel::exponential(2.0);
    auto z = SurvivalModel::exponential(1.0);
    auto base = check_monotonicity_T2_3_T2_4(x, y, z, 0.9, WeightSpec{c});
    auto moved = check_monotonicity_T2_3_T2_4_general(
        SurvivalModel::affine(x, a, b), SurvivalModel::affine(y, a, b),
        SurvivalModel::affine(z, a, b), 0.9, transport_weight,
        "psi((w-b)/a)");
    CHECK(same_statuses(base, moved));
  }
}

TEST_CASE("randomized suites are deterministic and clean") {
  for (TheoremId id : all_theorems()) {
    SuiteConfig cfg;
    cfg.theorem = id;
    cfg.seed = 42;
    cfg.configs = 20;
    auto rows = run_suite(cfg, 1);
    REQUIRE(rows.size() == 20);
    for (const auto& r : rows) {
      const bool ok = r.status == CheckStatus::holds ||
                      r.status == CheckStatus::premise_violated;
      CHECK(ok);
      CHECK(r.config_hash.size() == 16);
    }
    auto again = run_suite(cfg, 4);
    REQUIRE(again.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(again[i].status == rows[i].status);
      CHECK(again[i].config == rows[i].config);
      if (rows[i].status == CheckStatus::holds) {
        CHECK(again[i].lhs == rows[i].lhs);
        CHECK(again[i].rhs == rows[i].rhs);
      }
    }
  }
}

TEST_CASE("suite csv shape") {
  SuiteConfig cfg;
  cfg.theorem = TheoremId::T2_2;
  cfg.seed = 42;
  cfg.configs = 8;
  auto rows = run_suite(cfg, 1);
  auto csv = suite_csv(rows);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "theorem,config-hash,lhs,rhs,slack,holds");
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == rows.size() + 1);

  auto bad = check_order_bounds_T2_2(SurvivalModel::exponential(2.0),
                                     SurvivalModel::exponential(1.0), 0.8,
                                     kLinear, OrderDirection::x_ge_st_y);
  auto one = suite_csv({bad});
  CHECK(one.find("premise-violated") != std::string::npos);
}
