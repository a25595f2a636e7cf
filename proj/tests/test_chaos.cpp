#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wfgcri/chaos.hpp"
#include "wfgcri/errors.hpp"

using namespace wfgcri;

TEST_CASE("trajectories are deterministic with exact burn-in semantics") {
  MapSpec spec{MapKind::ricker, 3.7, 0.01, 500, 0};
  auto a = iterate_map(spec);
  auto b = iterate_map(spec);
  CHECK(a == b);
  CHECK(a.size() == 500);
  MapSpec burned = spec;
  burned.burn_in = 100;
  burned.n = 400;
  auto c = iterate_map(burned);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == a[i + 100]);
}

TEST_CASE("ricker dynamics land on the known attractors") {
  SUBCASE("subcritical growth settles on the unit fixed point") {
    auto xs = iterate_map({MapKind::ricker, 1.5, 0.01, 2000, 0});
    CHECK(std::fabs(xs.back() - 1.0) < 1e-6);
  }
  SUBCASE("r 2.3 settles on a period-2 orbit") {
    auto xs = iterate_map({MapKind::ricker, 2.3, 0.01, 2000, 1000});
    const std::size_t k = xs.size() - 10;
    CHECK(std::fabs(xs[k + 2] - xs[k]) < 1e-8);
    CHECK(std::fabs(xs[k + 1] - xs[k]) > 0.1);
  }
  SUBCASE("states stay positive deep in the chaotic regime") {
    for (double x : iterate_map({MapKind::ricker, 4.9, 0.01, 5000, 0}))
      CHECK(x > 0.0);
  }
}

TEST_CASE("tent dynamics") {
  SUBCASE("subcritical rate decays to zero") {
    auto xs = iterate_map({MapKind::tent, 0.9, 0.3, 10000, 0});
    CHECK(xs.back() < 1e-3);
  }
  SUBCASE("states stay inside the unit interval") {
    for (double x : iterate_map({MapKind::tent, 1.99, 0.37, 5000, 0})) {
      CHECK(x >= 0.0);
      CHECK(x <= 1.0);
    }
  }
  SUBCASE("rate 1 from below one half is constant") {
    auto xs = iterate_map({MapKind::tent, 1.0, 0.01, 100, 0});
    for (double x : xs) CHECK(x == 0.01);
  }
}

TEST_CASE("map parameter validation") {
  CHECK_THROWS_AS(iterate_map({MapKind::ricker, 0.0, 0.01, 100, 0}), Error);
  CHECK_THROWS_AS(iterate_map({MapKind::ricker, 1.0, 0.0, 100, 0}), Error);
  CHECK_THROWS_AS(iterate_map({MapKind::tent, 2.5, 0.3, 100, 0}), Error);
  CHECK_THROWS_AS(iterate_map({MapKind::tent, 1.0, 1.0, 100, 0}), Error);
  CHECK_THROWS_AS(iterate_map({MapKind::tent, 1.0, 0.3, 1, 0}), Error);
}

TEST_CASE("complexity curve cells") {
  std::vector<double> rs = {1.0, 4.9};
  std::vector<double> betas = {0.5, 1.0};
  auto cells = wfgcri_curve(MapKind::ricker, rs, betas, 0.5, 0.01, 3000);
  REQUIRE(cells.size() == 4);
  SUBCASE("cells are r-major") {
    CHECK(cells[0].r == 1.0);
    CHECK(cells[0].beta == 0.5);
    CHECK(cells[1].r == 1.0);
    CHECK(cells[1].beta == 1.0);
    CHECK(cells[2].r == 4.9);
  }
  SUBCASE("fixed-point trajectories are degenerate with value zero") {
    // r = 1 converges to the unit fixed point; ties collapse the sample
    CHECK_FALSE(cells[2].degenerate);
    for (std::size_t i = 0; i < 2; ++i) {
      if (cells[i].degenerate) CHECK(cells[i].value == 0.0);
    }
  }
  SUBCASE("chaotic cells dominate the settled ones for every beta") {
    CHECK(cells[2].value > cells[0].value);
    CHECK(cells[3].value > cells[1].value);
  }
  SUBCASE("recomputation is bit-identical, any worker count") {
    auto again = wfgcri_curve(MapKind::ricker, rs, betas, 0.5, 0.01, 3000,
                              1.0, 4);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      CHECK(again[i].value == cells[i].value);
      CHECK(again[i].degenerate == cells[i].degenerate);
    }
  }
}

TEST_CASE("tent curve at the critical rate is degenerate-flagged") {
  auto cells = wfgcri_curve(MapKind::tent, {1.0}, {0.5, 1.0, 1.5}, 0.5, 0.01,
                            2000);
  for (const auto& cell : cells) {
    CHECK(cell.degenerate);
    CHECK(cell.value == 0.0);
  }
}

TEST_CASE("bifurcation scan shape") {
  auto pts = bifurcation_data(MapKind::tent, 1.0, 2.0, 11, 0.37, 300, 40);
  REQUIRE(pts.size() == 11 * 40);
  CHECK(pts.front().r == 1.0);
  CHECK(pts.back().r == 2.0);
  for (const auto& p : pts) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 1.0);
  }
  // r grid is evenly spaced and inclusive
  CHECK(pts[40].r == doctest::Approx(1.1).epsilon(1e-12));
  CHECK_THROWS_AS(bifurcation_data(MapKind::tent, 2.0, 1.0, 5, 0.3, 10, 10),
                  Error);
}
