#include "doctest.h"

#include <random>

#include "mutants.hpp"
#include "tc_atlas/errors.hpp"
#include "tc_atlas/geometry.hpp"
#include "tc_atlas/torus_planner.hpp"

using namespace tc_atlas;

namespace {

Point angles(std::initializer_list<double> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p[i++] = x;
  return p;
}

double symmetry_error(const PlannerOutput& f, const PlannerOutput& g) {
  double e = 0.0;
  for (int k = 0; k <= 100; ++k) e = std::max(e, torus_distance(g.path(k / 100.0), f.path((100 - k) / 100.0)));
  return e;
}

Point random_angles(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  Point p(n);
  for (int k = 0; k < n; ++k) p[k] = u(rng);
  return p;
}

}  // namespace

TEST_CASE("torus points are reduced") {
  auto p = torus_point(angles({-0.5, 7.0}));
  CHECK(p[0] == doctest::Approx(kTwoPi - 0.5));
  CHECK(p[1] == doctest::Approx(7.0 - kTwoPi));
  CHECK_THROWS_AS(torus_point(Point(0)), DomainError);
}

TEST_CASE("product planner") {
  auto same = torus_symmetric_plan(angles({1.0, 2.0}), angles({1.0, 2.0}));
  CHECK(same.region == 0);
  CHECK(same.region_code == "00");
  CHECK(torus_distance(same.path(0.4), angles({1.0, 2.0})) == 0.0);

  std::mt19937_64 rng(29);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 300; ++i) {
      Point a = random_angles(n, rng), b = random_angles(n, rng);
      auto f = torus_symmetric_plan(a, b);
      auto g = torus_symmetric_plan(b, a);
      CHECK(f.region_code.size() == static_cast<std::size_t>(n));
      CHECK(f.region_code == g.region_code);
      CHECK(torus_distance(f.path(0.0), a) <= 1e-12);
      CHECK(torus_distance(f.path(1.0), b) <= 1e-12);
      CHECK(symmetry_error(f, g) <= 1e-12);
    }
  }
  // One coordinate equal, the other moving.
  auto mixed = torus_symmetric_plan(angles({1.0, 2.0}), angles({1.0, 3.0}));
  CHECK(mixed.region_code[0] == '0');
  CHECK(mixed.region_code[1] != '0');
  CHECK(mixed.region == mixed.region_code[1] - '0');
}

TEST_CASE("base arcs") {
  int rule = -1;
  auto shortest = base_arc(0.0, kPi / 2, kPi / 8, &rule);
  CHECK(rule == 0);
  CHECK(shortest(0.5) == doctest::Approx(kPi / 4));
  auto back = base_arc(0.0, kTwoPi - 0.3, kPi / 8, &rule);
  CHECK(rule == 0);
  CHECK(circle_distance(back(0.5), kTwoPi - 0.15) <= 1e-12);
  auto ccw = base_arc(0.0, kPi + 0.1, kPi / 8, &rule);
  CHECK(rule == 1);
  CHECK(ccw(0.5) == doctest::Approx((kPi + 0.1) / 2));
  auto ccw2 = base_arc(0.0, kPi - 0.1, kPi / 8, &rule);
  CHECK(rule == 1);
  CHECK(ccw2(1.0) == doctest::Approx(kPi - 0.1));
}

TEST_CASE("midpoint planner worked example") {
  auto cfg = TorusMidpointConfig::standard(1);
  const double b = 3 * kPi / 2 - 0.3;
  auto out = torus_midpoint_plan(cfg, angles({kPi / 2}), angles({b}));
  // Both points are more than pi/8 from the antipode pi, so both legs are
  // shortest arcs: 0 -> pi/2 and 0 -> b - 2pi.
  CHECK(out.region_code == "0");
  CHECK(out.path(0.0)[0] == doctest::Approx(kPi / 2));
  CHECK(out.path(0.25)[0] == doctest::Approx(kPi / 4));
  CHECK(out.path(0.5)[0] == 0.0);
  CHECK(circle_distance(out.path(0.75)[0], (b - kTwoPi) / 2) <= 1e-12);
  CHECK(circle_distance(out.path(1.0)[0], b) <= 1e-12);
}

TEST_CASE("midpoint planner properties") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 3; ++n) {
    auto cfg = TorusMidpointConfig::standard(n);
    for (int i = 0; i < 300; ++i) {
      Point a = random_angles(n, rng), b = random_angles(n, rng);
      auto f = torus_midpoint_plan(cfg, a, b);
      auto g = torus_midpoint_plan(cfg, b, a);
      CHECK(torus_distance(f.path(0.5), cfg.base) <= 1e-12);
      CHECK(torus_distance(f.path(0.0), a) <= 1e-12);
      CHECK(torus_distance(f.path(1.0), b) <= 1e-12);
      CHECK(symmetry_error(f, g) <= 1e-12);
      CHECK(f.region_code == g.region_code);
    }
    CHECK_THROWS_AS(torus_midpoint_plan(cfg, Point::Constant(n, 1.0), Point::Constant(n, 1.0)), DomainError);
  }
  auto shifted = TorusMidpointConfig{angles({1.0, 2.0}), 0.2};
  auto out = torus_midpoint_plan(shifted, angles({3.0, 0.5}), angles({5.0, 4.0}));
  CHECK(torus_distance(out.path(0.5), shifted.base) <= 1e-12);
  CHECK_THROWS_AS((TorusMidpointConfig{angles({0.0}), 2.0}).validate(), DomainError);
}

TEST_CASE("empirical region counts meet the floor") {
  for (int n = 1; n <= 3; ++n) {
    auto cfg = TorusMidpointConfig::standard(n);
    const int count = empirical_region_count(
        [cfg](const Point& a, const Point& b) { return torus_midpoint_plan(cfg, a, b); }, n, 20000);
    CHECK(count >= 2 * n + 1);
  }
  CHECK(empirical_region_count(torus_symmetric_plan, 1, 20000) >= 2);
  CHECK(empirical_region_count(torus_symmetric_plan, 2, 20000) <= 9);
}

TEST_CASE("unreversed first leg breaks symmetry") {
  auto cfg = TorusMidpointConfig::standard(2);
  std::mt19937_64 rng(37);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Point a = random_angles(2, rng), b = random_angles(2, rng);
    worst = std::max(worst, symmetry_error(mutants::unreversed_midpoint_plan(cfg, a, b),
                                           mutants::unreversed_midpoint_plan(cfg, b, a)));
  }
  CHECK(worst > 1e-3);
}
