#include "doctest.h"

#include <cstdlib>

#include "mutants.hpp"
#include "tc_atlas/errors.hpp"
#include "tc_atlas/harness.hpp"

using namespace tc_atlas;

namespace {

CheckConfig small(int pairs, int threads = 1) {
  CheckConfig cfg;
  cfg.pairs = pairs;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

TEST_CASE("generators are deterministic") {
  std::mt19937_64 a(1), b(1);
  for (int i = 0; i < 100; ++i) {
    const double x = uniform01(a);
    CHECK(x == uniform01(b));
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  std::mt19937_64 c(2);
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double z = standard_normal(c);
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / 20000) < 0.05);
  CHECK(std::abs(sq / 20000 - 1.0) < 0.05);
}

TEST_CASE("convex planner passes with zero symmetry error") {
  const auto rep = check_planner(convex_under_test(2), small(2000));
  CHECK(rep.pass());
  CHECK(rep.properties.at("symmetry").max_error <= 1e-15);
  CHECK(rep.region_histogram.size() == 1);
}

TEST_CASE("sphere planner passes") {
  for (int n : {1, 2}) {
    const auto rep = check_planner(sphere_under_test(n), small(3000));
    CAPTURE(rep.to_json().dump());
    CHECK(rep.pass());
    CHECK(rep.distinct_regions() == 3);
    CHECK(rep.region_histogram.count("0"));
    CHECK(rep.continuity_samples > 2500);
  }
}

TEST_CASE("torus planners pass") {
  const auto sym = check_planner(torus_under_test(2), small(2000));
  CHECK(sym.pass());
  const auto mid = check_planner(torus_midpoint_under_test(2), small(3000));
  CHECK(mid.pass());
  CHECK(mid.properties.count("midpoint"));
  CHECK_FALSE(mid.properties.count("diagonal"));
  CHECK(mid.distinct_regions() >= 5);
}

TEST_CASE("reports are reproducible and thread independent") {
  const auto a = check_planner(sphere_under_test(2), small(2500, 1)).to_json();
  const auto b = check_planner(sphere_under_test(2), small(2500, 3)).to_json();
  CHECK(a == b);
  CHECK(a.at("seed") == 42);
  CHECK(a.at("rng") == kHarnessRng);
  auto other = small(2500);
  other.seed = 7;
  CHECK(check_planner(sphere_under_test(2), other).to_json() != a);
}

TEST_CASE("mutants fail the symmetry check") {
  auto sphere = sphere_under_test(2);
  const auto cfg = SphereConfig::standard(2);
  sphere.plan = [cfg](const Point& a, const Point& b) { return mutants::flipped_arc_sphere_plan(cfg, a, b); };
  const auto rep = check_planner(sphere, small(2000));
  CHECK_FALSE(rep.properties.at("symmetry").pass);
  CHECK(rep.properties.at("symmetry").max_error > 1e-3);

  auto torus = torus_midpoint_under_test(2);
  const auto tcfg = TorusMidpointConfig::standard(2);
  torus.plan = [tcfg](const Point& a, const Point& b) { return mutants::unreversed_midpoint_plan(tcfg, a, b); };
  const auto trep = check_planner(torus, small(500));
  CHECK(trep.properties.at("symmetry").max_error > 1e-3);
  CHECK_FALSE(trep.pass());
}

TEST_CASE("planner exceptions become failures") {
  auto p = convex_under_test(2);
  p.plan = [](const Point&, const Point&) -> PlannerOutput { throw DomainError("boom"); };
  const auto rep = check_planner(p, small(50));
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.properties.at("errors").pass);
  CHECK_FALSE(rep.properties.at("coverage").pass);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("region floor is enforced") {
  auto p = torus_midpoint_under_test(2);
  p.plan = [cfg = TorusMidpointConfig::standard(2)](const Point& a, const Point& b) {
    auto out = torus_midpoint_plan(cfg, a, b);
    out.region = 0;
    out.region_code = "00";
    return out;
  };
  const auto rep = check_planner(p, small(200));
  CHECK_FALSE(rep.properties.at("region_floor").pass);
  CHECK(rep.properties.at("region_floor").max_error == 4.0);
}

TEST_CASE("config and name validation") {
  CheckConfig bad;
  bad.pairs = 0;
  CHECK_THROWS_AS(check_planner(convex_under_test(1), bad), DomainError);
  CHECK_THROWS_AS(planner_under_test("nope", 2), ParseError);
  CHECK(planner_under_test("torus-midpoint", 3).region_floor == 7);
}

TEST_CASE("thread count from the environment") {
  setenv("TC_ATLAS_THREADS", "3", 1);
  CHECK(default_thread_count() == 3);
  setenv("TC_ATLAS_THREADS", "junk", 1);
  CHECK(default_thread_count() >= 1);
  unsetenv("TC_ATLAS_THREADS");
}
