#pragma once

// Property checks for symmetric motion planners over seeded random pairs.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "tc_atlas/path.hpp"

namespace tc_atlas {

/// Name of the generator scheme recorded in reports.
inline constexpr const char* kHarnessRng = "mt19937_64 per 1024-pair chunk, seeded by splitmix64(seed + chunk)";

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double uniform01(std::mt19937_64& rng);

/// Standard normal via Box-Muller on uniform01.
double standard_normal(std::mt19937_64& rng);

struct PlannerUnderTest {
  std::string name;
  std::function<Point(std::mt19937_64&)> sample;
  std::function<PlannerOutput(const Point&, const Point&)> plan;
  /// Metric used for every error measurement.
  std::function<double(const Point&, const Point&)> distance;
  /// Moves a point by at most h.
  std::function<Point(const Point&, double, std::mt19937_64&)> perturb;
  /// Distance of a pair from any region boundary or singular locus.
  std::function<double(const Point&, const Point&)> margin;
  /// Prescribed midpoint map, checked when present.
  std::function<Point(const Point&, const Point&)> midpoint;
  /// Whether plan(A, A) is defined (and must be the constant path).
  bool supports_diagonal = true;
  /// Minimum number of distinct region codes a correct planner must show.
  int region_floor = 0;
  /// Regions the planner may report, if restricted.
  std::optional<std::set<int>> allowed_regions;
};

PlannerUnderTest sphere_under_test(int n);
PlannerUnderTest torus_under_test(int n);
PlannerUnderTest torus_midpoint_under_test(int n);
/// Straight lines in the unit cube [0, 1]^n.
PlannerUnderTest convex_under_test(int n);

/// One of "sphere", "torus", "torus-midpoint", "convex"; ParseError otherwise.
PlannerUnderTest planner_under_test(const std::string& name, int n);

struct Tolerances {
  double endpoint = 1e-9;
  double symmetry = 1e-9;
  double midpoint = 1e-12;
  double continuity_ratio = 1e3;
  double boundary_margin = 1e-3;
  double perturbation = 1e-5;
};

struct CheckConfig {
  int pairs = 10000;
  int t_samples = 101;
  std::uint64_t seed = 42;
  Tolerances tol;
  /// 0: TC_ATLAS_THREADS if set, else hardware concurrency.
  int threads = 0;

  void validate() const;
};

struct PropertyResult {
  double max_error = 0.0;
  bool pass = true;
};

struct PlannerCheckReport {
  std::string planner;
  std::uint64_t seed = 0;
  int pairs = 0;
  std::map<std::string, PropertyResult> properties;
  std::map<std::string, long> region_histogram;
  std::map<std::string, double> continuity_by_region;
  long continuity_samples = 0;
  std::vector<std::string> failures;

  int distinct_regions() const { return static_cast<int>(region_histogram.size()); }
  bool pass() const;
  nlohmann::json to_json() const;
};

/// i / (count - 1) rounded to a multiple of 2^-30, with t[count - 1 - i] = 1 - t[i]
/// exactly so that reversal compares paths at exactly mirrored times.
std::vector<double> mirrored_times(int count);

/// Runs every applicable property. Deterministic for a fixed seed and config,
/// independent of the thread count.
PlannerCheckReport check_planner(const PlannerUnderTest& planner, const CheckConfig& cfg);

/// Thread count from TC_ATLAS_THREADS, else hardware concurrency (at least 1).
int default_thread_count();

}  // namespace tc_atlas
