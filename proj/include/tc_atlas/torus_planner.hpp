#pragma once

// Planners on the torus T^n, points given as n angles in radians.

#include <cstdint>
#include <functional>
#include <string>

#include "tc_atlas/path.hpp"

namespace tc_atlas {

/// Reduces every angle to [0, 2pi).
Point torus_point(const Point& angles);

/// Coordinatewise product of the circle planner (sphere planner at n = 1).
/// region_code holds one digit 0/1/2 per coordinate; region is that string
/// read in base 3.
PlannerOutput torus_symmetric_plan(const Point& a, const Point& b);

/// Smallest per-coordinate distance of (A, B) from a region boundary of the
/// product planner (infinite when no coordinate is near one).
double torus_symmetric_margin(const Point& a, const Point& b);

struct TorusMidpointConfig {
  Point base;
  double antipode_margin = 3.14159265358979323846 / 8.0;

  /// All-zero base in dimension n.
  static TorusMidpointConfig standard(int n);

  void validate() const;
};

/// Angle path from the base coordinate to x: the signed shortest arc when x is
/// at least the margin away from the base's antipode, else the counterclockwise
/// arc. `rule` receives 0 or 1 accordingly.
std::function<double(double)> base_arc(double base, double x, double margin, int* rule = nullptr);

/// Per-coordinate paths gamma_x from the base to x, evaluated at s in [0, 1].
std::function<Point(double)> base_path(const TorusMidpointConfig& cfg, const Point& x, std::string* rules = nullptr);

/// s(A, B)(t) = gamma_A(1 - 2t) then gamma_B(2t - 1); passes the base at t = 1/2.
/// Per-coordinate digit is rule(A_k) + rule(B_k). Throws DomainError when A = B.
PlannerOutput torus_midpoint_plan(const TorusMidpointConfig& cfg, const Point& a, const Point& b);

/// Distance of the pair from the nearest arc-rule switch in any coordinate.
double torus_midpoint_margin(const TorusMidpointConfig& cfg, const Point& a, const Point& b);

using TorusPlanner = std::function<PlannerOutput(const Point&, const Point&)>;

/// Number of distinct region codes over `samples` uniform random distinct
/// pairs on T^n.
int empirical_region_count(const TorusPlanner& planner, int n, int samples, std::uint64_t seed = 42);

}  // namespace tc_atlas
