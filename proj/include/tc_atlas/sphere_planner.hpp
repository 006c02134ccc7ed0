#pragma once

// Two-region symmetric motion planner on S^n built from the antipodalization
// map phi(A, B).

#include <utility>

#include "tc_atlas/geometry.hpp"
#include "tc_atlas/path.hpp"

namespace tc_atlas {

/// Angle below which two sphere points are treated as equal.
inline constexpr double kSphereDiagonalTolerance = 1e-9;

struct SphereConfig {
  int n = 2;
  Point a0;
  double disk_radius = kPi / 4.0;
  Point p0;

  /// Defaults: a0 = e1, p0 = e2, disk radius pi/4.
  static SphereConfig standard(int n);

  double boundary_threshold() const { return disk_radius / 2.0; }

  /// Throws DomainError unless a0, p0 are orthogonal unit vectors in R^{n+1}
  /// and 0 < disk_radius < pi/2.
  void validate() const;
};

/// Renormalizes v onto the unit sphere; throws for the zero vector.
Point sphere_point(const Point& v);

/// The antipodal pair (A', B' = -A') on the great circle through A and B with
/// d(A, A') = d(B, B'). Throws DomainError when A = B.
std::pair<Point, Point> antipodalize(const Point& a, const Point& b);

/// 1 or 2; throws DomainError when A = B.
int classify_region(const SphereConfig& cfg, const Point& a, const Point& b);

/// Signed distance of (A, B) from the region 1/2 boundary (min pole distance
/// of phi minus the threshold).
double region_boundary_offset(const SphereConfig& cfg, const Point& a, const Point& b);

/// Whichever of a0, -a0 is closer to p.
Point nearest_pole(const SphereConfig& cfg, const Point& p);

/// The half great circle s -> cos(pi s) p + sin(pi s) w from p to -p
/// (w a unit vector orthogonal to p).
Path half_great_circle(const Point& p, const Point& w);

Path section_s1(const SphereConfig& cfg, const Point& a, const Point& b);
Path section_s2(const SphereConfig& cfg, const Point& a, const Point& b);

/// Region 0 for (near) equal points, otherwise the s1/s2 dispatch.
PlannerOutput sphere_plan(const SphereConfig& cfg, const Point& a, const Point& b);

}  // namespace tc_atlas
