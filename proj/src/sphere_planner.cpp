#include "tc_atlas/sphere_planner.hpp"

#include <cmath>
#include <string>

#include "tc_atlas/errors.hpp"

namespace tc_atlas {

SphereConfig SphereConfig::standard(int n) {
  if (n < 1) throw DomainError("sphere dimension must be at least 1");
  SphereConfig cfg;
  cfg.n = n;
  cfg.a0 = Point::Unit(n + 1, 0);
  cfg.p0 = Point::Unit(n + 1, 1);
  return cfg;
}

void SphereConfig::validate() const {
  if (n < 1) throw DomainError("sphere dimension must be at least 1");
  const auto dim = static_cast<Eigen::Index>(n + 1);
  if (a0.size() != dim || p0.size() != dim) throw DomainError("base point and arc witness must lie in R^{n+1}");
  if (std::abs(a0.norm() - 1.0) > 1e-12 || std::abs(p0.norm() - 1.0) > 1e-12)
    throw DomainError("base point and arc witness must be unit vectors");
  if (std::abs(a0.dot(p0)) > 1e-12) throw DomainError("arc witness must be orthogonal to the base point");
  if (!(disk_radius > 0.0 && disk_radius < kPi / 2.0)) throw DomainError("disk radius must lie in (0, pi/2)");
}

Point sphere_point(const Point& v) { return normalized(v); }

namespace {

void require_distinct(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DomainError("sphere points have different dimensions");
  if (angular_distance(a, b) <= kSphereDiagonalTolerance) throw DomainError("antipodalization needs distinct points");
}

double pole_distance(const SphereConfig& cfg, const Point& p) {
  return std::min(angular_distance(p, cfg.a0), angular_distance(p, -cfg.a0));
}

}  // namespace

std::pair<Point, Point> antipodalize(const Point& a, const Point& b) {
  require_distinct(a, b);
  // A - B points from B through A along their great circle, at angle
  // (pi - theta) / 2 beyond A; the formula also returns A when B = -A.
  Point ap = normalized(a - b);
  Point bp = -ap;
  return {std::move(ap), std::move(bp)};
}

double region_boundary_offset(const SphereConfig& cfg, const Point& a, const Point& b) {
  return pole_distance(cfg, antipodalize(a, b).first) - cfg.boundary_threshold();
}

int classify_region(const SphereConfig& cfg, const Point& a, const Point& b) {
  return region_boundary_offset(cfg, a, b) < 0.0 ? 2 : 1;
}

Point nearest_pole(const SphereConfig& cfg, const Point& p) {
  return angular_distance(p, cfg.a0) <= angular_distance(p, -cfg.a0) ? Point(cfg.a0) : Point(-cfg.a0);
}

Path half_great_circle(const Point& p, const Point& w) {
  return Path::single([p, w](double s) -> Point { return std::cos(kPi * s) * p + std::sin(kPi * s) * w; });
}

Path section_s1(const SphereConfig& cfg, const Point& a, const Point& b) {
  const auto [ap, bp] = antipodalize(a, b);
  if (pole_distance(cfg, ap) <= 1e-9) throw DomainError("phi(A, B) lies on the base axis; use s2");
  const Point v = normalized(cfg.a0 - ap.dot(cfg.a0) * ap);
  return Path::concat({{1.0, great_circle_arc(a, ap)},
                       {1.0, half_great_circle(ap, v)},
                       {1.0, great_circle_arc(bp, b)}});
}

Path section_s2(const SphereConfig& cfg, const Point& a, const Point& b) {
  const auto [ap, bp] = antipodalize(a, b);
  const Point p1 = nearest_pole(cfg, ap);
  const double l1 = angular_distance(ap, p1);
  if (std::abs(l1 - angular_distance(bp, -p1)) > 1e-9 || l1 >= kPi / 2.0)
    throw DomainError("A' is equidistant from both poles");
  Path eta = Path::concat({{l1, great_circle_arc(ap, p1)},
                           {kPi, half_great_circle(p1, cfg.p0)},
                           {l1, great_circle_arc(-p1, bp)}});
  return Path::concat({{1.0, great_circle_arc(a, ap)}, {1.0, eta}, {1.0, great_circle_arc(bp, b)}});
}

PlannerOutput sphere_plan(const SphereConfig& cfg, const Point& a, const Point& b) {
  if (a.size() != cfg.n + 1 || b.size() != cfg.n + 1)
    throw DomainError("sphere points must have " + std::to_string(cfg.n + 1) + " coordinates");
  if (a == b) return {Path::constant(a), 0, ""};
  if (angular_distance(a, b) <= kSphereDiagonalTolerance) return {great_circle_arc(a, b), 0, ""};
  const int region = classify_region(cfg, a, b);
  return {region == 1 ? section_s1(cfg, a, b) : section_s2(cfg, a, b), region, ""};
}

}  // namespace tc_atlas
