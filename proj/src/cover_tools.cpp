#include "tc_atlas/cover_tools.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "tc_atlas/errors.hpp"
#include "tc_atlas/geometry.hpp"

namespace tc_atlas {

void PartitionValues::validate() const {
  if (values.empty()) throw DomainError("partition needs at least one value");
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("partition values must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("partition values must sum to 1");
}

int disjointify_index(const PartitionValues& pv) {
  pv.validate();
  const auto k = static_cast<double>(pv.values.size());
  const double sum = std::accumulate(pv.values.begin(), pv.values.end(), 0.0);
  for (std::size_t i = 0; i < pv.values.size(); ++i)
    if (k * pv.values[i] >= sum) return static_cast<int>(i) + 1;
  // The largest value always clears the mean; reached only through rounding.
  std::size_t best = 0;
  for (std::size_t i = 1; i < pv.values.size(); ++i)
    if (pv.values[i] > pv.values[best]) best = i;
  return static_cast<int>(best) + 1;
}

namespace {

double point_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  return (a - b).norm();
}

}  // namespace

UnorderedPathClass::UnorderedPathClass(Path representative, double tolerance)
    : rep_(std::move(representative)), tol_(tolerance) {
  if (point_distance(rep_.start(), rep_.end()) <= tol_) throw DomainError("path class needs distinct endpoints");
}

Path lift_section(const UnorderedPathClass& cls, const Point& a) {
  const Path& rep = cls.representative();
  const bool at_start = point_distance(rep.start(), a) <= cls.tolerance();
  const bool at_end = point_distance(rep.end(), a) <= cls.tolerance();
  if (at_start && at_end) throw DomainError("point matches both endpoints");
  if (at_start) return rep;
  if (at_end) return rep.reversed();
  throw DomainError("point is not an endpoint of the path class");
}

Path diagonal_section(const DiagonalRetraction& r, const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DomainError("points have different dimensions");
  if (a == b) return Path::constant(a);
  if (!r.in_domain(a, b)) throw DomainError("segment leaves the retraction domain");
  Point ea = r.embed(a);
  Point eb = r.embed(b);
  return Path::single([ea, eb, retract = r.retract](double t) -> Point { return retract((1.0 - t) * ea + t * eb); });
}

DiagonalRetraction sphere_retraction() {
  return {[](const Point& p) { return p; },
          [](const Point& q) { return normalized(q); },
          [](const Point& a, const Point& b) { return a.dot(b) > -1.0 + 1e-6; }};
}

DiagonalRetraction torus_retraction() {
  return {[](const Point& p) {
            Point e(2 * p.size());
            for (Eigen::Index k = 0; k < p.size(); ++k) {
              e[2 * k] = std::cos(p[k]);
              e[2 * k + 1] = std::sin(p[k]);
            }
            return e;
          },
          [](const Point& q) {
            Point p(q.size() / 2);
            for (Eigen::Index k = 0; k < p.size(); ++k) {
              if (std::hypot(q[2 * k], q[2 * k + 1]) < 1e-300) throw DomainError("chord passes through the origin");
              p[k] = wrap_angle(std::atan2(q[2 * k + 1], q[2 * k]));
            }
            return p;
          },
          [](const Point& a, const Point& b) {
            for (Eigen::Index k = 0; k < a.size(); ++k)
              if (kPi - circle_distance(a[k], b[k]) < 1e-6) return false;
            return true;
          }};
}

}  // namespace tc_atlas
