#include "tc_atlas/geometry.hpp"

#include <cmath>

namespace tc_atlas {

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double signed_angle(double a) {
  double r = wrap_angle(a);
  if (r > kPi) r -= kTwoPi;
  return r;
}

double circle_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

double torus_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DomainError("torus points have different dimensions");
  double m = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) m = std::max(m, circle_distance(a[k], b[k]));
  return m;
}

double angular_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DomainError("sphere points have different dimensions");
  return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
}

Point normalized(const Point& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) throw DomainError("cannot normalize a zero or non-finite vector");
  return v / n;
}

Path great_circle_arc(const Point& p, const Point& q) {
  const double omega = angular_distance(p, q);
  if (omega < 1e-12)
    return Path::single([p, q](double s) { return normalized((1.0 - s) * p + s * q); });
  const double sin_omega = std::sin(omega);
  return Path::single([p, q, omega, sin_omega](double s) -> Point {
    return (std::sin((1.0 - s) * omega) * p + std::sin(s * omega) * q) / sin_omega;
  });
}

}  // namespace tc_atlas
