#pragma once

#include <numbers>

#include "tc_atlas/path.hpp"

namespace tc_atlas {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2pi).
double wrap_angle(double a);

/// Reduces an angle to (-pi, pi].
double signed_angle(double a);

/// Wrap-aware distance on the circle: min(|d|, 2pi - |d|).
double circle_distance(double a, double b);

/// Max over coordinates of circle_distance; the metric used on tori.
double torus_distance(const Point& a, const Point& b);

/// Great-circle angle between two unit vectors, accurate near 0 and pi.
double angular_distance(const Point& a, const Point& b);

/// Unit vector in the direction of v. Throws DomainError for (near) zero v.
Point normalized(const Point& v);

/// Constant-speed minor great-circle arc from p to q (unit vectors, q != -p).
Path great_circle_arc(const Point& p, const Point& q);

}  // namespace tc_atlas
