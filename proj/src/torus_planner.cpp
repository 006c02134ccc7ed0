#include "tc_atlas/torus_planner.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "tc_atlas/errors.hpp"
#include "tc_atlas/geometry.hpp"
#include "tc_atlas/sphere_planner.hpp"

namespace tc_atlas {

Point torus_point(const Point& angles) {
  if (angles.size() < 1) throw DomainError("torus points need at least one angle");
  Point out(angles.size());
  for (Eigen::Index k = 0; k < angles.size(); ++k) {
    if (!std::isfinite(angles[k])) throw DomainError("torus angles must be finite");
    out[k] = wrap_angle(angles[k]);
  }
  return out;
}

namespace {

Point circle_vector(double angle) {
  Point v(2);
  v << std::cos(angle), std::sin(angle);
  return v;
}

double circle_angle(const Point& v) { return wrap_angle(std::atan2(v[1], v[0])); }

const SphereConfig& circle_config() {
  static const SphereConfig cfg = SphereConfig::standard(1);
  return cfg;
}

void require_same_size(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DomainError("torus points have different dimensions");
  if (a.size() < 1) throw DomainError("torus points need at least one angle");
}

}  // namespace

PlannerOutput torus_symmetric_plan(const Point& a, const Point& b) {
  require_same_size(a, b);
  const auto n = a.size();
  std::vector<Path> coords;
  std::string code;
  int region = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    auto out = sphere_plan(circle_config(), circle_vector(a[k]), circle_vector(b[k]));
    coords.push_back(std::move(out.path));
    code += static_cast<char>('0' + out.region);
    region = region * 3 + out.region;
  }
  if (region == 0 && a == b) return {Path::constant(torus_point(a)), 0, code};
  Path path = Path::single([coords = std::move(coords)](double t) -> Point {
    Point p(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) p[static_cast<Eigen::Index>(k)] = circle_angle(coords[k](t));
    return p;
  });
  return {std::move(path), region, std::move(code)};
}

double torus_symmetric_margin(const Point& a, const Point& b) {
  require_same_size(a, b);
  double m = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const double d = circle_distance(a[k], b[k]);
    m = std::min(m, d);
    if (d > kSphereDiagonalTolerance) {
      m = std::min(m, kPi - d);
      m = std::min(m, std::abs(region_boundary_offset(circle_config(), circle_vector(a[k]), circle_vector(b[k]))));
    }
  }
  return m;
}

TorusMidpointConfig TorusMidpointConfig::standard(int n) {
  if (n < 1) throw DomainError("torus dimension must be at least 1");
  return {Point::Zero(n), kPi / 8.0};
}

void TorusMidpointConfig::validate() const {
  if (base.size() < 1) throw DomainError("torus dimension must be at least 1");
  if (!(antipode_margin > 0.0 && antipode_margin < kPi / 2.0))
    throw DomainError("antipode margin must lie in (0, pi/2)");
}

std::function<double(double)> base_arc(double base, double x, double margin, int* rule) {
  const bool near_antipode = circle_distance(x, base + kPi) < margin;
  if (rule) *rule = near_antipode ? 1 : 0;
  const double delta = near_antipode ? wrap_angle(x - base) : signed_angle(x - base);
  return [base, delta](double s) { return wrap_angle(base + s * delta); };
}

std::function<Point(double)> base_path(const TorusMidpointConfig& cfg, const Point& x, std::string* rules) {
  if (x.size() != cfg.base.size()) throw DomainError("torus point has the wrong dimension");
  std::vector<std::function<double(double)>> arcs;
  if (rules) rules->clear();
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    int rule = 0;
    arcs.push_back(base_arc(cfg.base[k], x[k], cfg.antipode_margin, &rule));
    if (rules) *rules += static_cast<char>('0' + rule);
  }
  return [arcs = std::move(arcs)](double s) -> Point {
    Point p(static_cast<Eigen::Index>(arcs.size()));
    for (std::size_t k = 0; k < arcs.size(); ++k) p[static_cast<Eigen::Index>(k)] = arcs[k](s);
    return p;
  };
}

PlannerOutput torus_midpoint_plan(const TorusMidpointConfig& cfg, const Point& a, const Point& b) {
  require_same_size(a, b);
  if (torus_distance(a, b) == 0.0) throw DomainError("the midpoint planner needs distinct endpoints");
  std::string ra, rb;
  auto ga = base_path(cfg, a, &ra);
  auto gb = base_path(cfg, b, &rb);
  std::string code;
  int region = 0;
  for (std::size_t k = 0; k < ra.size(); ++k) {
    const int digit = (ra[k] - '0') + (rb[k] - '0');
    code += static_cast<char>('0' + digit);
    region = region * 3 + digit;
  }
  Path path = Path::concat({{1.0, Path::single([ga](double s) { return ga(1.0 - s); })},
                            {1.0, Path::single(gb)}});
  return {std::move(path), region, std::move(code)};
}

double torus_midpoint_margin(const TorusMidpointConfig& cfg, const Point& a, const Point& b) {
  require_same_size(a, b);
  double m = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const double antipode = cfg.base[k] + kPi;
    m = std::min(m, std::abs(circle_distance(a[k], antipode) - cfg.antipode_margin));
    m = std::min(m, std::abs(circle_distance(b[k], antipode) - cfg.antipode_margin));
  }
  return m;
}

int empirical_region_count(const TorusPlanner& planner, int n, int samples, std::uint64_t seed) {
  if (n < 1) throw DomainError("torus dimension must be at least 1");
  if (samples < 1) throw DomainError("sample count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::set<std::string> codes;
  Point a(n), b(n);
  for (int i = 0; i < samples; ++i) {
    for (int k = 0; k < n; ++k) a[k] = angle(rng);
    for (int k = 0; k < n; ++k) b[k] = angle(rng);
    if (a == b) continue;
    codes.insert(planner(a, b).region_code);
  }
  return static_cast<int>(codes.size());
}

}  // namespace tc_atlas
