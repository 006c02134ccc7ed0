#include "tc_atlas/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "tc_atlas/errors.hpp"
#include "tc_atlas/geometry.hpp"
#include "tc_atlas/planners_basic.hpp"
#include "tc_atlas/sphere_planner.hpp"
#include "tc_atlas/torus_planner.hpp"

namespace tc_atlas {

namespace {

constexpr int kChunkPairs = 1024;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double euclidean(const Point& a, const Point& b) { return (a - b).norm(); }

Point unit_direction(Eigen::Index dim, std::mt19937_64& rng) {
  Point d(dim);
  do {
    for (Eigen::Index k = 0; k < dim; ++k) d[k] = standard_normal(rng);
  } while (d.norm() < 1e-12);
  return d / d.norm();
}

}  // namespace

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double standard_normal(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

PlannerUnderTest sphere_under_test(int n) {
  const SphereConfig cfg = SphereConfig::standard(n);
  PlannerUnderTest p;
  p.name = "sphere";
  p.sample = [n](std::mt19937_64& rng) { return unit_direction(n + 1, rng); };
  p.plan = [cfg](const Point& a, const Point& b) { return sphere_plan(cfg, a, b); };
  p.distance = euclidean;
  p.perturb = [](const Point& a, double h, std::mt19937_64& rng) {
    return normalized(a + h * unit_direction(a.size(), rng));
  };
  p.margin = [cfg](const Point& a, const Point& b) {
    const double theta = angular_distance(a, b);
    if (theta <= kSphereDiagonalTolerance) return 0.0;
    return std::min({theta, kPi - theta, std::abs(region_boundary_offset(cfg, a, b))});
  };
  p.region_floor = 3;
  p.allowed_regions = std::set<int>{0, 1, 2};
  return p;
}

PlannerUnderTest torus_under_test(int n) {
  if (n < 1) throw DomainError("torus dimension must be at least 1");
  PlannerUnderTest p;
  p.name = "torus";
  p.sample = [n](std::mt19937_64& rng) {
    Point a(n);
    for (int k = 0; k < n; ++k) a[k] = kTwoPi * uniform01(rng);
    return a;
  };
  p.plan = torus_symmetric_plan;
  p.distance = torus_distance;
  p.perturb = [](const Point& a, double h, std::mt19937_64& rng) {
    return torus_point(a + h * unit_direction(a.size(), rng));
  };
  p.margin = torus_symmetric_margin;
  p.region_floor = n + 2;
  return p;
}

PlannerUnderTest torus_midpoint_under_test(int n) {
  const TorusMidpointConfig cfg = TorusMidpointConfig::standard(n);
  PlannerUnderTest p = torus_under_test(n);
  p.name = "torus-midpoint";
  p.plan = [cfg](const Point& a, const Point& b) { return torus_midpoint_plan(cfg, a, b); };
  p.margin = [cfg](const Point& a, const Point& b) { return torus_midpoint_margin(cfg, a, b); };
  p.midpoint = midpoint_constant(cfg.base);
  p.supports_diagonal = false;
  p.region_floor = 2 * n + 1;
  return p;
}

PlannerUnderTest convex_under_test(int n) {
  if (n < 1) throw DomainError("convex dimension must be at least 1");
  PlannerUnderTest p;
  p.name = "convex";
  p.sample = [n](std::mt19937_64& rng) {
    Point a(n);
    for (int k = 0; k < n; ++k) a[k] = uniform01(rng);
    return a;
  };
  p.plan = convex_plan;
  p.distance = euclidean;
  p.perturb = [](const Point& a, double h, std::mt19937_64& rng) -> Point {
    return a + h * unit_direction(a.size(), rng);
  };
  p.margin = [](const Point&, const Point&) { return std::numeric_limits<double>::infinity(); };
  p.region_floor = 1;
  p.allowed_regions = std::set<int>{0};
  return p;
}

PlannerUnderTest planner_under_test(const std::string& name, int n) {
  if (name == "sphere") return sphere_under_test(n);
  if (name == "torus") return torus_under_test(n);
  if (name == "torus-midpoint") return torus_midpoint_under_test(n);
  if (name == "convex") return convex_under_test(n);
  throw ParseError("unknown planner '" + name + "' (expected sphere, torus, torus-midpoint or convex)");
}

void CheckConfig::validate() const {
  if (pairs < 1) throw DomainError("pair count must be positive");
  if (t_samples < 3) throw DomainError("t sample count must be at least 3");
  if (threads < 0) throw DomainError("thread count must be nonnegative");
  for (double v : {tol.endpoint, tol.symmetry, tol.midpoint, tol.continuity_ratio, tol.boundary_margin, tol.perturbation})
    if (!(v > 0.0)) throw DomainError("tolerances must be positive");
}

int default_thread_count() {
  if (const char* env = std::getenv("TC_ATLAS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool PlannerCheckReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& kv) { return kv.second.pass; });
}

nlohmann::json PlannerCheckReport::to_json() const {
  nlohmann::json props = nlohmann::json::object();
  for (const auto& [name, r] : properties) props[name] = {{"max_error", r.max_error}, {"pass", r.pass}};
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [code, count] : region_histogram) hist[code] = count;
  nlohmann::json cont = nlohmann::json::object();
  for (const auto& [code, ratio] : continuity_by_region) cont[code] = ratio;
  return {{"planner", planner},
          {"seed", seed},
          {"rng", kHarnessRng},
          {"pairs", pairs},
          {"properties", props},
          {"region_histogram", hist},
          {"distinct_regions", distinct_regions()},
          {"continuity_by_region", cont},
          {"continuity_samples", continuity_samples},
          {"pass", pass()},
          {"failures", failures}};
}

namespace {

struct ChunkResult {
  double endpoint = 0.0;
  double symmetry = 0.0;
  double diagonal = 0.0;
  double midpoint = 0.0;
  double continuity = 0.0;
  long uncovered = 0;
  long errors = 0;
  long region_mismatch = 0;
  long disallowed = 0;
  long continuity_samples = 0;
  std::map<std::string, long> histogram;
  std::map<std::string, double> continuity_by_region;
  std::vector<std::string> failures;
};

std::string region_key(const PlannerOutput& out) {
  return out.region_code.empty() ? std::to_string(out.region) : out.region_code;
}

std::vector<Point> sample_path(const Path& path, const std::vector<double>& times) {
  std::vector<Point> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(path(t));
  return out;
}

void note_failure(ChunkResult& r, const std::string& what) {
  if (r.failures.size() < 5) r.failures.push_back(what);
}

void check_pair(const PlannerUnderTest& p, const CheckConfig& cfg, const std::vector<double>& times,
                std::mt19937_64& rng, ChunkResult& r) {
  const Point a = p.sample(rng);
  const Point b = p.sample(rng);
  const Point pa = p.perturb(a, cfg.tol.perturbation, rng);
  const Point pb = p.perturb(b, cfg.tol.perturbation, rng);
  const int T = cfg.t_samples;
  auto record = [&](const PlannerOutput& out) {
    ++r.histogram[region_key(out)];
    if (p.allowed_regions && !p.allowed_regions->count(out.region)) ++r.disallowed;
  };

  if (p.supports_diagonal) {
    try {
      const auto out = p.plan(a, a);
      record(out);
      for (double t : times) r.diagonal = std::max(r.diagonal, p.distance(out.path(t), a));
    } catch (const std::exception& e) {
      ++r.errors;
      note_failure(r, std::string("plan(A, A) raised: ") + e.what());
    }
  }
  if (p.distance(a, b) == 0.0) return;

  PlannerOutput fwd{Path::constant(a), 0, ""};
  PlannerOutput bwd{Path::constant(a), 0, ""};
  try {
    fwd = p.plan(a, b);
    bwd = p.plan(b, a);
  } catch (const std::exception& e) {
    ++r.errors;
    ++r.uncovered;
    note_failure(r, std::string("plan raised on a distinct pair: ") + e.what());
    return;
  }
  record(fwd);
  if (fwd.region != bwd.region || fwd.region_code != bwd.region_code) ++r.region_mismatch;

  const auto fs = sample_path(fwd.path, times);
  const auto bs = sample_path(bwd.path, times);
  r.endpoint = std::max({r.endpoint, p.distance(fs.front(), a), p.distance(fs.back(), b)});
  for (int i = 0; i < T; ++i)
    r.symmetry = std::max(r.symmetry, p.distance(bs[static_cast<std::size_t>(i)], fs[static_cast<std::size_t>(T - 1 - i)]));
  if (p.midpoint) r.midpoint = std::max(r.midpoint, p.distance(fwd.path(0.5), p.midpoint(a, b)));

  const double m = cfg.tol.boundary_margin;
  if (p.margin(a, b) < m || p.margin(pa, pb) < m || p.distance(pa, pb) == 0.0) return;
  try {
    const auto moved = p.plan(pa, pb);
    if (moved.region != fwd.region || moved.region_code != fwd.region_code) return;
    const auto ms = sample_path(moved.path, times);
    double dev = 0.0;
    for (int i = 0; i < T; ++i) dev = std::max(dev, p.distance(ms[static_cast<std::size_t>(i)], fs[static_cast<std::size_t>(i)]));
    const double ratio = dev / cfg.tol.perturbation;
    r.continuity = std::max(r.continuity, ratio);
    auto& slot = r.continuity_by_region[region_key(fwd)];
    slot = std::max(slot, ratio);
    ++r.continuity_samples;
  } catch (const std::exception& e) {
    ++r.errors;
    note_failure(r, std::string("plan raised on a perturbed pair: ") + e.what());
  }
}

ChunkResult run_chunk(const PlannerUnderTest& p, const CheckConfig& cfg, const std::vector<double>& times, int chunk) {
  std::mt19937_64 rng(splitmix64(cfg.seed + static_cast<std::uint64_t>(chunk)));
  ChunkResult r;
  const int begin = chunk * kChunkPairs;
  const int end = std::min(cfg.pairs, begin + kChunkPairs);
  for (int i = begin; i < end; ++i) check_pair(p, cfg, times, rng, r);
  return r;
}

}  // namespace

std::vector<double> mirrored_times(int count) {
  if (count < 2) throw DomainError("need at least two sample times");
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int i = 0; 2 * i < count; ++i) {
    const double x = std::ldexp(std::round(std::ldexp(static_cast<double>(i) / (count - 1), 30)), -30);
    t[static_cast<std::size_t>(i)] = x;
    t[static_cast<std::size_t>(count - 1 - i)] = 1.0 - x;
  }
  return t;
}

PlannerCheckReport check_planner(const PlannerUnderTest& planner, const CheckConfig& cfg) {
  cfg.validate();
  const auto times = mirrored_times(cfg.t_samples);
  const int chunks = (cfg.pairs + kChunkPairs - 1) / kChunkPairs;
  std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
  const int threads = std::min(chunks, cfg.threads > 0 ? cfg.threads : default_thread_count());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int c = next++; c < chunks; c = next++) results[static_cast<std::size_t>(c)] = run_chunk(planner, cfg, times, c);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ChunkResult total;
  for (const auto& r : results) {
    total.endpoint = std::max(total.endpoint, r.endpoint);
    total.symmetry = std::max(total.symmetry, r.symmetry);
    total.diagonal = std::max(total.diagonal, r.diagonal);
    total.midpoint = std::max(total.midpoint, r.midpoint);
    total.continuity = std::max(total.continuity, r.continuity);
    total.uncovered += r.uncovered;
    total.errors += r.errors;
    total.region_mismatch += r.region_mismatch;
    total.disallowed += r.disallowed;
    total.continuity_samples += r.continuity_samples;
    for (const auto& [k, v] : r.histogram) total.histogram[k] += v;
    for (const auto& [k, v] : r.continuity_by_region) total.continuity_by_region[k] = std::max(total.continuity_by_region[k], v);
    for (const auto& f : r.failures)
      if (total.failures.size() < 10) total.failures.push_back(f);
  }

  PlannerCheckReport rep;
  rep.planner = planner.name;
  rep.seed = cfg.seed;
  rep.pairs = cfg.pairs;
  auto put = [&](const std::string& name, double err, bool pass) { rep.properties[name] = {err, pass}; };
  put("endpoint", total.endpoint, total.endpoint <= cfg.tol.endpoint);
  put("symmetry", total.symmetry, total.symmetry <= cfg.tol.symmetry);
  if (planner.supports_diagonal) put("diagonal", total.diagonal, total.diagonal <= cfg.tol.endpoint);
  if (planner.midpoint) put("midpoint", total.midpoint, total.midpoint <= cfg.tol.midpoint);
  put("continuity", total.continuity, total.continuity <= cfg.tol.continuity_ratio);
  put("coverage", static_cast<double>(total.uncovered), total.uncovered == 0);
  put("errors", static_cast<double>(total.errors), total.errors == 0);
  put("region_symmetry", static_cast<double>(total.region_mismatch), total.region_mismatch == 0);
  if (planner.allowed_regions) put("region_set", static_cast<double>(total.disallowed), total.disallowed == 0);
  if (planner.region_floor > 0) {
    const int distinct = static_cast<int>(total.histogram.size());
    put("region_floor", static_cast<double>(std::max(0, planner.region_floor - distinct)), distinct >= planner.region_floor);
  }
  rep.region_histogram = std::move(total.histogram);
  rep.continuity_by_region = std::move(total.continuity_by_region);
  rep.continuity_samples = total.continuity_samples;
  rep.failures = std::move(total.failures);
  return rep;
}

}  // namespace tc_atlas
