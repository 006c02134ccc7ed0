#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "tc_atlas/errors.hpp"

namespace tc_atlas {

/// Points of Euclidean spaces, spheres (unit vectors) and tori (angles).
using Point = Eigen::VectorXd;

/// A path on [0, 1] made of consecutive segments. Each segment is a closed-form
/// evaluator on its own local parameter s in [0, 1]; durations are normalized
/// to sum to 1 on construction.
template <class P>
class BasicPath {
 public:
  using Evaluator = std::function<P(double)>;

  struct Segment {
    double duration = 0.0;
    Evaluator eval;
  };

  static BasicPath constant(P point) {
    return BasicPath({{1.0, [point = std::move(point)](double) { return point; }}});
  }

  static BasicPath single(Evaluator eval) { return BasicPath({{1.0, std::move(eval)}}); }

  /// Concatenation with relative durations. Zero-duration pieces are dropped.
  static BasicPath concat(const std::vector<std::pair<double, BasicPath>>& pieces) {
    std::vector<Segment> segs;
    for (const auto& [weight, path] : pieces) {
      if (weight < 0.0) throw DomainError("negative segment duration");
      if (weight == 0.0) continue;
      for (const auto& s : path.segments_) segs.push_back({weight * s.duration, s.eval});
    }
    return BasicPath(std::move(segs));
  }

  explicit BasicPath(std::vector<Segment> segments) : segments_(std::move(segments)) {
    double total = 0.0;
    for (const auto& s : segments_) {
      if (!(s.duration >= 0.0)) throw DomainError("negative segment duration");
      total += s.duration;
    }
    if (segments_.empty() || !(total > 0.0)) throw DomainError("path has no positive-duration segment");
    std::erase_if(segments_, [](const Segment& s) { return s.duration == 0.0; });
    starts_.reserve(segments_.size());
    double acc = 0.0;
    for (auto& s : segments_) {
      s.duration /= total;
      starts_.push_back(acc);
      acc += s.duration;
    }
  }

  /// Evaluates at t, clamped to [0, 1].
  P operator()(double t) const {
    t = std::clamp(t, 0.0, 1.0);
    auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
    std::size_t k = it == starts_.begin() ? 0 : static_cast<std::size_t>(it - starts_.begin()) - 1;
    const auto& seg = segments_[k];
    const double s = k + 1 == segments_.size() && t == 1.0 ? 1.0 : (t - starts_[k]) / seg.duration;
    return seg.eval(std::clamp(s, 0.0, 1.0));
  }

  P start() const { return (*this)(0.0); }
  P end() const { return (*this)(1.0); }

  /// The time-reversed path t -> this(1 - t).
  BasicPath reversed() const {
    std::vector<Segment> segs;
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
      segs.push_back({it->duration, [f = it->eval](double s) { return f(1.0 - s); }});
    return BasicPath(std::move(segs));
  }

  /// `count` evenly spaced samples including both endpoints (count >= 2).
  std::vector<P> sample(int count) const {
    if (count < 2) throw DomainError("sample count must be at least 2");
    std::vector<P> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back((*this)(static_cast<double>(i) / (count - 1)));
    return out;
  }

  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::vector<Segment> segments_;
  std::vector<double> starts_;
};

using Path = BasicPath<Point>;

/// A path together with the index of the planner rule that produced it.
template <class P>
struct BasicPlannerOutput {
  BasicPath<P> path;
  int region = 0;
  /// Optional per-coordinate digits for product planners.
  std::string region_code;
};

using PlannerOutput = BasicPlannerOutput<Point>;

}  // namespace tc_atlas
