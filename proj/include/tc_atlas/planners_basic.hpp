#pragma once

// Elementary symmetric planners (straight lines in convex sets, geodesics in
// metric trees) and midpoint maps.

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "tc_atlas/path.hpp"

namespace tc_atlas {

/// Straight line (1 - t) A + t B; one region.
PlannerOutput convex_plan(const Point& a, const Point& b);

/// A point on a metric tree: position `t` in [0, 1] along edge `edge`,
/// measured from the edge's first endpoint.
struct TreePoint {
  int edge = 0;
  double t = 0.0;
};

using TreePath = BasicPath<TreePoint>;
using TreePlannerOutput = BasicPlannerOutput<TreePoint>;

class MetricTree {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
    double length = 0.0;
  };

  /// Throws DomainError unless the edges form a connected acyclic graph on
  /// nodes 0..max index with positive lengths.
  explicit MetricTree(std::vector<Edge> edges);

  /// Edge list, one "u v length" per line; blank lines and '#' comments are skipped.
  static MetricTree parse(std::istream& in);

  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Tree-metric distance between nodes.
  double node_distance(int a, int b) const { return node_dist_[static_cast<std::size_t>(a * node_count_ + b)]; }

  /// Tree-metric distance between arbitrary points.
  double distance(const TreePoint& a, const TreePoint& b) const;

  /// Node sequence of the unique simple path from a to b (both inclusive).
  std::vector<int> node_path(int a, int b) const;

  /// Throws DomainError for an unknown edge or t outside [0, 1].
  void validate(const TreePoint& p) const;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> node_dist_;
  std::vector<int> next_hop_;  // next_hop_[a * n + b]: neighbour of a on the way to b
  std::vector<std::vector<int>> incident_;
};

/// Parses "edge_index t".
TreePoint parse_tree_point(const std::string& text);

/// Constant-speed geodesic between two tree points; one region.
TreePlannerOutput tree_plan(const MetricTree& tree, const TreePoint& a, const TreePoint& b);

/// Symmetric map on pairs of points, sigma(A, B) = sigma(B, A).
using MidpointMap = std::function<Point(const Point&, const Point&)>;

/// sigma(A, B) = A0 for every pair.
MidpointMap midpoint_constant(Point base);

/// Midpoint map on the circle in angle form: sigma(a, b) = d (a + b) mod 2pi.
std::function<double(double, double)> midpoint_circle_degree(int degree);

}  // namespace tc_atlas
