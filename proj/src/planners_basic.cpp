#include "tc_atlas/planners_basic.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "tc_atlas/errors.hpp"
#include "tc_atlas/geometry.hpp"

namespace tc_atlas {

PlannerOutput convex_plan(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DomainError("points have different dimensions");
  if (a == b) return {Path::constant(a), 0, ""};
  return {Path::single([a, b](double t) -> Point { return (1.0 - t) * a + t * b; }), 0, ""};
}

MetricTree::MetricTree(std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw DomainError("tree has no edges");
  int max_node = 0;
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0) throw DomainError("negative node index");
    if (e.u == e.v) throw DomainError("self-loop in tree");
    if (!(e.length > 0.0) || !std::isfinite(e.length)) throw DomainError("edge lengths must be positive");
    max_node = std::max({max_node, e.u, e.v});
  }
  node_count_ = max_node + 1;
  if (static_cast<int>(edges_.size()) != node_count_ - 1)
    throw DomainError("edge count must be one less than the node count");

  incident_.assign(static_cast<std::size_t>(node_count_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incident_[static_cast<std::size_t>(edges_[i].u)].push_back(static_cast<int>(i));
    incident_[static_cast<std::size_t>(edges_[i].v)].push_back(static_cast<int>(i));
  }

  const auto n = static_cast<std::size_t>(node_count_);
  node_dist_.assign(n * n, std::numeric_limits<double>::infinity());
  next_hop_.assign(n * n, -1);
  // Depth-first traversal from every root; V - 1 edges plus connectivity => tree.
  for (int root = 0; root < node_count_; ++root) {
    const auto r = static_cast<std::size_t>(root);
    node_dist_[r * n + r] = 0.0;
    next_hop_[r * n + r] = root;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int ei : incident_[static_cast<std::size_t>(x)]) {
        const auto& e = edges_[static_cast<std::size_t>(ei)];
        const int y = e.u == x ? e.v : e.u;
        const auto cell = r * n + static_cast<std::size_t>(y);
        if (std::isfinite(node_dist_[cell])) continue;
        node_dist_[cell] = node_dist_[r * n + static_cast<std::size_t>(x)] + e.length;
        next_hop_[cell] = x == root ? y : next_hop_[r * n + static_cast<std::size_t>(x)];
        stack.push_back(y);
      }
    }
    for (std::size_t y = 0; y < n; ++y)
      if (!std::isfinite(node_dist_[r * n + y])) throw DomainError("tree is not connected");
  }
}

MetricTree MetricTree::parse(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Edge e;
    if (!(ls >> e.u)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("tree file line " + std::to_string(line_no) + ": expected 'u v length'");
    }
    std::string rest;
    if (!(ls >> e.v >> e.length) || (ls >> rest))
      throw ParseError("tree file line " + std::to_string(line_no) + ": expected 'u v length'");
    edges.push_back(e);
  }
  return MetricTree(std::move(edges));
}

void MetricTree::validate(const TreePoint& p) const {
  if (p.edge < 0 || p.edge >= static_cast<int>(edges_.size()))
    throw DomainError("tree point on unknown edge " + std::to_string(p.edge));
  if (!(p.t >= 0.0 && p.t <= 1.0)) throw DomainError("tree point parameter outside [0, 1]");
}

double MetricTree::distance(const TreePoint& a, const TreePoint& b) const {
  validate(a);
  validate(b);
  const auto& ea = edges_[static_cast<std::size_t>(a.edge)];
  const auto& eb = edges_[static_cast<std::size_t>(b.edge)];
  if (a.edge == b.edge) return std::abs(a.t - b.t) * ea.length;
  const double a_ends[2] = {a.t * ea.length, (1.0 - a.t) * ea.length};
  const double b_ends[2] = {b.t * eb.length, (1.0 - b.t) * eb.length};
  const int a_nodes[2] = {ea.u, ea.v};
  const int b_nodes[2] = {eb.u, eb.v};
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      best = std::min(best, a_ends[i] + node_distance(a_nodes[i], b_nodes[j]) + b_ends[j]);
  return best;
}

std::vector<int> MetricTree::node_path(int a, int b) const {
  const auto n = static_cast<std::size_t>(node_count_);
  std::vector<int> out{a};
  int x = a;
  while (x != b) {
    // Step from x towards b: next_hop_ is rooted at x.
    x = next_hop_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(b)];
    out.push_back(x);
  }
  return out;
}

TreePoint parse_tree_point(const std::string& text) {
  std::istringstream is(text);
  TreePoint p;
  std::string rest;
  if (!(is >> p.edge >> p.t) || (is >> rest)) throw ParseError("tree point must be 'edge_index t'");
  return p;
}

namespace {

// Index of the edge joining adjacent nodes x and y.
int edge_between(const MetricTree& tree, int x, int y) {
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    const auto& e = tree.edges()[i];
    if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) return static_cast<int>(i);
  }
  throw DomainError("nodes are not adjacent");
}

// Constant-speed motion along one edge between parameters t0 and t1.
TreePath along_edge(int edge, double t0, double t1) {
  return TreePath::single([edge, t0, t1](double s) { return TreePoint{edge, (1.0 - s) * t0 + s * t1}; });
}

}  // namespace

TreePlannerOutput tree_plan(const MetricTree& tree, const TreePoint& a, const TreePoint& b) {
  tree.validate(a);
  tree.validate(b);
  if (a.edge == b.edge) {
    if (a.t == b.t) return {TreePath::constant(a), 0, ""};
    return {along_edge(a.edge, a.t, b.t), 0, ""};
  }
  const auto& ea = tree.edges()[static_cast<std::size_t>(a.edge)];
  const auto& eb = tree.edges()[static_cast<std::size_t>(b.edge)];
  // Exit node of a's edge and entry node of b's edge minimizing total length.
  double best = std::numeric_limits<double>::infinity();
  int exit_side = 0, entry_side = 0;
  const int a_nodes[2] = {ea.u, ea.v};
  const int b_nodes[2] = {eb.u, eb.v};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double len = (i == 0 ? a.t : 1.0 - a.t) * ea.length +
                         tree.node_distance(a_nodes[i], b_nodes[j]) +
                         (j == 0 ? b.t : 1.0 - b.t) * eb.length;
      if (len < best) {
        best = len;
        exit_side = i;
        entry_side = j;
      }
    }

  std::vector<std::pair<double, TreePath>> pieces;
  const double exit_t = exit_side == 0 ? 0.0 : 1.0;
  pieces.emplace_back(std::abs(a.t - exit_t) * ea.length, along_edge(a.edge, a.t, exit_t));
  const auto nodes = tree.node_path(a_nodes[exit_side], b_nodes[entry_side]);
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const int ei = edge_between(tree, nodes[k], nodes[k + 1]);
    const auto& e = tree.edges()[static_cast<std::size_t>(ei)];
    const double from = e.u == nodes[k] ? 0.0 : 1.0;
    pieces.emplace_back(e.length, along_edge(ei, from, 1.0 - from));
  }
  const double entry_t = entry_side == 0 ? 0.0 : 1.0;
  pieces.emplace_back(std::abs(b.t - entry_t) * eb.length, along_edge(b.edge, entry_t, b.t));
  return {TreePath::concat(pieces), 0, ""};
}

MidpointMap midpoint_constant(Point base) {
  return [base = std::move(base)](const Point&, const Point&) { return base; };
}

std::function<double(double, double)> midpoint_circle_degree(int degree) {
  return [degree](double a, double b) {
    // d * (a + b) with both angles reduced first keeps the product small.
    return wrap_angle(static_cast<double>(degree) * (wrap_angle(a) + wrap_angle(b)));
  };
}

}  // namespace tc_atlas
