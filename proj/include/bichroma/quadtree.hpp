#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bichroma/tree.hpp"

namespace bichroma {

/// Uniform scale + translation taking the smallest enclosing axis-aligned
/// square of the input to [1,2]^2.
struct Transform {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double side = 1.0;

  Point2 apply(double x, double y) const { return {1.0 + (x - origin_x) / side, 1.0 + (y - origin_y) / side}; }
  Point2 invert(double x, double y) const { return {origin_x + (x - 1.0) * side, origin_y + (y - 1.0) * side}; }
};

struct Normalized {
  std::vector<ColoredPoint> points;
  Transform transform;
};

inline Normalized normalize(std::span<const ColoredPoint> points) {
  if (points.size() < 2) throw Error(ErrorKind::TooFewPoints, "need at least two points");
  double min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double side = std::max(max_x - min_x, max_y - min_y);
  if (!(side > 0.0)) throw Error(ErrorKind::DegenerateExtent, "all points coincide");
  Normalized out;
  out.transform = {min_x, min_y, side};
  out.points.reserve(points.size());
  for (const auto& p : points) {
    const Point2 q = out.transform.apply(p.x, p.y);
    out.points.push_back({q.x, q.y, p.color, p.id});
  }
  return out;
}

inline Normalized normalize(const std::vector<ColoredPoint>& points) {
  return normalize(std::span<const ColoredPoint>(points));
}

/// Smallest power of two >= n (at least 1).
inline std::uint64_t grid_resolution(std::size_t n) { return std::bit_ceil(std::max<std::size_t>(n, 1)); }

inline int log2_exact(std::uint64_t power_of_two) { return std::countr_zero(power_of_two); }

/// Translation of the 2x2 root square; both coordinates in [0,1).
struct Shift {
  enum class Kind { Continuous, Discrete };

  double x = 0.0;
  double y = 0.0;
  Kind kind = Kind::Discrete;
  std::uint64_t seed = 0;   // Continuous
  std::uint64_t i = 0;      // Discrete: x = i / N
  std::uint64_t j = 0;      // Discrete: y = j / N
  std::uint64_t grid = 1;   // Discrete: N

  static Shift discrete(std::uint64_t i, std::uint64_t j, std::uint64_t n_grid) {
    if (n_grid == 0 || i >= n_grid || j >= n_grid) {
      throw Error(ErrorKind::InvalidInput, "discrete shift indices must lie in [0, N)");
    }
    Shift s;
    s.kind = Kind::Discrete;
    s.i = i;
    s.j = j;
    s.grid = n_grid;
    s.x = static_cast<double>(i) / static_cast<double>(n_grid);
    s.y = static_cast<double>(j) / static_cast<double>(n_grid);
    return s;
  }

  // Coordinates are multiples of 2^-40 so every grid line sx + k/2^i is an
  // exact double and boundary tests never round.
  static Shift continuous(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    constexpr std::uint64_t mask = (std::uint64_t{1} << 40) - 1;
    const double unit = std::ldexp(1.0, -40);
    Shift s;
    s.kind = Kind::Continuous;
    s.seed = seed;
    s.x = static_cast<double>(rng() & mask) * unit;
    s.y = static_cast<double>(rng() & mask) * unit;
    return s;
  }

  std::string describe() const {
    if (kind == Kind::Continuous) return "random:" + std::to_string(seed);
    return "grid:" + std::to_string(i) + "," + std::to_string(j);
  }
};

enum class NodeClass { Empty, Mono, Bichromatic };

struct QuadNode {
  int level = -1;  // root is level -1 with side 2; level i has side 2^-i
  AxisRect rect;
  std::vector<int> point_ids;
  NodeClass cls = NodeClass::Empty;
  Color color = 0;                              // for Mono
  std::array<int, 4> children{-1, -1, -1, -1};  // SW, SE, NW, NE

  bool is_leaf() const { return children[0] < 0; }
};

/// Shifted quadtree over normalized points. nodes[0] is the root.
struct ShiftedQuadtree {
  Shift shift;
  std::uint64_t grid = 1;  // N: leaves are no smaller than 1/N
  int max_level = 0;       // log2 N
  std::vector<QuadNode> nodes;

  // Leaf owning each point id.
  std::vector<int> leaf_of;

  int depth() const {
    int deepest = -1;
    for (const auto& node : nodes) deepest = std::max(deepest, node.level);
    return deepest + 1;
  }
};

namespace detail {

inline void classify(QuadNode& node, std::span<const ColoredPoint> pts) {
  if (node.point_ids.empty()) {
    node.cls = NodeClass::Empty;
    return;
  }
  node.color = pts[static_cast<std::size_t>(node.point_ids.front())].color;
  node.cls = NodeClass::Mono;
  for (int id : node.point_ids) {
    if (pts[static_cast<std::size_t>(id)].color != node.color) {
      node.cls = NodeClass::Bichromatic;
      return;
    }
  }
}

inline void subdivide(ShiftedQuadtree& qt, std::size_t index, std::span<const ColoredPoint> pts) {
  classify(qt.nodes[index], pts);
  if (qt.nodes[index].cls != NodeClass::Bichromatic || qt.nodes[index].level >= qt.max_level) {
    for (int id : qt.nodes[index].point_ids) qt.leaf_of[static_cast<std::size_t>(id)] = static_cast<int>(index);
    return;
  }
  const AxisRect r = qt.nodes[index].rect;
  const double mx = r.x_lo + r.width() / 2;
  const double my = r.y_lo + r.height() / 2;
  const int child_level = qt.nodes[index].level + 1;
  const std::array<AxisRect, 4> rects = {
      AxisRect{r.x_lo, mx, r.y_lo, my}, AxisRect{mx, r.x_hi, r.y_lo, my},
      AxisRect{r.x_lo, mx, my, r.y_hi}, AxisRect{mx, r.x_hi, my, r.y_hi}};
  std::array<std::vector<int>, 4> buckets;
  // Comparing against the midlines only makes membership half-open inside
  // the root and closed on the root's far sides.
  for (int id : qt.nodes[index].point_ids) {
    const auto& p = pts[static_cast<std::size_t>(id)];
    const int quadrant = (p.x >= mx ? 1 : 0) + (p.y >= my ? 2 : 0);
    buckets[static_cast<std::size_t>(quadrant)].push_back(id);
  }
  for (std::size_t c = 0; c < 4; ++c) {
    QuadNode child;
    child.level = child_level;
    child.rect = rects[c];
    child.point_ids = std::move(buckets[c]);
    qt.nodes.push_back(std::move(child));
    qt.nodes[index].children[c] = static_cast<int>(qt.nodes.size() - 1);
  }
  for (std::size_t c = 0; c < 4; ++c) subdivide(qt, static_cast<std::size_t>(qt.nodes[index].children[c]), pts);
}

}  // namespace detail

/// Builds the shifted quadtree. Points must be normalized (inside [1,2]^2)
/// and carry ids 0..n-1. Subdivision stops at empty or single-colored
/// squares and at side 1/N, N = 2^ceil(log2 n).
inline ShiftedQuadtree build_quadtree(std::span<const ColoredPoint> points, const Shift& shift) {
  ShiftedQuadtree qt;
  qt.shift = shift;
  qt.grid = grid_resolution(points.size());
  qt.max_level = log2_exact(qt.grid);
  qt.leaf_of.assign(points.size(), -1);
  QuadNode root;
  root.level = -1;
  root.rect = {shift.x, shift.x + 2.0, shift.y, shift.y + 2.0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].id != static_cast<int>(i)) throw Error(ErrorKind::InvalidInput, "point ids must be 0..n-1");
    if (!root.rect.contains_closed(points[i])) throw Error(ErrorKind::InvalidInput, "point outside the root square");
    root.point_ids.push_back(static_cast<int>(i));
  }
  qt.nodes.push_back(std::move(root));
  detail::subdivide(qt, 0, points);
  return qt;
}

inline ShiftedQuadtree build_quadtree(const std::vector<ColoredPoint>& points, const Shift& shift) {
  return build_quadtree(std::span<const ColoredPoint>(points), shift);
}

}  // namespace bichroma
