#pragma once

// Plane properly colored spanning trees from a shifted quadtree, merged
// bottom-up, plus the boundary-crossing potential used to bound their length
// and the exhaustive search over discrete shifts.

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "bichroma/minbst.hpp"
#include "bichroma/parallel.hpp"
#include "bichroma/plane.hpp"
#include "bichroma/quadtree.hpp"

namespace bichroma {

/// A merge performed while processing a square of the given level.
struct LeveledMerge {
  int level = 0;
  MergeEvent event;
};

/// Optional instrumentation filled in by approx_tree.
struct ApproxTrace {
  Normalized normalized;
  ShiftedQuadtree quadtree;
  std::vector<LeveledMerge> merges;
  double normalized_length = 0.0;  // output length measured on normalized points
};

namespace detail {

inline MergeParty solve_node(const ShiftedQuadtree& qt, int index, std::span<const ColoredPoint> pts,
                             std::vector<LeveledMerge>* merges) {
  const QuadNode& node = qt.nodes[static_cast<std::size_t>(index)];
  if (node.is_leaf()) {
    std::vector<ColoredPoint> owned;
    owned.reserve(node.point_ids.size());
    for (int id : node.point_ids) owned.push_back(pts[static_cast<std::size_t>(id)]);
    return make_party(node.rect, std::move(owned));
  }
  std::array<MergeParty, 4> parts;
  for (std::size_t c = 0; c < 4; ++c) parts[c] = solve_node(qt, node.children[c], pts, merges);
  auto merge = [&](const MergeParty& a, const MergeParty& b) {
    MergeEvent ev;
    MergeParty out = merge_parties(a, b, &ev);
    if (merges) merges->push_back({node.level, ev});
    return out;
  };
  // Row pairs first, then the two rows.
  const MergeParty bottom = merge(parts[0], parts[1]);
  const MergeParty top = merge(parts[2], parts[3]);
  return merge(bottom, top);
}

}  // namespace detail

/// Plane properly colored spanning tree for one shift of the quadtree.
/// Requires general position, at least two points and two colors. The
/// result refers to the original points; `trace` receives the normalized
/// instance, the quadtree and every merge.
inline ColoredTree approx_tree(std::span<const ColoredPoint> points, const Shift& shift,
                               ApproxTrace* trace = nullptr) {
  require_colorable(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].id != static_cast<int>(i)) throw Error(ErrorKind::InvalidInput, "point ids must be 0..n-1");
  }
  Normalized norm = normalize(points);
  ShiftedQuadtree qt = build_quadtree(norm.points, shift);
  std::vector<LeveledMerge>* merges = trace ? &trace->merges : nullptr;
  if (merges) merges->clear();
  MergeParty root = detail::solve_node(qt, 0, norm.points, merges);
  if (root.kind != PartyKind::Tree || root.edges.size() + 1 != points.size()) {
    throw Error(ErrorKind::InternalError, "root merge did not produce a spanning tree");
  }
  ColoredTree out = make_tree(std::vector<ColoredPoint>(points.begin(), points.end()), std::move(root.edges));
  if (trace) {
    trace->normalized_length = tree_length(norm.points, out.edges);
    trace->normalized = std::move(norm);
    trace->quadtree = std::move(qt);
  }
  return out;
}

inline ColoredTree approx_tree(const std::vector<ColoredPoint>& points, const Shift& shift,
                               ApproxTrace* trace = nullptr) {
  return approx_tree(std::span<const ColoredPoint>(points), shift, trace);
}

/// Per-level boundary-crossing potential of a reference tree:
/// per_level[i] = 2^-i * #{edges meeting a level-i grid line}, i = 0..max_level.
struct OptPrimeProfile {
  std::vector<double> per_level;
  double total = 0.0;
};

namespace detail {

// Does the closed interval [lo, hi] contain origin + k * spacing for some
// integer k? All grid positions are exact doubles.
inline bool interval_hits_grid(double lo, double hi, double origin, double spacing) {
  double k = std::ceil((lo - origin) / spacing);
  while (origin + (k - 1) * spacing >= lo) k -= 1;
  while (origin + k * spacing < lo) k += 1;
  return origin + k * spacing <= hi;
}

inline bool edge_meets_level(const ColoredPoint& a, const ColoredPoint& b, const Shift& shift, int level) {
  const double spacing = std::ldexp(1.0, -level);
  return interval_hits_grid(std::min(a.x, b.x), std::max(a.x, b.x), shift.x, spacing) ||
         interval_hits_grid(std::min(a.y, b.y), std::max(a.y, b.y), shift.y, spacing);
}

}  // namespace detail

/// Boundary-crossing potential for `reference_edges` over normalized points
/// under `shift`, for levels 0..max_level.
inline OptPrimeProfile opt_prime(std::span<const ColoredPoint> normalized, std::span<const Edge> reference_edges,
                                 const Shift& shift, int max_level) {
  const IdIndex index(normalized);
  OptPrimeProfile profile;
  profile.per_level.assign(static_cast<std::size_t>(max_level + 1), 0.0);
  for (int level = 0; level <= max_level; ++level) {
    std::size_t hits = 0;
    for (const Edge& e : reference_edges) {
      if (detail::edge_meets_level(index[e.u], index[e.v], shift, level)) ++hits;
    }
    profile.per_level[static_cast<std::size_t>(level)] = std::ldexp(static_cast<double>(hits), -level);
  }
  profile.total = std::accumulate(profile.per_level.begin(), profile.per_level.end(), 0.0);
  return profile;
}

/// The reference tree must be over the same normalized points as the quadtree.
inline OptPrimeProfile opt_prime(const ColoredTree& reference_tree, const ShiftedQuadtree& qt) {
  return opt_prime(reference_tree.points, reference_tree.edges, qt.shift, qt.max_level);
}

struct DerandomizedResult {
  ColoredTree tree;
  Shift best_shift;
  double best_length = 0.0;
  double mean_length = 0.0;  // over all N^2 discrete shifts
  std::size_t shifts_evaluated = 0;
};

/// Shortest approx_tree over all N^2 discrete shifts (i/N, j/N). Ties go to
/// the smallest shift index i*N + j. Shifts are evaluated on up to
/// thread_count() workers; the reduction is order-independent.
inline DerandomizedResult derandomized_tree(std::span<const ColoredPoint> points,
                                            unsigned threads = thread_count()) {
  require_colorable(points);
  const std::uint64_t grid = grid_resolution(points.size());
  const std::size_t count = static_cast<std::size_t>(grid * grid);
  std::vector<double> lengths(count, 0.0);
  parallel_for(
      count,
      [&](std::size_t s) {
        const Shift shift = Shift::discrete(s / grid, s % grid, grid);
        lengths[s] = approx_tree(points, shift).total_length;
      },
      threads);
  std::size_t best = 0;
  for (std::size_t s = 1; s < count; ++s) {
    if (lengths[s] < lengths[best]) best = s;
  }
  DerandomizedResult out;
  out.best_shift = Shift::discrete(best / grid, best % grid, grid);
  out.tree = approx_tree(points, out.best_shift);
  out.best_length = out.tree.total_length;
  out.mean_length = std::accumulate(lengths.begin(), lengths.end(), 0.0) / static_cast<double>(count);
  out.shifts_evaluated = count;
  return out;
}

inline DerandomizedResult derandomized_tree(const std::vector<ColoredPoint>& points,
                                            unsigned threads = thread_count()) {
  return derandomized_tree(std::span<const ColoredPoint>(points), threads);
}

inline constexpr std::size_t kDefaultEnumerationLimit = 256;

/// Exact mean of the boundary-crossing potential over the uniform discrete
/// shift distribution, using the minimum colored spanning tree of the
/// normalized points as reference. TooLarge when n exceeds `max_points`.
inline double expected_opt_prime_discrete(std::span<const ColoredPoint> points,
                                          std::size_t max_points = kDefaultEnumerationLimit) {
  require_colorable(points);
  if (points.size() > max_points) {
    throw Error(ErrorKind::TooLarge, "shift enumeration limited to n <= " + std::to_string(max_points));
  }
  const Normalized norm = normalize(points);
  const ColoredTree reference = min_colored_spanning_tree(norm.points);
  const std::uint64_t grid = grid_resolution(points.size());
  const int max_level = log2_exact(grid);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < grid; ++i) {
    for (std::uint64_t j = 0; j < grid; ++j) {
      sum += opt_prime(reference.points, reference.edges, Shift::discrete(i, j, grid), max_level).total;
    }
  }
  return sum / static_cast<double>(grid * grid);
}

inline double expected_opt_prime_discrete(const std::vector<ColoredPoint>& points,
                                          std::size_t max_points = kDefaultEnumerationLimit) {
  return expected_opt_prime_discrete(std::span<const ColoredPoint>(points), max_points);
}

/// Upper bound on the mean potential under discrete shifts: (sqrt2 + 2)(1 + log2 N) L*.
inline double discrete_potential_bound(double minbst_length, std::size_t n) {
  return (std::sqrt(2.0) + 2.0) * (1.0 + log2_exact(grid_resolution(n))) * minbst_length;
}

/// Length guarantee of the derandomized tree relative to L*.
inline double derandomized_ratio_bound(std::size_t n) {
  const double levels = 1.0 + log2_exact(grid_resolution(n));
  return std::sqrt(2.0) + 4.0 * std::sqrt(2.0) * (std::sqrt(2.0) + 2.0) * levels;
}

}  // namespace bichroma
