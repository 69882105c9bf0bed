#pragma once

#include <limits>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "bichroma/tree.hpp"

namespace bichroma {

namespace detail {

// Total order on candidate edges: squared length, then smaller id, then larger id.
struct EdgeKey {
  double d2 = std::numeric_limits<double>::infinity();
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::max();

  friend bool operator<(const EdgeKey& a, const EdgeKey& b) {
    return std::tie(a.d2, a.lo, a.hi) < std::tie(b.d2, b.lo, b.hi);
  }
};

inline EdgeKey edge_key(const ColoredPoint& a, const ColoredPoint& b) {
  return {dist2(a, b), std::min(a.id, b.id), std::max(a.id, b.id)};
}

}  // namespace detail

/// Minimum-length spanning tree whose edges join differently colored points.
///
/// Prim's algorithm over the implicit complete multipartite graph, O(n^2).
/// Ties are broken by (squared length, min id, max id), so the result is
/// unique for a given input. Works for any number of colors; with two colors
/// this is the minimum bichromatic spanning tree.
inline ColoredTree min_colored_spanning_tree(std::span<const ColoredPoint> points) {
  require_colorable(points);
  const std::size_t n = points.size();
  std::vector<bool> in_tree(n, false);
  std::vector<detail::EdgeKey> best(n);
  std::vector<std::size_t> parent(n, 0);
  std::vector<Edge> edges;
  edges.reserve(n - 1);

  auto relax_from = [&](std::size_t u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v] || points[v].color == points[u].color) continue;
      const detail::EdgeKey key = detail::edge_key(points[u], points[v]);
      if (key < best[v]) {
        best[v] = key;
        parent[v] = u;
      }
    }
  };

  in_tree[0] = true;
  relax_from(0);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v] || best[v].d2 == std::numeric_limits<double>::infinity()) continue;
      if (next == n || best[v] < best[next]) next = v;
    }
    if (next == n) throw Error(ErrorKind::InternalError, "properly colored graph disconnected");
    in_tree[next] = true;
    edges.push_back({points[parent[next]].id, points[next].id});
    relax_from(next);
  }
  return make_tree(std::vector<ColoredPoint>(points.begin(), points.end()), std::move(edges));
}

inline ColoredTree min_colored_spanning_tree(const std::vector<ColoredPoint>& points) {
  return min_colored_spanning_tree(std::span<const ColoredPoint>(points));
}

/// Closest pair of differently colored points; ties by (min id, max id).
/// The returned pair is ordered by (color, id).
inline std::pair<ColoredPoint, ColoredPoint> closest_pair_bichromatic(std::span<const ColoredPoint> points) {
  if (points.size() < 2) throw Error(ErrorKind::TooFewPoints, "need at least two points");
  detail::EdgeKey best;
  std::pair<std::size_t, std::size_t> arg{0, 0};
  bool found = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].color == points[j].color) continue;
      const detail::EdgeKey key = detail::edge_key(points[i], points[j]);
      if (!found || key < best) {
        best = key;
        arg = {i, j};
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorKind::Monochromatic, "all points share one color");
  ColoredPoint a = points[arg.first];
  ColoredPoint b = points[arg.second];
  if (std::tie(b.color, b.id) < std::tie(a.color, a.id)) std::swap(a, b);
  return {a, b};
}

inline std::pair<ColoredPoint, ColoredPoint> closest_pair_bichromatic(const std::vector<ColoredPoint>& points) {
  return closest_pair_bichromatic(std::span<const ColoredPoint>(points));
}

/// True when some other properly colored spanning tree has the same length as
/// `tree` (checked exactly on squared lengths: a non-tree edge ties with the
/// longest edge on the tree path it closes).
inline bool has_length_ties(const ColoredTree& tree) {
  const auto& pts = tree.points;
  const std::size_t n = pts.size();
  if (n < 3) return false;
  const IdIndex index(pts);
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  std::vector<std::vector<bool>> is_tree_edge(n, std::vector<bool>(n, false));
  for (const Edge& e : tree.edges) {
    const std::size_t a = index.position(e.u), b = index.position(e.v);
    const double d2 = dist2(pts[a], pts[b]);
    adj[a].push_back({b, d2});
    adj[b].push_back({a, d2});
    is_tree_edge[a][b] = is_tree_edge[b][a] = true;
  }
  std::vector<double> path_max(n);
  std::vector<std::size_t> stack;
  std::vector<bool> seen(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(seen.begin(), seen.end(), false);
    path_max[root] = 0.0;
    seen[root] = true;
    stack.assign(1, root);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, d2] : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        path_max[v] = std::max(path_max[u], d2);
        stack.push_back(v);
      }
    }
    for (std::size_t v = root + 1; v < n; ++v) {
      if (is_tree_edge[root][v] || pts[root].color == pts[v].color) continue;
      if (dist2(pts[root], pts[v]) == path_max[v]) return true;
    }
  }
  return false;
}

}  // namespace bichroma
