#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "bichroma/minbst.hpp"
#include "bichroma/tree.hpp"

namespace bichroma {

using EdgePair = std::pair<std::size_t, std::size_t>;

/// All unordered pairs of edge indices whose segments properly cross.
inline std::vector<EdgePair> crossing_pairs(std::span<const ColoredPoint> points, std::span<const Edge> edges) {
  const IdIndex index(points);
  struct Box {
    double x0, x1, y0, y1;
  };
  std::vector<Box> boxes;
  boxes.reserve(edges.size());
  for (const Edge& e : edges) {
    const auto& a = index[e.u];
    const auto& b = index[e.v];
    boxes.push_back({std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)});
  }
  std::vector<EdgePair> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (boxes[i].x1 < boxes[j].x0 || boxes[j].x1 < boxes[i].x0 || boxes[i].y1 < boxes[j].y0 ||
          boxes[j].y1 < boxes[i].y0) {
        continue;
      }
      if (proper_crossing(index[edges[i].u], index[edges[i].v], index[edges[j].u], index[edges[j].v])) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

inline std::vector<EdgePair> crossing_pairs(const ColoredTree& tree) { return crossing_pairs(tree.points, tree.edges); }

inline bool is_plane(const ColoredTree& tree) { return crossing_pairs(tree).empty(); }

/// Crossing graph: vertices are edge indices, adjacency lists sorted.
inline std::vector<std::vector<std::size_t>> crossing_graph(std::size_t edge_count, std::span<const EdgePair> pairs) {
  std::vector<std::vector<std::size_t>> adj(edge_count);
  for (const auto& [a, b] : pairs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

/// No three pairwise crossing edges, i.e. the crossing graph is triangle-free.
inline bool is_triangle_free(const std::vector<std::vector<std::size_t>>& adj) {
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v : adj[u]) {
      if (v <= u) continue;
      const auto& a = adj[u];
      const auto& b = adj[v];
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
      }
    }
  }
  return true;
}

inline bool is_quasi_plane(const ColoredTree& tree) {
  const auto pairs = crossing_pairs(tree);
  return is_triangle_free(crossing_graph(tree.edges.size(), pairs));
}

/// Length of the shortest odd cycle, if any.
inline std::optional<std::size_t> odd_girth(const std::vector<std::vector<std::size_t>>& adj) {
  std::optional<std::size_t> best;
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> depth(adj.size());
  for (std::size_t root = 0; root < adj.size(); ++root) {
    if (adj[root].empty()) continue;
    std::fill(depth.begin(), depth.end(), unseen);
    depth[root] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      if (best && 2 * depth[u] + 1 >= *best) break;
      for (std::size_t v : adj[u]) {
        if (depth[v] == unseen) {
          depth[v] = depth[u] + 1;
          frontier.push(v);
        } else if (depth[v] == depth[u]) {
          const std::size_t len = 2 * depth[u] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// The tree path joining edges e1 and e2 that contains exactly one endpoint
/// of each; a single vertex when they share one. Indices refer to tree.edges.
inline std::vector<int> path_between_edges(const ColoredTree& tree, std::size_t e1, std::size_t e2) {
  if (e1 >= tree.edges.size() || e2 >= tree.edges.size() || e1 == e2) {
    throw Error(ErrorKind::EdgeNotInTree, "edge indices must be distinct edges of the tree");
  }
  const IdIndex index(tree.points);
  const std::size_t n = tree.points.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : tree.edges) {
    adj[index.position(e.u)].push_back(index.position(e.v));
    adj[index.position(e.v)].push_back(index.position(e.u));
  }
  const std::size_t start = index.position(tree.edges[e1].u);
  const std::size_t goal = index.position(tree.edges[e2].u);
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, none);
  parent[start] = start;
  std::queue<std::size_t> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v : adj[u]) {
      if (parent[v] == none) {
        parent[v] = u;
        frontier.push(v);
      }
    }
  }
  if (parent[goal] == none) throw Error(ErrorKind::InvalidInput, "tree is disconnected");
  std::vector<int> path;
  for (std::size_t v = goal;; v = parent[v]) {
    path.push_back(tree.points[v].id);
    if (v == start) break;
  }
  std::reverse(path.begin(), path.end());
  if (path.size() >= 2 && path[1] == tree.edges[e1].v) path.erase(path.begin());
  if (path.size() >= 2 && path[path.size() - 2] == tree.edges[e2].v) path.pop_back();
  return path;
}

/// Crossing structure of a tree together with the structural checks that
/// every minimum bichromatic spanning tree must pass.
struct CrossingReport {
  std::size_t n = 0;
  std::vector<EdgePair> crossing_pairs;
  std::size_t crossing_count = 0;
  std::size_t per_edge_max = 0;
  std::vector<std::vector<std::size_t>> crossing_graph;
  bool plane = true;
  bool quasi_plane = true;

  // A closest bichromatic pair is a tree edge, and no such edge is crossed.
  bool closest_pair_is_edge = false;
  bool closest_edge_crossing_free = false;
  // crossing_count <= floor(n^2/4) - n + 1
  bool total_crossing_bound_ok = false;
  // per_edge_max <= n - 3
  bool per_edge_bound_ok = false;
  // For every crossing pair, the joining tree path has differently colored ends.
  bool crossing_paths_bichromatic = false;

  bool length_ties = false;
  std::optional<std::size_t> odd_girth;

  bool all_ok() const {
    return quasi_plane && closest_pair_is_edge && closest_edge_crossing_free && total_crossing_bound_ok &&
           per_edge_bound_ok && crossing_paths_bichromatic;
  }
};

inline std::size_t max_total_crossings(std::size_t n) {
  if (n < 2) return 0;
  return n * n / 4 - n + 1;
}

inline std::size_t max_crossings_per_edge(std::size_t n) { return n >= 3 ? n - 3 : 0; }

/// Crossing statistics of any tree (no minimality assumptions).
inline CrossingReport analyze_crossings(const ColoredTree& tree) {
  CrossingReport report;
  report.n = tree.points.size();
  report.crossing_pairs = crossing_pairs(tree);
  report.crossing_count = report.crossing_pairs.size();
  report.crossing_graph = crossing_graph(tree.edges.size(), report.crossing_pairs);
  for (const auto& list : report.crossing_graph) report.per_edge_max = std::max(report.per_edge_max, list.size());
  report.plane = report.crossing_count == 0;
  report.quasi_plane = is_triangle_free(report.crossing_graph);
  report.odd_girth = odd_girth(report.crossing_graph);
  return report;
}

/// Structural checks for a minimum bichromatic spanning tree of `points`.
/// Rejects inputs that are not in general position.
inline CrossingReport verify_minbst_properties(std::span<const ColoredPoint> points, const ColoredTree& tree) {
  require_colorable(points);
  if (!check_general_position(points).ok) {
    throw Error(ErrorKind::NotGeneralPosition, "three input points are collinear");
  }
  if (!is_spanning_tree(tree) || tree.points.size() != points.size()) {
    throw Error(ErrorKind::InvalidInput, "tree does not span the point set");
  }
  CrossingReport report = analyze_crossings(tree);
  const std::size_t n = points.size();

  const IdIndex index(tree.points);
  const auto [cp_a, cp_b] = closest_pair_bichromatic(points);
  const double closest = dist2(cp_a, cp_b);
  report.closest_pair_is_edge = false;
  report.closest_edge_crossing_free = true;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const auto& a = index[tree.edges[i].u];
    const auto& b = index[tree.edges[i].v];
    if (a.color == b.color || dist2(a, b) != closest) continue;
    report.closest_pair_is_edge = true;
    if (!report.crossing_graph[i].empty()) report.closest_edge_crossing_free = false;
  }
  report.closest_edge_crossing_free = report.closest_edge_crossing_free && report.closest_pair_is_edge;
  report.total_crossing_bound_ok = report.crossing_count <= max_total_crossings(n);
  report.per_edge_bound_ok = report.per_edge_max <= max_crossings_per_edge(n);

  report.crossing_paths_bichromatic = true;
  for (const auto& [e1, e2] : report.crossing_pairs) {
    const auto path = path_between_edges(tree, e1, e2);
    if (index[path.front()].color == index[path.back()].color) {
      report.crossing_paths_bichromatic = false;
      break;
    }
  }
  report.length_ties = has_length_ties(tree);
  return report;
}

inline CrossingReport verify_minbst_properties(const std::vector<ColoredPoint>& points, const ColoredTree& tree) {
  return verify_minbst_properties(std::span<const ColoredPoint>(points), tree);
}

}  // namespace bichroma
