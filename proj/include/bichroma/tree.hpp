#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <unordered_map>
#include <vector>

#include "bichroma/geometry.hpp"

namespace bichroma {

/// Undirected edge between two point ids.
struct Edge {
  int u = 0;
  int v = 0;

  int lo() const { return std::min(u, v); }
  int hi() const { return std::max(u, v); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A tree over a set of points, edges given by point ids.
struct ColoredTree {
  std::vector<ColoredPoint> points;
  std::vector<Edge> edges;
  double total_length = 0.0;
};

/// Maps point ids to positions within a point list.
class IdIndex {
 public:
  explicit IdIndex(std::span<const ColoredPoint> points) : points_(points) {
    dense_ = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].id != static_cast<int>(i)) {
        dense_ = false;
        break;
      }
    }
    if (!dense_) {
      for (std::size_t i = 0; i < points.size(); ++i) sparse_.emplace(points[i].id, i);
    }
  }

  bool contains(int id) const {
    if (dense_) return id >= 0 && id < static_cast<int>(points_.size());
    return sparse_.count(id) != 0;
  }
  std::size_t position(int id) const { return dense_ ? static_cast<std::size_t>(id) : sparse_.at(id); }
  const ColoredPoint& operator[](int id) const { return points_[position(id)]; }

 private:
  std::span<const ColoredPoint> points_;
  bool dense_ = true;
  std::unordered_map<int, std::size_t> sparse_;
};

inline double edge_length(const IdIndex& index, const Edge& e) { return dist(index[e.u], index[e.v]); }

inline double tree_length(std::span<const ColoredPoint> points, std::span<const Edge> edges) {
  const IdIndex index(points);
  double total = 0.0;
  for (const Edge& e : edges) total += edge_length(index, e);
  return total;
}

inline double tree_length(const ColoredTree& tree) { return tree_length(tree.points, tree.edges); }

inline ColoredTree make_tree(std::vector<ColoredPoint> points, std::vector<Edge> edges) {
  ColoredTree tree{std::move(points), std::move(edges), 0.0};
  tree.total_length = tree_length(tree);
  return tree;
}

/// Small union-find used by the tree checks and the oracles.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

/// n-1 edges, all endpoints known, connected and acyclic.
inline bool is_spanning_tree(std::span<const ColoredPoint> points, std::span<const Edge> edges) {
  if (points.empty()) return false;
  if (edges.size() + 1 != points.size()) return false;
  const IdIndex index(points);
  DisjointSets sets(points.size());
  for (const Edge& e : edges) {
    if (!index.contains(e.u) || !index.contains(e.v) || e.u == e.v) return false;
    if (!sets.unite(index.position(e.u), index.position(e.v))) return false;
  }
  return true;
}

inline bool is_spanning_tree(const ColoredTree& tree) { return is_spanning_tree(tree.points, tree.edges); }

inline bool is_properly_colored(std::span<const ColoredPoint> points, std::span<const Edge> edges) {
  const IdIndex index(points);
  return std::all_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return index[e.u].color != index[e.v].color; });
}

inline bool is_properly_colored(const ColoredTree& tree) { return is_properly_colored(tree.points, tree.edges); }

inline int distinct_colors(std::span<const ColoredPoint> points) {
  std::vector<Color> colors;
  for (const auto& p : points) colors.push_back(p.color);
  std::sort(colors.begin(), colors.end());
  return static_cast<int>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

/// Throws TooFewPoints / Monochromatic for inputs that admit no properly colored spanning tree.
inline void require_colorable(std::span<const ColoredPoint> points) {
  if (points.size() < 2) throw Error(ErrorKind::TooFewPoints, "need at least two points");
  if (distinct_colors(points) < 2) throw Error(ErrorKind::Monochromatic, "all points share one color");
}

/// Assigns id = position, the convention every algorithm in this library expects.
inline std::vector<ColoredPoint> with_sequential_ids(std::vector<ColoredPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) points[i].id = static_cast<int>(i);
  return points;
}

}  // namespace bichroma
