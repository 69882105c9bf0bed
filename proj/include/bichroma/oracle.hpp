#pragma once

// Exhaustive minimum plane properly colored spanning tree for tiny inputs.
// Used as a reference when validating the quadtree construction.

#include <algorithm>
#include <array>
#include <limits>
#include <span>
#include <vector>

#include "bichroma/tree.hpp"

namespace bichroma {

inline constexpr std::size_t kOracleMaxPoints = 9;

namespace detail {

class PlaneTreeSearch {
 public:
  explicit PlaneTreeSearch(std::span<const ColoredPoint> points) : points_(points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (points[i].color != points[j].color) candidates_.push_back({i, j, dist(points[i], points[j])});
      }
    }
    std::sort(candidates_.begin(), candidates_.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.length, a.u, a.v) < std::tie(b.length, b.u, b.v);
    });
    const std::size_t m = candidates_.size();
    crosses_.assign(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        const bool c = proper_crossing(points[candidates_[a].u], points[candidates_[a].v], points[candidates_[b].u],
                                       points[candidates_[b].v]);
        crosses_[a][b] = crosses_[b][a] = c;
      }
    }
  }

  std::vector<Edge> run() {
    std::array<int, kOracleMaxPoints> comp{};
    for (std::size_t i = 0; i < points_.size(); ++i) comp[i] = static_cast<int>(i);
    chosen_.clear();
    recurse(0, 0.0, comp);
    if (best_.empty() && points_.size() > 1) {
      throw Error(ErrorKind::InternalError, "no plane properly colored spanning tree found");
    }
    std::vector<Edge> edges;
    for (std::size_t c : best_) {
      edges.push_back({points_[candidates_[c].u].id, points_[candidates_[c].v].id});
    }
    return edges;
  }

  std::size_t trees_completed() const { return completed_; }

 private:
  struct Candidate {
    std::size_t u, v;
    double length;
  };

  void recurse(std::size_t next, double length, std::array<int, kOracleMaxPoints> comp) {
    const std::size_t needed = points_.size() - 1 - chosen_.size();
    if (needed == 0) {
      ++completed_;
      if (length < best_length_) {
        best_length_ = length;
        best_ = chosen_;
      }
      return;
    }
    for (std::size_t c = next; c < candidates_.size(); ++c) {
      if (candidates_.size() - c < needed) return;
      // Remaining edges are at least as long as this one.
      if (length + static_cast<double>(needed) * candidates_[c].length >= best_length_) return;
      const auto& cand = candidates_[c];
      const int cu = comp[cand.u], cv = comp[cand.v];
      if (cu == cv) continue;
      if (std::any_of(chosen_.begin(), chosen_.end(), [&](std::size_t k) { return crosses_[k][c]; })) continue;
      std::array<int, kOracleMaxPoints> merged = comp;
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (merged[i] == cv) merged[i] = cu;
      }
      chosen_.push_back(c);
      recurse(c + 1, length + cand.length, merged);
      chosen_.pop_back();
    }
  }

  std::span<const ColoredPoint> points_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<bool>> crosses_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  double best_length_ = std::numeric_limits<double>::infinity();
  std::size_t completed_ = 0;
};

}  // namespace detail

/// Minimum-length plane properly colored spanning tree by branch and bound
/// over properly colored edges in length order. n <= 9 only (TooLarge).
inline ColoredTree brute_force_min_plane_tree(std::span<const ColoredPoint> points) {
  require_colorable(points);
  if (points.size() > kOracleMaxPoints) {
    throw Error(ErrorKind::TooLarge, "plane-tree oracle supports at most 9 points");
  }
  detail::PlaneTreeSearch search(points);
  auto edges = search.run();
  return make_tree(std::vector<ColoredPoint>(points.begin(), points.end()), std::move(edges));
}

inline ColoredTree brute_force_min_plane_tree(const std::vector<ColoredPoint>& points) {
  return brute_force_min_plane_tree(std::span<const ColoredPoint>(points));
}

}  // namespace bichroma
