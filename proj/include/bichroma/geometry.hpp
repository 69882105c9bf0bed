#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "bichroma/error.hpp"
#include "bichroma/predicates.hpp"

namespace bichroma {

template <typename P>
concept PlanarPoint = requires(const P& p) {
  { p.x } -> std::convertible_to<double>;
  { p.y } -> std::convertible_to<double>;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

using Color = int;

/// A planar input point carrying a color label and its index in the input.
struct ColoredPoint {
  double x = 0.0;
  double y = 0.0;
  Color color = 0;
  int id = 0;

  Point2 pos() const { return {x, y}; }
  friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
};

struct Segment {
  Point2 a;
  Point2 b;
};

/// Axis-aligned rectangle. Membership is half-open: [x_lo, x_hi) x [y_lo, y_hi).
struct AxisRect {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;

  double width() const { return x_hi - x_lo; }
  double height() const { return y_hi - y_lo; }

  template <PlanarPoint P>
  bool contains(const P& p) const {
    return p.x >= x_lo && p.x < x_hi && p.y >= y_lo && p.y < y_hi;
  }

  template <PlanarPoint P>
  bool contains_closed(const P& p) const {
    return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
  }

  friend bool operator==(const AxisRect&, const AxisRect&) = default;
};

inline AxisRect bounding_union(const AxisRect& a, const AxisRect& b) {
  return {std::min(a.x_lo, b.x_lo), std::max(a.x_hi, b.x_hi), std::min(a.y_lo, b.y_lo),
          std::max(a.y_hi, b.y_hi)};
}

// True when the rectangles are interior-disjoint and touch along one complete
// common side (so their union is again a rectangle).
inline bool shares_full_side(const AxisRect& a, const AxisRect& b) {
  const bool same_rows = a.y_lo == b.y_lo && a.y_hi == b.y_hi;
  const bool same_cols = a.x_lo == b.x_lo && a.x_hi == b.x_hi;
  if (same_rows && (a.x_hi == b.x_lo || b.x_hi == a.x_lo)) return true;
  if (same_cols && (a.y_hi == b.y_lo || b.y_hi == a.y_lo)) return true;
  return false;
}

template <PlanarPoint P, PlanarPoint Q, PlanarPoint R>
int orient(const P& p, const Q& q, const R& r) {
  return detail::orient_sign(p.x, p.y, q.x, q.y, r.x, r.y);
}

template <PlanarPoint P, PlanarPoint Q>
bool same_position(const P& a, const Q& b) {
  return a.x == b.x && a.y == b.y;
}

namespace detail {

// For collinear a, b, c: is c within the closed bounding box of a-b?
template <PlanarPoint P, PlanarPoint Q, PlanarPoint R>
bool on_collinear_segment(const P& a, const Q& b, const R& c) {
  return std::min<double>(a.x, b.x) <= c.x && c.x <= std::max<double>(a.x, b.x) &&
         std::min<double>(a.y, b.y) <= c.y && c.y <= std::max<double>(a.y, b.y);
}

}  // namespace detail

/// Proper crossing of segments a-b and c-d: the open segments share exactly
/// one point. Shared endpoints do not count. Collinear segments that overlap
/// in more than a point throw DegenerateOverlap.
template <PlanarPoint P>
bool proper_crossing(const P& a, const P& b, const P& c, const P& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  if (o1 == 0 && o2 == 0) {
    // Collinear supports; overlap is degenerate unless they meet in at most one point.
    auto key = [&](const P& p) {
      return a.x != b.x ? static_cast<double>(p.x) : static_cast<double>(p.y);
    };
    double lo1 = key(a), hi1 = key(b), lo2 = key(c), hi2 = key(d);
    if (lo1 > hi1) std::swap(lo1, hi1);
    if (lo2 > hi2) std::swap(lo2, hi2);
    if (std::max(lo1, lo2) < std::min(hi1, hi2)) {
      throw Error(ErrorKind::DegenerateOverlap, "collinear segments overlap");
    }
    return false;
  }
  if (o1 * o2 >= 0) return false;
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  return o3 * o4 < 0;
}

inline bool proper_crossing(const Segment& s1, const Segment& s2) {
  return proper_crossing(s1.a, s1.b, s2.a, s2.b);
}

/// Closed segments a-b and c-d share at least one point.
template <PlanarPoint P, PlanarPoint Q>
bool segments_intersect_closed(const P& a, const P& b, const Q& c, const Q& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && detail::on_collinear_segment(a, b, c)) return true;
  if (o2 == 0 && detail::on_collinear_segment(a, b, d)) return true;
  if (o3 == 0 && detail::on_collinear_segment(c, d, a)) return true;
  if (o4 == 0 && detail::on_collinear_segment(c, d, b)) return true;
  return false;
}

/// Does the closed segment a-b meet the boundary of the closed rectangle?
template <PlanarPoint P>
bool segment_meets_rect_boundary(const P& a, const P& b, const AxisRect& r) {
  const Point2 c00{r.x_lo, r.y_lo}, c10{r.x_hi, r.y_lo}, c11{r.x_hi, r.y_hi}, c01{r.x_lo, r.y_hi};
  return segments_intersect_closed(a, b, c00, c10) || segments_intersect_closed(a, b, c10, c11) ||
         segments_intersect_closed(a, b, c11, c01) || segments_intersect_closed(a, b, c01, c00);
}

/// Euclidean distance from p to the closed rectangle (0 inside).
template <PlanarPoint P>
double dist_point_rect(const P& p, const AxisRect& r) {
  const double dx = std::max({r.x_lo - p.x, 0.0, p.x - r.x_hi});
  const double dy = std::max({r.y_lo - p.y, 0.0, p.y - r.y_hi});
  return std::hypot(dx, dy);
}

template <PlanarPoint P, PlanarPoint Q>
double dist2(const P& a, const Q& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

template <PlanarPoint P, PlanarPoint Q>
double dist(const P& a, const Q& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Convex hull in counterclockwise order starting at the lexicographically
/// smallest vertex. Points on hull edges are not vertices.
template <PlanarPoint P>
std::vector<P> convex_hull(std::span<const P> points) {
  std::vector<P> pts(points.begin(), points.end());
  auto lex = [](const P& a, const P& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::sort(pts.begin(), pts.end(), lex);
  pts.erase(std::unique(pts.begin(), pts.end(), [](const P& a, const P& b) { return same_position(a, b); }),
            pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

template <PlanarPoint P>
std::vector<P> convex_hull(const std::vector<P>& points) {
  return convex_hull(std::span<const P>(points));
}

/// q lies strictly outside the convex hull given in counterclockwise order.
template <PlanarPoint P, PlanarPoint Q>
bool strictly_outside_hull(const Q& q, std::span<const P> hull) {
  if (hull.empty()) return true;
  if (hull.size() == 1) return !same_position(hull[0], q);
  if (hull.size() == 2) {
    return orient(hull[0], hull[1], q) != 0 || !detail::on_collinear_segment(hull[0], hull[1], q);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orient(hull[i], hull[(i + 1) % hull.size()], q) < 0) return true;
  }
  return false;
}

/// Strict interior of triangle abc (either orientation).
template <PlanarPoint P, PlanarPoint Q>
bool strictly_inside_triangle(const P& a, const P& b, const P& c, const Q& p) {
  const int o1 = orient(a, b, p);
  const int o2 = orient(b, c, p);
  const int o3 = orient(c, a, p);
  return o1 != 0 && o1 == o2 && o2 == o3;
}

struct GeneralPositionCheck {
  bool ok = true;
  bool sampled = false;  // true when only a random sample of triples was examined
  std::optional<std::array<int, 3>> witness;  // indices of a collinear triple
};

/// No three points collinear (coincident points count as collinear).
/// Exhaustive when points.size() <= exhaustive_limit, using an angular sort
/// around every point (O(n^2 log n)); otherwise a fixed-seed triple sample.
template <PlanarPoint P>
GeneralPositionCheck check_general_position(std::span<const P> points, std::size_t exhaustive_limit = 2000,
                                            std::size_t sample_triples = 2'000'000) {
  GeneralPositionCheck result;
  const std::size_t n = points.size();
  if (n < 3) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (same_position(points[i], points[i + 1])) {
        result.ok = false;
        result.witness = std::array<int, 3>{0, 1, 1};
      }
    }
    return result;
  }
  if (n <= exhaustive_limit) {
    std::vector<std::size_t> others;
    others.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const P& origin = points[i];
      others.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) others.push_back(j);
      }
      // Fold every direction into the half-open upper half-plane; collinear
      // triples through origin become equal directions.
      auto flip = [&](std::size_t j) {
        const P& p = points[j];
        return p.y < origin.y || (p.y == origin.y && p.x < origin.x) ? -1 : 1;
      };
      for (std::size_t j : others) {
        if (same_position(points[j], origin)) {
          result.ok = false;
          result.witness = std::array<int, 3>{static_cast<int>(i), static_cast<int>(j), static_cast<int>(j)};
          return result;
        }
      }
      auto before = [&](std::size_t a, std::size_t b) {
        return flip(a) * flip(b) * orient(origin, points[a], points[b]) > 0;
      };
      std::sort(others.begin(), others.end(), before);
      for (std::size_t k = 0; k + 1 < others.size(); ++k) {
        if (orient(origin, points[others[k]], points[others[k + 1]]) == 0) {
          result.ok = false;
          result.witness = std::array<int, 3>{static_cast<int>(i), static_cast<int>(others[k]),
                                              static_cast<int>(others[k + 1])};
          return result;
        }
      }
    }
    return result;
  }
  result.sampled = true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (std::size_t s = 0; s < sample_triples; ++s) {
    const std::size_t a = rng() % n, b = rng() % n, c = rng() % n;
    if (a == b || b == c || a == c) continue;
    if (orient(points[a], points[b], points[c]) == 0) {
      result.ok = false;
      result.witness = std::array<int, 3>{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
      return result;
    }
  }
  return result;
}

template <PlanarPoint P>
GeneralPositionCheck check_general_position(const std::vector<P>& points, std::size_t exhaustive_limit = 2000) {
  return check_general_position(std::span<const P>(points), exhaustive_limit);
}

}  // namespace bichroma
