#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "bichroma.hpp"

using namespace bichroma;
using boost::multiprecision::cpp_rational;

namespace {

int rational_orient(const Point2& p, const Point2& q, const Point2& r) {
  const cpp_rational px(p.x), py(p.y), qx(q.x), qy(q.y), rx(r.x), ry(r.y);
  const cpp_rational det = (qx - px) * (ry - py) - (qy - py) * (rx - px);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace

TEST(Orient, BasicSigns) {
  EXPECT_EQ(orient(Point2{0, 0}, Point2{1, 0}, Point2{0, 1}), 1);
  EXPECT_EQ(orient(Point2{0, 0}, Point2{1, 1}, Point2{2, 2}), 0);
  EXPECT_EQ(orient(Point2{0, 0}, Point2{0, 1}, Point2{1, 0}), -1);
}

TEST(Orient, MatchesRationalArithmeticOnNearDegenerateInput) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int zeros = 0;
  for (int t = 0; t < 20000; ++t) {
    Point2 p{u(rng), u(rng)}, q{u(rng), u(rng)};
    // r near the line pq, often exactly representable on it.
    const double s = u(rng) * 3.0;
    Point2 r{p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)};
    if (t % 3 == 1) r.x = std::nextafter(r.x, 10.0);
    if (t % 3 == 2) {
      p = {0.5 + std::ldexp(static_cast<double>(t % 17), -53), 0.5};
      q = {12.0, 12.0};
      r = {24.0, 24.0};
    }
    const int expected = rational_orient(p, q, r);
    zeros += expected == 0;
    ASSERT_EQ(orient(p, q, r), expected) << t;
  }
  EXPECT_GT(zeros, 0);
}

TEST(Orient, ClassicFloatingPointTrap) {
  // Naive double evaluation of this configuration is known to return wrong signs.
  const Point2 q{12.0, 12.0}, r{24.0, 24.0};
  for (int i = 0; i < 64; ++i) {
    for (int j = 0; j < 64; ++j) {
      const Point2 p{0.5 + std::ldexp(static_cast<double>(i), -53), 0.5 + std::ldexp(static_cast<double>(j), -53)};
      ASSERT_EQ(orient(p, q, r), rational_orient(p, q, r));
    }
  }
}

TEST(ProperCrossing, Examples) {
  EXPECT_TRUE(proper_crossing(Segment{{0, 0}, {1, 1}}, Segment{{0, 1}, {1, 0}}));
  EXPECT_FALSE(proper_crossing(Segment{{0, 0}, {1, 1}}, Segment{{1, 1}, {2, 0}}));
  EXPECT_FALSE(proper_crossing(Segment{{0, 0}, {1, 0}}, Segment{{0, 1}, {1, 1}}));
}

TEST(ProperCrossing, TouchingAndCollinear) {
  // T-junction: endpoint of one lies in the interior of the other.
  EXPECT_FALSE(proper_crossing(Segment{{0, 0}, {2, 0}}, Segment{{1, 0}, {1, 1}}));
  // Collinear, touching at one point.
  EXPECT_FALSE(proper_crossing(Segment{{0, 0}, {1, 0}}, Segment{{1, 0}, {2, 0}}));
  // Collinear, disjoint.
  EXPECT_FALSE(proper_crossing(Segment{{0, 0}, {1, 0}}, Segment{{2, 0}, {3, 0}}));
  try {
    proper_crossing(Segment{{0, 0}, {2, 0}}, Segment{{1, 0}, {3, 0}});
    FAIL() << "overlap not reported";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateOverlap);
  }
  // Vertical collinear overlap.
  EXPECT_THROW(proper_crossing(Segment{{0, 0}, {0, 2}}, Segment{{0, 1}, {0, 3}}), Error);
}

TEST(ProperCrossing, SymmetricUnderArgumentOrder) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 5000; ++t) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)}, d{u(rng), u(rng)};
    const bool x = proper_crossing(a, b, c, d);
    ASSERT_EQ(x, proper_crossing(c, d, a, b));
    ASSERT_EQ(x, proper_crossing(b, a, d, c));
  }
}

TEST(ConvexHull, SinglePoint) {
  const std::vector<Point2> pts{{0, 0}};
  const auto hull = convex_hull(pts);
  ASSERT_EQ(hull.size(), 1u);
  EXPECT_EQ(hull[0].x, 0.0);
}

TEST(ConvexHull, SquareWithCenter) {
  const std::vector<Point2> pts{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}};
  const auto hull = convex_hull(pts);
  ASSERT_EQ(hull.size(), 4u);
  for (const auto& h : hull) EXPECT_FALSE(h.x == 1.0 && h.y == 1.0);
  // Counterclockwise from the lexicographically smallest vertex.
  EXPECT_EQ(hull[0].x, 0.0);
  EXPECT_EQ(hull[0].y, 0.0);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    EXPECT_EQ(orient(hull[i], hull[(i + 1) % 4], hull[(i + 2) % 4]), 1);
  }
}

TEST(ConvexHull, MatchesTriangleContainmentOracle) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point2> pts(8);
    for (auto& p : pts) p = {u(rng), u(rng)};
    // A point is a hull vertex iff no triangle of other points contains it.
    std::vector<bool> oracle(pts.size(), true);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      for (std::size_t a = 0; a < pts.size() && oracle[p]; ++a) {
        for (std::size_t b = a + 1; b < pts.size() && oracle[p]; ++b) {
          for (std::size_t c = b + 1; c < pts.size() && oracle[p]; ++c) {
            if (a == p || b == p || c == p) continue;
            if (strictly_inside_triangle(pts[a], pts[b], pts[c], pts[p])) oracle[p] = false;
          }
        }
      }
    }
    const auto hull = convex_hull(pts);
    std::vector<bool> got(pts.size(), false);
    for (const auto& h : hull) {
      for (std::size_t p = 0; p < pts.size(); ++p) {
        if (same_position(h, pts[p])) got[p] = true;
      }
    }
    ASSERT_EQ(got, oracle) << "trial " << trial;
  }
}

TEST(ConvexHull, StrictlyOutside) {
  const std::vector<Point2> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  const auto hull = convex_hull(sq);
  const std::span<const Point2> h(hull);
  EXPECT_FALSE(strictly_outside_hull(Point2{1, 1}, h));
  EXPECT_FALSE(strictly_outside_hull(Point2{1, 0}, h));  // on the boundary
  EXPECT_TRUE(strictly_outside_hull(Point2{3, 1}, h));
  const std::vector<Point2> seg{{0, 0}, {2, 0}};
  const auto hs = convex_hull(seg);
  EXPECT_FALSE(strictly_outside_hull(Point2{1, 0}, std::span<const Point2>(hs)));
  EXPECT_TRUE(strictly_outside_hull(Point2{3, 0}, std::span<const Point2>(hs)));
  EXPECT_TRUE(strictly_outside_hull(Point2{1, 1}, std::span<const Point2>(hs)));
}

TEST(DistPointRect, Examples) {
  const AxisRect r{1, 2, 0, 1};
  EXPECT_EQ(dist_point_rect(Point2{1.5, 0.5}, r), 0.0);
  EXPECT_EQ(dist_point_rect(Point2{0, 0.5}, r), 1.0);
  EXPECT_NEAR(dist_point_rect(Point2{0, -1}, r), std::sqrt(2.0), 1e-15);
}

TEST(AxisRect, SharedSides) {
  const AxisRect a{0, 1, 0, 1}, b{1, 2, 0, 1}, c{0, 2, 1, 2}, d{1, 2, 1, 2};
  EXPECT_TRUE(shares_full_side(a, b));
  EXPECT_TRUE(shares_full_side(b, a));
  EXPECT_TRUE(shares_full_side(bounding_union(a, b), c));
  EXPECT_FALSE(shares_full_side(a, d));  // corner contact only
  EXPECT_FALSE(shares_full_side(a, c));  // partial side
}

TEST(SegmentMeetsRectBoundary, Cases) {
  const AxisRect r{0, 1, 0, 1};
  EXPECT_FALSE(segment_meets_rect_boundary(Point2{0.2, 0.2}, Point2{0.8, 0.8}, r));
  EXPECT_TRUE(segment_meets_rect_boundary(Point2{0.5, 0.5}, Point2{1.5, 0.5}, r));
  EXPECT_TRUE(segment_meets_rect_boundary(Point2{-1, -1}, Point2{2, 2}, r));
  EXPECT_TRUE(segment_meets_rect_boundary(Point2{1, 0.5}, Point2{2, 0.5}, r));  // touches the side
  EXPECT_FALSE(segment_meets_rect_boundary(Point2{2, 0}, Point2{3, 1}, r));
}

TEST(GeneralPosition, DetectsCollinearAndCoincident) {
  std::vector<Point2> pts{{0, 0}, {1, 3}, {2, 1}, {4, 2}};
  EXPECT_FALSE(check_general_position(pts).ok);  // (0,0),(2,1),(4,2)
  pts = {{0, 0}, {1, 3}, {2, 1}, {5, 2}};
  EXPECT_TRUE(check_general_position(pts).ok);
  pts = {{0, 0}, {1, 3}, {0, 0}};
  EXPECT_FALSE(check_general_position(pts).ok);
  pts = {{0, 0}, {0, 0}};
  EXPECT_FALSE(check_general_position(pts).ok);
}

TEST(GeneralPosition, MatchesTripleScan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    // Small integer grid so collinear triples are common.
    std::uniform_int_distribution<int> coord(0, 6);
    std::vector<Point2> pts(7);
    for (auto& p : pts) p = {static_cast<double>(coord(rng)), static_cast<double>(coord(rng))};
    bool collinear = false;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        for (std::size_t c = b + 1; c < pts.size(); ++c) {
          if (rational_orient(pts[a], pts[b], pts[c]) == 0) collinear = true;
        }
      }
    }
    const auto check = check_general_position(pts);
    ASSERT_EQ(check.ok, !collinear) << trial;
    if (!check.ok) {
      const auto& w = *check.witness;
      EXPECT_EQ(rational_orient(pts[static_cast<std::size_t>(w[0])], pts[static_cast<std::size_t>(w[1])],
                                pts[static_cast<std::size_t>(w[2])]),
                0);
    }
  }
}
