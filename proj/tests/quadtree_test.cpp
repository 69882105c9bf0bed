#include <gtest/gtest.h>

#include "bichroma.hpp"

using namespace bichroma;

TEST(Normalize, ScalesToUnitSquareAtOne) {
  const auto p = with_sequential_ids({{0, 0, 0, 0}, {10, 10, 1, 0}, {3, 7, 0, 0}});
  const auto n = normalize(p);
  EXPECT_EQ(n.transform.side, 10.0);
  EXPECT_EQ(n.points[0].x, 1.0);
  EXPECT_EQ(n.points[1].x, 2.0);
  EXPECT_EQ(n.points[1].y, 2.0);
  EXPECT_DOUBLE_EQ(n.points[2].x, 1.3);
  const Point2 back = n.transform.invert(n.points[2].x, n.points[2].y);
  EXPECT_DOUBLE_EQ(back.x, 3.0);
  EXPECT_DOUBLE_EQ(back.y, 7.0);
}

TEST(Normalize, IdentityOnSpanningUnitSquare) {
  const auto p = with_sequential_ids({{1, 1, 0, 0}, {2, 2, 1, 0}, {1.25, 1.75, 0, 0}});
  const auto n = normalize(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(n.points[i].x, p[i].x);
    EXPECT_EQ(n.points[i].y, p[i].y);
  }
}

TEST(Normalize, TwoPoints) {
  const auto n = normalize(with_sequential_ids({{0, 0, 0, 0}, {4, 2, 1, 0}}));
  EXPECT_EQ(n.transform.side, 4.0);
  EXPECT_EQ(n.points[0].x, 1.0);
  EXPECT_EQ(n.points[0].y, 1.0);
  EXPECT_EQ(n.points[1].x, 2.0);
  EXPECT_EQ(n.points[1].y, 1.5);
}

TEST(Normalize, MinbstAtLeastOne) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = gen_uniform(20, seed);
    EXPECT_GE(min_colored_spanning_tree(normalize(inst.points).points).total_length, 1.0);
  }
}

TEST(Normalize, Coincident) {
  try {
    normalize(with_sequential_ids({{3, 3, 0, 0}, {3, 3, 1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateExtent);
  }
}

TEST(Shift, DiscreteAndContinuous) {
  const auto s = Shift::discrete(3, 5, 8);
  EXPECT_EQ(s.x, 0.375);
  EXPECT_EQ(s.y, 0.625);
  EXPECT_EQ(s.describe(), "grid:3,5");
  EXPECT_THROW(Shift::discrete(8, 0, 8), Error);
  const auto c1 = Shift::continuous(9), c2 = Shift::continuous(9);
  EXPECT_EQ(c1.x, c2.x);
  EXPECT_EQ(c1.y, c2.y);
  EXPECT_GE(c1.x, 0.0);
  EXPECT_LT(c1.x, 1.0);
  EXPECT_EQ(std::ldexp(c1.x, 40), std::floor(std::ldexp(c1.x, 40)));
  EXPECT_EQ(c1.describe(), "random:9");
  EXPECT_EQ(grid_resolution(1), 1u);
  EXPECT_EQ(grid_resolution(5), 8u);
  EXPECT_EQ(grid_resolution(8), 8u);
}

TEST(Quadtree, SinglePointRootIsMono) {
  const std::vector<ColoredPoint> p{{1.5, 1.5, 1, 0}};
  const auto qt = build_quadtree(p, Shift::discrete(0, 0, 1));
  ASSERT_EQ(qt.nodes.size(), 1u);
  EXPECT_EQ(qt.nodes[0].cls, NodeClass::Mono);
  EXPECT_EQ(qt.nodes[0].color, 1);
  EXPECT_TRUE(qt.nodes[0].is_leaf());
}

TEST(Quadtree, BichromaticLeafWithTwoPoints) {
  // Two points in the same smallest cell (side 1/2 for N = 2).
  const std::vector<ColoredPoint> p{{1.1, 1.1, 0, 0}, {1.2, 1.15, 1, 1}};
  const auto qt = build_quadtree(p, Shift::discrete(0, 0, 2));
  EXPECT_EQ(qt.leaf_of[0], qt.leaf_of[1]);
  const auto& leaf = qt.nodes[static_cast<std::size_t>(qt.leaf_of[0])];
  EXPECT_TRUE(leaf.is_leaf());
  EXPECT_EQ(leaf.cls, NodeClass::Bichromatic);
  EXPECT_EQ(leaf.point_ids.size(), 2u);
  EXPECT_EQ(leaf.level, qt.max_level);
}

TEST(Quadtree, LeavesPartitionPoints) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = gen_uniform(8, seed);
    const auto norm = normalize(inst.points);
    for (const Shift& shift : {Shift::discrete(0, 0, 8), Shift::discrete(seed % 8, (seed * 3) % 8, 8),
                               Shift::continuous(seed)}) {
      const auto qt = build_quadtree(norm.points, shift);
      EXPECT_LE(qt.depth(), 4);
      EXPECT_EQ(qt.max_level, 3);
      std::vector<int> owners(norm.points.size(), 0);
      for (std::size_t k = 0; k < qt.nodes.size(); ++k) {
        const auto& node = qt.nodes[k];
        if (!node.is_leaf()) {
          EXPECT_TRUE(node.point_ids.size() >= 2);
          continue;
        }
        for (int id : node.point_ids) {
          ++owners[static_cast<std::size_t>(id)];
          EXPECT_EQ(qt.leaf_of[static_cast<std::size_t>(id)], static_cast<int>(k));
        }
        // Direct geometric membership of every point (closed rect).
        for (const auto& p : norm.points) {
          const bool listed = std::find(node.point_ids.begin(), node.point_ids.end(), p.id) != node.point_ids.end();
          if (listed) {
            EXPECT_TRUE(node.rect.contains_closed(p));
          }
        }
        // Side 2^-level.
        EXPECT_EQ(node.rect.x_hi - node.rect.x_lo, std::ldexp(1.0, -node.level));
      }
      for (int c : owners) EXPECT_EQ(c, 1);
    }
  }
}

TEST(Quadtree, ChildrenTileParent) {
  const auto inst = gen_uniform(64, 4);
  const auto norm = normalize(inst.points);
  const auto qt = build_quadtree(norm.points, Shift::continuous(77));
  for (const auto& node : qt.nodes) {
    if (node.is_leaf()) continue;
    const double mx = (node.rect.x_lo + node.rect.x_hi) / 2, my = (node.rect.y_lo + node.rect.y_hi) / 2;
    const auto& sw = qt.nodes[static_cast<std::size_t>(node.children[0])].rect;
    const auto& ne = qt.nodes[static_cast<std::size_t>(node.children[3])].rect;
    EXPECT_EQ(sw.x_lo, node.rect.x_lo);
    EXPECT_EQ(sw.x_hi, mx);
    EXPECT_EQ(sw.y_hi, my);
    EXPECT_EQ(ne.x_lo, mx);
    EXPECT_EQ(ne.y_hi, node.rect.y_hi);
    std::size_t total = 0;
    for (int c : node.children) total += qt.nodes[static_cast<std::size_t>(c)].point_ids.size();
    EXPECT_EQ(total, node.point_ids.size());
    EXPECT_EQ(qt.nodes[static_cast<std::size_t>(node.children[0])].level, node.level + 1);
  }
}

TEST(Quadtree, PointsOnFarBoundaryWithZeroShift) {
  // Normalized extremes sit at coordinate 2, the far side of the shift-0 root.
  const auto norm = normalize(with_sequential_ids({{0, 0, 0, 0}, {1, 1, 1, 0}, {0.3, 0.9, 0, 0}, {0.8, 0.2, 1, 0}}));
  const auto qt = build_quadtree(norm.points, Shift::discrete(0, 0, 4));
  for (int leaf : qt.leaf_of) EXPECT_GE(leaf, 0);
}
