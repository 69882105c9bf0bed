#include <gtest/gtest.h>

#include <random>

#include "bichroma.hpp"

using namespace bichroma;

namespace {

std::vector<ColoredPoint> random_points(std::uint64_t seed, std::size_t n, int colors = 2) {
  return gen_uniform(n, seed, colors).points;
}

// Triangle q-a-b is clear when no vertex lies strictly inside, no edge
// properly crosses a side, and no edge leaves a or b into the open angle of
// the triangle at that corner.
bool triangle_clear(const ColoredPoint& q, const ColoredPoint& a, const ColoredPoint& b, const ColoredTree& tree) {
  const IdIndex index(tree.points);
  for (const auto& v : tree.points) {
    if (v.id == a.id || v.id == b.id) continue;
    if (strictly_inside_triangle(q, a, b, v)) return false;
  }
  auto into_corner = [](const ColoredPoint& corner, const ColoredPoint& s1, const ColoredPoint& s2,
                        const ColoredPoint& w) {
    return orient(corner, s1, w) == orient(corner, s1, s2) && orient(corner, s2, w) == orient(corner, s2, s1);
  };
  for (const Edge& e : tree.edges) {
    const auto& u = index[e.u];
    const auto& w = index[e.v];
    if ((u.id == a.id && w.id == b.id) || (u.id == b.id && w.id == a.id)) continue;
    if (proper_crossing(q, a, u, w) || proper_crossing(q, b, u, w) || proper_crossing(a, b, u, w)) return false;
    for (const auto& [end, other] : {std::pair{u, w}, std::pair{w, u}}) {
      if (end.id == a.id && other.id != b.id && into_corner(a, q, b, other)) return false;
      if (end.id == b.id && other.id != a.id && into_corner(b, q, a, other)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(ConeStar, OneRedFourBlue) {
  std::vector<ColoredPoint> p{{0, 0, 0, 0}, {1, 0.1, 1, 0}, {0.3, 1, 1, 0}, {-1, 0.4, 1, 0}, {0.2, -1, 1, 0}};
  p = with_sequential_ids(p);
  const auto t = cone_star_tree(p);
  ASSERT_EQ(t.edges.size(), 4u);
  for (const Edge& e : t.edges) EXPECT_TRUE(e.u == 0 || e.v == 0);
  EXPECT_TRUE(is_plane(t));
}

TEST(ConeStar, TwoPoints) {
  const auto p = with_sequential_ids({{0, 0, 0, 0}, {1, 0, 1, 0}});
  const auto t = cone_star_tree(p);
  ASSERT_EQ(t.edges.size(), 1u);
  EXPECT_EQ(t.total_length, 1.0);
}

TEST(ConeStar, PlaneSpanningProperOnRandomSets) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 2 + seed % 40;
    const int colors = seed % 4 == 0 && n >= 3 ? 3 : 2;
    const auto p = random_points(seed, n, colors);
    const auto t = cone_star_tree(p);
    ASSERT_TRUE(is_spanning_tree(t)) << seed;
    ASSERT_TRUE(is_properly_colored(t)) << seed;
    ASSERT_TRUE(is_plane(t)) << seed;
  }
}

TEST(ConeStar, Monochromatic) {
  const auto p = with_sequential_ids({{0, 0, 0, 0}, {1, 0, 0, 0}});
  EXPECT_THROW(cone_star_tree(p), Error);
}

TEST(VisibleEdge, SingleEdge) {
  const auto tree = make_tree(with_sequential_ids({{0, 0, 0, 0}, {1, 0, 1, 0}}), {{0, 1}});
  const ColoredPoint q{0, 2, 1, 2};
  const auto seen = visible_edge(q, tree);
  EXPECT_EQ(seen.edge.lo(), 0);
  EXPECT_EQ(seen.edge.hi(), 1);
  EXPECT_EQ(seen.attach, 0);
  const ColoredPoint r{0, 2, 0, 2};
  EXPECT_EQ(visible_edge(r, tree).attach, 1);
}

TEST(VisibleEdge, PrefersNearerAttachEndpoint) {
  // Path red(0,0) - blue(2,0) - red(4,0.5); q blue above, both edges visible.
  const auto tree = make_tree(with_sequential_ids({{0, 0, 0, 0}, {2, 0, 1, 0}, {4, 0.5, 0, 0}}), {{0, 1}, {1, 2}});
  const ColoredPoint q{3.5, 3, 1, 3};
  const IdIndex index(tree.points);
  ASSERT_TRUE(triangle_clear(q, index[0], index[1], tree));
  ASSERT_TRUE(triangle_clear(q, index[1], index[2], tree));
  const auto seen = visible_edge(q, tree);
  // dist to red(4,0.5) < dist to red(0,0).
  EXPECT_EQ(seen.attach, 2);
  EXPECT_EQ(seen.edge.lo(), 1);
  EXPECT_EQ(seen.edge.hi(), 2);
}

TEST(VisibleEdge, InsideHull) {
  const auto tree = make_tree(with_sequential_ids({{0, 0, 0, 0}, {2, 0, 1, 0}, {1, 2, 0, 0}}), {{0, 1}, {1, 2}});
  const ColoredPoint q{1, 2.0 / 3.0, 1, 3};
  try {
    visible_edge(q, tree);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsideHull);
  }
}

TEST(VisibleEdge, ResultIsClearOnRandomTrees) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto p = random_points(seed, 3 + seed % 20);
    const auto tree = cone_star_tree(p);
    const double a = ang(rng);
    const ColoredPoint q{0.5 + 2.0 * std::cos(a), 0.5 + 2.0 * std::sin(a), static_cast<Color>(seed % 2),
                         static_cast<int>(p.size())};
    const auto seen = visible_edge(q, tree);
    const IdIndex index(tree.points);
    ASSERT_TRUE(triangle_clear(q, index[seen.edge.u], index[seen.edge.v], tree)) << seed;
    ASSERT_NE(index[seen.attach].color, q.color);
    // Nothing nearer among clear edges.
    for (const Edge& e : tree.edges) {
      if (!triangle_clear(q, index[e.u], index[e.v], tree)) continue;
      for (int end : {e.u, e.v}) {
        if (index[end].color == q.color) continue;
        ASSERT_GE(dist2(q, index[end]), dist2(q, index[seen.attach])) << seed;
      }
    }
  }
}

TEST(AttachPoint, BuildsPlaneTrees) {
  auto tree = make_tree(with_sequential_ids({{0, 0, 0, 0}, {1, 0, 1, 0}}), {{0, 1}});
  tree = attach_point({0.5, 1, 1, 2}, tree);
  EXPECT_EQ(tree.points.size(), 3u);
  EXPECT_TRUE(is_spanning_tree(tree));
  EXPECT_TRUE(is_plane(tree));
  EXPECT_TRUE(is_properly_colored(tree));

  // Mono points attached in increasing distance from the tree; every
  // intermediate stays plane.
  const std::vector<ColoredPoint> mono{{2, 0.3, 1, 3}, {-1.2, 0.2, 1, 4}, {3, -0.4, 1, 5}, {0.4, -2, 1, 6}, {4.1, 2.2, 1, 7}};
  for (const auto& q : mono) {
    tree = attach_point(q, tree);
    ASSERT_TRUE(is_plane(tree));
    ASSERT_TRUE(is_spanning_tree(tree));
    ASSERT_TRUE(is_properly_colored(tree));
  }
}

TEST(AttachPoint, ThreeColors) {
  const auto tree = make_tree(with_sequential_ids({{0, 0, 0, 0}, {1, 0, 2, 0}}), {{0, 1}});
  EXPECT_EQ(visible_edge({0.5, 1, 0, 2}, tree).attach, 1);
  EXPECT_EQ(visible_edge({0.6, 1, 2, 2}, tree).attach, 0);
  // Color 1 differs from both endpoints; the nearer one wins.
  EXPECT_EQ(visible_edge({0.9, 1, 1, 2}, tree).attach, 1);
  const auto grown = attach_point({0.9, 1, 1, 2}, tree);
  EXPECT_TRUE(is_plane(grown));
  EXPECT_TRUE(is_properly_colored(grown));
}

TEST(MergeParties, MonoMono) {
  const AxisRect left{0, 1, 0, 1}, right{1, 2, 0, 1};
  const auto a = make_party(left, {{0.2, 0.5, 0, 0}});
  const auto b = make_party(right, {{1.7, 0.5, 1, 1}});
  MergeEvent ev;
  const auto m = merge_parties(a, b, &ev);
  EXPECT_EQ(ev.kind, MergeCase::MonoMono);
  EXPECT_EQ(m.kind, PartyKind::Tree);
  ASSERT_EQ(m.edges.size(), 1u);
  EXPECT_EQ(m.rect.x_lo, 0);
  EXPECT_EQ(m.rect.x_hi, 2);

  const auto same = merge_parties(a, make_party(right, {{1.7, 0.5, 0, 1}}), &ev);
  EXPECT_EQ(ev.kind, MergeCase::MonoUnion);
  EXPECT_EQ(same.kind, PartyKind::Mono);
  EXPECT_EQ(same.points.size(), 2u);
}

TEST(MergeParties, EmptyPassThrough) {
  const AxisRect left{0, 1, 0, 1}, right{1, 2, 0, 1};
  const auto a = make_party(left, {});
  const auto b = make_party(right, {{1.2, 0.3, 0, 0}, {1.8, 0.6, 1, 1}});
  MergeEvent ev;
  const auto m = merge_parties(a, b, &ev);
  EXPECT_EQ(ev.kind, MergeCase::EmptyPassThrough);
  EXPECT_EQ(m.kind, PartyKind::Tree);
  EXPECT_EQ(m.edges.size(), 1u);
  EXPECT_EQ(m.rect.x_lo, 0);
}

TEST(MergeParties, TreeTree) {
  const AxisRect left{0, 1, 0, 1}, right{1, 2, 0, 1};
  const auto a = make_party(left, {{0.2, 0.2, 0, 0}, {0.7, 0.8, 1, 1}});
  const auto b = make_party(right, {{1.3, 0.3, 0, 2}, {1.9, 0.6, 1, 3}});
  MergeEvent ev;
  const auto m = merge_parties(a, b, &ev);
  EXPECT_EQ(ev.kind, MergeCase::TreeTree);
  EXPECT_EQ(ev.new_edges, 1u);
  const auto tree = make_tree(m.points, m.edges);
  EXPECT_EQ(tree.edges.size(), 3u);
  EXPECT_TRUE(is_spanning_tree(tree));
  EXPECT_TRUE(is_plane(tree));
  EXPECT_TRUE(is_properly_colored(tree));
}

TEST(MergeParties, TreeMonoAttachesInDistanceOrder) {
  const AxisRect bottom{0, 2, 0, 1}, top{0, 2, 1, 2};
  const auto t = make_party(bottom, {{0.3, 0.3, 0, 0}, {1.6, 0.5, 1, 1}});
  const auto mono = make_party(top, {{1.0, 1.9, 0, 2}, {0.4, 1.1, 0, 3}, {1.5, 1.5, 0, 4}});
  MergeEvent ev;
  const auto m = merge_parties(mono, t, &ev);
  EXPECT_EQ(ev.kind, MergeCase::TreeMono);
  EXPECT_EQ(ev.new_edges, 3u);
  // Vertices appended in attach order: 3 (0.1 away), 4 (0.5), 2 (0.9).
  ASSERT_EQ(m.points.size(), 5u);
  EXPECT_EQ(m.points[2].id, 3);
  EXPECT_EQ(m.points[3].id, 4);
  EXPECT_EQ(m.points[4].id, 2);
  // Replaying the attachments reproduces every intermediate as plane.
  auto tree = make_tree(t.points, t.edges);
  for (std::size_t k = 2; k < 5; ++k) {
    tree = attach_point(m.points[k], tree);
    ASSERT_TRUE(is_plane(tree));
  }
  const auto merged = make_tree(m.points, m.edges);
  EXPECT_TRUE(is_spanning_tree(merged));
  EXPECT_TRUE(is_plane(merged));
  EXPECT_TRUE(is_properly_colored(merged));
}

TEST(MergeParties, RejectsRectsWithoutSharedSide) {
  const auto a = make_party({0, 1, 0, 1}, {{0.5, 0.5, 0, 0}});
  const auto b = make_party({1, 2, 1, 2}, {{1.5, 1.5, 1, 1}});
  try {
    merge_parties(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GeometryViolation);
  }
}
