#pragma once

// Constructive primitives for plane properly colored trees: the cone-star
// tree on a point set, attaching an outside point through a visible edge,
// and merging the partial solutions of two adjacent rectangles.

#include <algorithm>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "bichroma/tree.hpp"

namespace bichroma {

/// Cone-star tree: a plane properly colored spanning tree of `points`.
///
/// The apex is the lexicographically smallest point, which is a hull vertex,
/// so every cone between consecutive spokes is convex. The apex is joined to
/// every point of another color (the spokes); each point of the apex color is
/// joined to the spoke endpoint bounding its cone counterclockwise, or to the
/// last spoke when no spoke follows it.
inline std::vector<Edge> cone_star_edges(std::span<const ColoredPoint> points) {
  require_colorable(points);
  const auto apex_it = std::min_element(points.begin(), points.end(), [](const auto& a, const auto& b) {
    return std::tie(a.x, a.y, a.id) < std::tie(b.x, b.y, b.id);
  });
  const ColoredPoint apex = *apex_it;
  std::vector<ColoredPoint> rest;
  rest.reserve(points.size() - 1);
  for (const auto& p : points) {
    if (p.id != apex.id) rest.push_back(p);
  }
  // All other points lie in the half-plane right of the apex (angles in
  // (-pi/2, pi/2]), so orientation is a strict weak order on them.
  std::sort(rest.begin(), rest.end(), [&](const ColoredPoint& a, const ColoredPoint& b) {
    const int o = orient(apex, a, b);
    if (o != 0) return o > 0;
    return a.id < b.id;
  });

  std::vector<Edge> edges;
  edges.reserve(points.size() - 1);
  std::vector<int> next_spoke(rest.size(), -1);
  int upcoming = -1;
  for (std::size_t k = rest.size(); k-- > 0;) {
    if (rest[k].color != apex.color) upcoming = static_cast<int>(k);
    next_spoke[k] = upcoming;
  }
  int last_spoke = -1;
  for (std::size_t k = 0; k < rest.size(); ++k) {
    if (rest[k].color != apex.color) last_spoke = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < rest.size(); ++k) {
    if (rest[k].color != apex.color) {
      edges.push_back({apex.id, rest[k].id});
    } else {
      const int target = next_spoke[k] >= 0 ? next_spoke[k] : last_spoke;
      edges.push_back({rest[k].id, rest[static_cast<std::size_t>(target)].id});
    }
  }
  return edges;
}

inline ColoredTree cone_star_tree(std::span<const ColoredPoint> points) {
  auto edges = cone_star_edges(points);
  return make_tree(std::vector<ColoredPoint>(points.begin(), points.end()), std::move(edges));
}

inline ColoredTree cone_star_tree(const std::vector<ColoredPoint>& points) {
  return cone_star_tree(std::span<const ColoredPoint>(points));
}

/// Result of a visible-edge query: the seen edge and the endpoint q joins.
struct VisibleEdge {
  Edge edge;
  int attach = 0;
};

namespace detail {

// Plane tree stored with dense local indices for repeated geometric queries.
class LocalTree {
 public:
  LocalTree() = default;
  LocalTree(std::span<const ColoredPoint> verts, std::span<const Edge> edges) {
    for (const auto& p : verts) add_vertex(p);
    for (const Edge& e : edges) add_edge(e);
  }

  void add_vertex(const ColoredPoint& p) {
    local_.emplace(p.id, verts_.size());
    verts_.push_back(p);
  }
  void add_edge(const Edge& e) { edges_.push_back({local_.at(e.u), local_.at(e.v)}); }

  const std::vector<ColoredPoint>& vertices() const { return verts_; }
  std::size_t edge_count() const { return edges_.size(); }
  const ColoredPoint& vertex(std::size_t i) const { return verts_[i]; }
  std::pair<std::size_t, std::size_t> edge(std::size_t i) const { return edges_[i]; }

  std::vector<Edge> id_edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (auto [a, b] : edges_) out.push_back({verts_[a].id, verts_[b].id});
    return out;
  }

  // Triangle q-a-b has interior disjoint from every vertex and edge.
  bool sees(const ColoredPoint& q, std::size_t a, std::size_t b) const {
    const ColoredPoint& pa = verts_[a];
    const ColoredPoint& pb = verts_[b];
    for (std::size_t v = 0; v < verts_.size(); ++v) {
      if (v == a || v == b) continue;
      if (strictly_inside_triangle(q, pa, pb, verts_[v])) return false;
    }
    // An edge entering the open triangle without a vertex inside it must
    // properly cross side q-a or q-b (it cannot cross a-b in a plane tree).
    for (auto [u, w] : edges_) {
      if (proper_crossing(q, pa, verts_[u], verts_[w]) || proper_crossing(q, pb, verts_[u], verts_[w])) {
        return false;
      }
    }
    return true;
  }

  // The seen edge whose differently colored endpoint is nearest to q.
  // Naive scan: candidates in order of attach distance, first seen one wins.
  VisibleEdge visible_edge(const ColoredPoint& q) const {
    const auto hull = convex_hull(std::span<const ColoredPoint>(verts_));
    if (!strictly_outside_hull(q, std::span<const ColoredPoint>(hull))) {
      throw Error(ErrorKind::InsideHull, "point " + std::to_string(q.id) + " is not outside the tree's hull");
    }
    struct Candidate {
      double d2;
      int lo, hi;
      std::size_t edge;
      std::size_t attach;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto [a, b] = edges_[i];
      std::optional<std::size_t> attach;
      for (std::size_t end : {a, b}) {
        if (verts_[end].color == q.color) continue;
        if (!attach || std::pair(dist2(q, verts_[end]), verts_[end].id) <
                           std::pair(dist2(q, verts_[*attach]), verts_[*attach].id)) {
          attach = end;
        }
      }
      if (!attach) continue;
      const int ia = verts_[a].id, ib = verts_[b].id;
      candidates.push_back({dist2(q, verts_[*attach]), std::min(ia, ib), std::max(ia, ib), i, *attach});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
      return std::tie(x.d2, x.lo, x.hi) < std::tie(y.d2, y.lo, y.hi);
    });
    for (const Candidate& c : candidates) {
      const auto [a, b] = edges_[c.edge];
      if (sees(q, a, b)) return {{verts_[a].id, verts_[b].id}, verts_[c.attach].id};
    }
    throw Error(ErrorKind::NoVisibleEdge,
                "point " + std::to_string(q.id) + " sees no edge with an endpoint of another color");
  }

  // Attaches q via its visible edge; returns the new edge.
  Edge attach(const ColoredPoint& q) {
    const VisibleEdge seen = visible_edge(q);
    add_vertex(q);
    const Edge e{q.id, seen.attach};
    add_edge(e);
    return e;
  }

  bool crosses_any(const ColoredPoint& a, const ColoredPoint& b) const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](auto e) { return proper_crossing(a, b, verts_[e.first], verts_[e.second]); });
  }

 private:
  std::vector<ColoredPoint> verts_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::unordered_map<int, std::size_t> local_;
};

}  // namespace detail

/// Visibility query. Requires q strictly outside the convex
/// hull of the tree's vertices (InsideHull otherwise). Among the edges q
/// sees, returns the one whose differently colored endpoint is nearest to q;
/// ties by (min id, max id).
inline VisibleEdge visible_edge(const ColoredPoint& q, const ColoredTree& tree) {
  return detail::LocalTree(tree.points, tree.edges).visible_edge(q);
}

/// Adds q to the tree with a noncrossing properly colored edge.
inline ColoredTree attach_point(const ColoredPoint& q, const ColoredTree& tree) {
  const VisibleEdge seen = visible_edge(q, tree);
  ColoredTree out = tree;
  out.points.push_back(q);
  out.edges.push_back({q.id, seen.attach});
  out.total_length = tree_length(out);
  return out;
}

enum class PartyKind { Empty, Mono, Tree };

/// Partial solution owned by one square or rectangle of the subdivision.
struct MergeParty {
  PartyKind kind = PartyKind::Empty;
  Color color = 0;  // meaningful for Mono
  AxisRect rect;
  std::vector<ColoredPoint> points;
  std::vector<Edge> edges;  // nonempty only for Tree
};

/// Classifies points owned by `rect`: Empty, Mono(color), or a cone-star Tree.
inline MergeParty make_party(const AxisRect& rect, std::vector<ColoredPoint> points) {
  MergeParty party;
  party.rect = rect;
  if (points.empty()) return party;
  if (distinct_colors(points) == 1) {
    party.kind = PartyKind::Mono;
    party.color = points.front().color;
    party.points = std::move(points);
    return party;
  }
  party.kind = PartyKind::Tree;
  party.edges = cone_star_edges(points);
  party.points = std::move(points);
  return party;
}

/// How a merge was resolved. Case numbers follow the algorithm's three
/// merge rules; the rest are pass-through combinations.
enum class MergeCase {
  EmptyPassThrough,
  MonoUnion,
  MonoMono,    // case 1: union is multichromatic, fresh cone-star tree
  TreeTree,    // case 2: one bridge edge
  TreeMono,    // case 3: mono points attached one at a time
};

struct MergeEvent {
  MergeCase kind = MergeCase::EmptyPassThrough;
  AxisRect rect_a;
  AxisRect rect_b;
  std::size_t new_edges = 0;
};

namespace detail {

inline MergeParty merge_tree_tree(const MergeParty& a, const MergeParty& b) {
  // The point nearest to the other party's rectangle, over both trees.
  struct Pick {
    double d;
    int id;
    bool from_a;
    std::size_t index;
  };
  std::optional<Pick> best;
  auto scan = [&](const MergeParty& self, const AxisRect& other, bool from_a) {
    for (std::size_t i = 0; i < self.points.size(); ++i) {
      const Pick cand{dist_point_rect(self.points[i], other), self.points[i].id, from_a, i};
      if (!best || std::tie(cand.d, cand.id) < std::tie(best->d, best->id)) best = cand;
    }
  };
  scan(a, b.rect, true);
  scan(b, a.rect, false);
  const MergeParty& own = best->from_a ? a : b;
  const MergeParty& other = best->from_a ? b : a;
  const ColoredPoint q = own.points[best->index];

  LocalTree target(other.points, other.edges);
  const VisibleEdge seen = target.visible_edge(q);
  const LocalTree source(own.points, own.edges);
  const ColoredPoint& far_end = *std::find_if(other.points.begin(), other.points.end(),
                                              [&](const ColoredPoint& p) { return p.id == seen.attach; });
  // Distance to the other rectangle is affine across q's own rectangle, so
  // the bridge cannot reach q's tree; verify rather than trust.
  if (source.crosses_any(q, far_end)) {
    throw Error(ErrorKind::InternalError, "bridge edge crosses the tree it starts from");
  }
  MergeParty out;
  out.kind = PartyKind::Tree;
  out.rect = bounding_union(a.rect, b.rect);
  out.points = a.points;
  out.points.insert(out.points.end(), b.points.begin(), b.points.end());
  out.edges = a.edges;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  out.edges.push_back({q.id, seen.attach});
  return out;
}

inline MergeParty merge_tree_mono(const MergeParty& tree, const MergeParty& mono) {
  std::vector<ColoredPoint> order = mono.points;
  std::sort(order.begin(), order.end(), [&](const ColoredPoint& p, const ColoredPoint& q) {
    const double dp = dist_point_rect(p, tree.rect), dq = dist_point_rect(q, tree.rect);
    return std::tie(dp, p.id) < std::tie(dq, q.id);
  });
  LocalTree local(tree.points, tree.edges);
  for (const ColoredPoint& q : order) local.attach(q);
  MergeParty out;
  out.kind = PartyKind::Tree;
  out.rect = bounding_union(tree.rect, mono.rect);
  out.points = local.vertices();
  out.edges = local.id_edges();
  return out;
}

}  // namespace detail

/// Merges the partial solutions of two rectangles sharing a full side.
inline MergeParty merge_parties(const MergeParty& a, const MergeParty& b, MergeEvent* event = nullptr) {
  if (!shares_full_side(a.rect, b.rect)) {
    throw Error(ErrorKind::GeometryViolation, "merge parties must share a full side");
  }
  MergeEvent ev{MergeCase::EmptyPassThrough, a.rect, b.rect, 0};
  MergeParty out;
  const std::size_t before = a.edges.size() + b.edges.size();
  if (a.kind == PartyKind::Empty || b.kind == PartyKind::Empty) {
    out = a.kind == PartyKind::Empty ? b : a;
    out.rect = bounding_union(a.rect, b.rect);
  } else if (a.kind == PartyKind::Mono && b.kind == PartyKind::Mono) {
    std::vector<ColoredPoint> all = a.points;
    all.insert(all.end(), b.points.begin(), b.points.end());
    if (a.color == b.color) {
      ev.kind = MergeCase::MonoUnion;
      out = a;
      out.points = std::move(all);
      out.rect = bounding_union(a.rect, b.rect);
    } else {
      ev.kind = MergeCase::MonoMono;
      out = make_party(bounding_union(a.rect, b.rect), std::move(all));
    }
  } else if (a.kind == PartyKind::Tree && b.kind == PartyKind::Tree) {
    ev.kind = MergeCase::TreeTree;
    out = detail::merge_tree_tree(a, b);
  } else {
    ev.kind = MergeCase::TreeMono;
    out = a.kind == PartyKind::Tree ? detail::merge_tree_mono(a, b) : detail::merge_tree_mono(b, a);
  }
  ev.new_edges = out.edges.size() - before;
  if (event) *event = ev;
  return out;
}

}  // namespace bichroma
