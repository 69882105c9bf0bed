#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bichroma/geometry.hpp"
#include "bichroma/tree.hpp"

namespace bichroma {

inline constexpr Color kRed = 0;
inline constexpr Color kBlue = 1;

struct InstanceMetadata {
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> generator;
};

/// A point set as stored on disk.
struct InstanceFile {
  std::vector<ColoredPoint> points;
  InstanceMetadata metadata;
};

namespace detail {

// Portable uniform draws: the standard distributions are implementation-defined.
inline double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace detail

/// n points i.i.d. uniform in the unit square; colors assigned round-robin and
/// then shuffled. Redrawn with the next sub-seed until in general position.
inline InstanceFile gen_uniform(std::size_t n, std::uint64_t seed, int colors = 2) {
  if (n < 2) throw Error(ErrorKind::BadSize, "uniform instances need n >= 2");
  if (colors < 2) throw Error(ErrorKind::BadSize, "uniform instances need at least two colors");
  for (std::uint64_t sub = 0;; ++sub) {
    std::seed_seq seq{seed, sub};
    std::mt19937_64 rng(seq);
    InstanceFile inst;
    inst.points.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      inst.points[i].x = detail::unit_double(rng);
      inst.points[i].y = detail::unit_double(rng);
      inst.points[i].id = static_cast<int>(i);
    }
    std::vector<Color> palette(n);
    for (std::size_t i = 0; i < n; ++i) palette[i] = static_cast<Color>(i % static_cast<std::size_t>(colors));
    for (std::size_t i = n - 1; i > 0; --i) std::swap(palette[i], palette[detail::bounded(rng, i + 1)]);
    for (std::size_t i = 0; i < n; ++i) inst.points[i].color = palette[i];
    if (!check_general_position(inst.points).ok) continue;
    inst.metadata.name = "uniform-n" + std::to_string(n) + "-s" + std::to_string(seed);
    inst.metadata.seed = seed;
    inst.metadata.generator = "uniform";
    return inst;
  }
}

/// Crossing gadget geometry. Two clusters sit high on the left (blue) and
/// right (red); a close red/blue pair sits low in the middle with red on the
/// right. Every cluster point's nearest opposite-colored point is the low
/// point on the far side, so the minimum tree is the short middle edge plus
/// two fans whose edges pairwise cross.
struct GadgetConstants {
  static constexpr double kClusterX = 1.0;
  static constexpr double kClusterY = 1.0;
  static constexpr double kClusterRadius = 0.02;
  static constexpr double kArcSpan = 1.2;      // radians covered by a cluster's arc
  static constexpr double kBottomHalfGap = 0.1;
  static constexpr double kBottomLift = 0.003;  // breaks symmetry between the low points
};

namespace detail {

// k points on a small circular arc (no three of them collinear).
inline void place_cluster(std::vector<ColoredPoint>& out, std::size_t k, double cx, double cy, Color color,
                          double phase) {
  const double r = GadgetConstants::kClusterRadius;
  for (std::size_t j = 0; j < k; ++j) {
    const double t = k == 1 ? 0.0 : static_cast<double>(j) / static_cast<double>(k - 1) - 0.5;
    const double angle = phase + GadgetConstants::kArcSpan * t;
    out.push_back({cx + r * std::cos(angle), cy + r * std::sin(angle), color, 0});
  }
}

inline InstanceFile crossing_gadget(std::size_t blue_cluster, std::size_t red_cluster, const std::string& kind) {
  const double gap = GadgetConstants::kBottomHalfGap;
  for (int attempt = 0;; ++attempt) {
    // Rotate the arcs slightly if an accidental collinearity shows up.
    const double tweak = 0.05 * attempt;
    InstanceFile inst;
    inst.points.push_back({gap, GadgetConstants::kBottomLift, kRed, 0});
    inst.points.push_back({-gap, 0.0, kBlue, 0});
    place_cluster(inst.points, blue_cluster, -GadgetConstants::kClusterX, GadgetConstants::kClusterY, kBlue,
                  0.35 + tweak);
    place_cluster(inst.points, red_cluster, GadgetConstants::kClusterX, GadgetConstants::kClusterY, kRed,
                  2.1 + tweak);
    inst.points = with_sequential_ids(std::move(inst.points));
    if (!check_general_position(inst.points).ok) continue;
    inst.metadata.name = kind + "-n" + std::to_string(inst.points.size());
    inst.metadata.generator = kind;
    return inst;
  }
}

}  // namespace detail

/// Point set whose minimum bichromatic spanning tree has
/// (floor(n/2)-1)(ceil(n/2)-1) crossings.
inline InstanceFile gen_max_crossing_gadget(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::BadSize, "crossing gadget needs n >= 4");
  return detail::crossing_gadget(n / 2 - 1, (n + 1) / 2 - 1, "max-crossing");
}

/// Point set whose minimum bichromatic spanning tree has an edge crossed by n-3 others.
inline InstanceFile gen_per_edge_gadget(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::BadSize, "per-edge gadget needs n >= 4");
  return detail::crossing_gadget(1, n - 3, "per-edge");
}

}  // namespace bichroma
