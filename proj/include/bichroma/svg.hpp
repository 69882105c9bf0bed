#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "bichroma/crossing.hpp"
#include "bichroma/io.hpp"

namespace bichroma {

struct SvgOptions {
  double canvas = 600.0;
  double margin = 24.0;
  bool mark_crossings = true;
};

namespace detail {

inline std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Okabe-Ito colors; readable under the common color-vision deficiencies.
inline const char* palette_color(Color c) {
  static constexpr const char* colors[] = {"#D55E00", "#0072B2", "#009E73", "#CC79A7", "#E69F00", "#56B4E9"};
  return colors[static_cast<std::size_t>(c) % 6];
}

}  // namespace detail

/// Static drawing of a point set and tree. Color 0 as circles, color 1 as
/// squares, further colors as diamonds; crossings marked with small rings.
inline std::string render_svg(const std::vector<ColoredPoint>& points, const ColoredTree* tree,
                              const SvgOptions& opt = {}) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!points.empty()) {
    min_x = max_x = points[0].x;
    min_y = max_y = points[0].y;
    for (const auto& p : points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-300});
  const double scale = (opt.canvas - 2 * opt.margin) / span;
  auto sx = [&](double x) { return detail::fixed3(opt.margin + (x - min_x) * scale); };
  auto sy = [&](double y) { return detail::fixed3(opt.canvas - opt.margin - (y - min_y) * scale); };

  const std::string size = detail::fixed3(opt.canvas);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size + "\" viewBox=\"0 0 " +
         size + " " + size + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (tree) {
    const IdIndex index(points);
    out += "<g stroke=\"#444444\" stroke-width=\"1.5\">\n";
    for (const Edge& e : tree->edges) {
      const auto& a = index[e.u];
      const auto& b = index[e.v];
      out += "<line x1=\"" + sx(a.x) + "\" y1=\"" + sy(a.y) + "\" x2=\"" + sx(b.x) + "\" y2=\"" + sy(b.y) + "\"/>\n";
    }
    out += "</g>\n";
    if (opt.mark_crossings) {
      const auto pairs = crossing_pairs(points, tree->edges);
      if (!pairs.empty()) {
        out += "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"1\">\n";
        for (const auto& [i, j] : pairs) {
          const auto& a = index[tree->edges[i].u];
          const auto& b = index[tree->edges[i].v];
          const auto& c = index[tree->edges[j].u];
          const auto& d = index[tree->edges[j].v];
          const double den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
          const double t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
          out += "<circle cx=\"" + sx(a.x + t * (b.x - a.x)) + "\" cy=\"" + sy(a.y + t * (b.y - a.y)) +
                 "\" r=\"4.000\"/>\n";
        }
        out += "</g>\n";
      }
    }
  }
  out += "<g>\n";
  for (const auto& p : points) {
    const char* fill = detail::palette_color(p.color);
    if (p.color == 0) {
      out += "<circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"5.000\" fill=\"" + fill + "\"/>\n";
    } else if (p.color == 1) {
      out += "<rect x=\"" + detail::fixed3(opt.margin + (p.x - min_x) * scale - 5) + "\" y=\"" +
             detail::fixed3(opt.canvas - opt.margin - (p.y - min_y) * scale - 5) +
             "\" width=\"10.000\" height=\"10.000\" fill=\"" + fill + "\"/>\n";
    } else {
      const double cx = opt.margin + (p.x - min_x) * scale;
      const double cy = opt.canvas - opt.margin - (p.y - min_y) * scale;
      out += "<polygon points=\"" + detail::fixed3(cx) + "," + detail::fixed3(cy - 6) + " " + detail::fixed3(cx + 6) +
             "," + detail::fixed3(cy) + " " + detail::fixed3(cx) + "," + detail::fixed3(cy + 6) + " " +
             detail::fixed3(cx - 6) + "," + detail::fixed3(cy) + "\" fill=\"" + fill + "\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

inline void render_svg(const std::vector<ColoredPoint>& points, const ColoredTree* tree, const std::string& path,
                       const SvgOptions& opt = {}) {
  write_text_file(path, render_svg(points, tree, opt));
}

}  // namespace bichroma
