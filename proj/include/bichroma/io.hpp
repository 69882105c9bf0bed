#pragma once

// Point-set and tree files. JSON is canonical; CSV needs an `x,y,color`
// header. Coordinates are written as shortest round-trip decimals.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "bichroma/crossing.hpp"
#include "bichroma/generators.hpp"
#include "bichroma/tree.hpp"

namespace bichroma {

using json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

inline bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Checks finiteness, at least one point, and (when strict) that colors form
/// the contiguous range 0..k-1. Assigns sequential ids.
inline void validate_instance(InstanceFile& inst, bool strict_colors = true) {
  if (inst.points.empty()) throw Error(ErrorKind::InvalidInput, "instance has no points");
  int max_color = -1;
  for (const auto& p : inst.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorKind::InvalidInput, "non-finite coordinate");
    if (p.color < 0) throw Error(ErrorKind::InvalidInput, "negative color");
    max_color = std::max(max_color, p.color);
  }
  if (strict_colors) {
    std::vector<bool> used(static_cast<std::size_t>(max_color) + 1, false);
    for (const auto& p : inst.points) used[static_cast<std::size_t>(p.color)] = true;
    for (std::size_t c = 0; c < used.size(); ++c) {
      if (!used[c]) throw Error(ErrorKind::InvalidInput, "color " + std::to_string(c) + " is unused");
    }
  }
  inst.points = with_sequential_ids(std::move(inst.points));
}

inline std::string instance_to_json(const InstanceFile& inst) {
  // Written by hand so coordinates use the shortest round-trip form.
  std::string out = "{\n";
  if (inst.metadata.name || inst.metadata.seed || inst.metadata.generator) {
    json meta = json::object();
    if (inst.metadata.name) meta["name"] = *inst.metadata.name;
    if (inst.metadata.seed) meta["seed"] = *inst.metadata.seed;
    if (inst.metadata.generator) meta["generator"] = *inst.metadata.generator;
    out += "  \"metadata\": " + meta.dump() + ",\n";
  }
  out += "  \"points\": [\n";
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    const auto& p = inst.points[i];
    out += "    {\"x\": " + format_double(p.x) + ", \"y\": " + format_double(p.y) +
           ", \"color\": " + std::to_string(p.color) + "}";
    out += i + 1 < inst.points.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

inline InstanceFile instance_from_json(const std::string& text, bool strict_colors = true) {
  InstanceFile inst;
  try {
    const json doc = json::parse(text);
    for (const auto& p : doc.at("points")) {
      inst.points.push_back({p.at("x").get<double>(), p.at("y").get<double>(), p.at("color").get<int>(), 0});
    }
    if (doc.contains("metadata")) {
      const auto& m = doc["metadata"];
      if (m.contains("name")) inst.metadata.name = m["name"].get<std::string>();
      if (m.contains("seed")) inst.metadata.seed = m["seed"].get<std::uint64_t>();
      if (m.contains("generator")) inst.metadata.generator = m["generator"].get<std::string>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed instance JSON: ") + e.what());
  }
  validate_instance(inst, strict_colors);
  return inst;
}

inline std::string instance_to_csv(const InstanceFile& inst) {
  std::string out = "x,y,color\n";
  for (const auto& p : inst.points) {
    out += format_double(p.x) + "," + format_double(p.y) + "," + std::to_string(p.color) + "\n";
  }
  return out;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& field, std::size_t line) {
  const std::string s = trim(field);
  T value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return value;
}

}  // namespace detail

inline InstanceFile instance_from_csv(const std::string& text, bool strict_colors = true) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  InstanceFile inst;
  while (std::getline(in, line)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty()) continue;
    if (!header) {
      if (line != "x,y,color") {
        throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line_no) + ": expected header x,y,color");
      }
      header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.size() != 3) {
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line_no) + ": expected 3 fields");
    }
    inst.points.push_back({detail::parse_number<double>(fields[0], line_no),
                           detail::parse_number<double>(fields[1], line_no),
                           detail::parse_number<int>(fields[2], line_no), 0});
  }
  if (!header) throw Error(ErrorKind::InvalidInput, "missing x,y,color header");
  validate_instance(inst, strict_colors);
  return inst;
}

/// Loads .csv files as CSV and everything else as JSON.
inline InstanceFile load_instance(const std::string& path, bool strict_colors = true) {
  const std::string text = read_text_file(path);
  return has_suffix(path, ".csv") ? instance_from_csv(text, strict_colors) : instance_from_json(text, strict_colors);
}

inline void save_instance(const std::string& path, const InstanceFile& inst) {
  write_text_file(path, has_suffix(path, ".csv") ? instance_to_csv(inst) : instance_to_json(inst));
}

inline json tree_to_json(const ColoredTree& tree, const std::string& algorithm) {
  json doc;
  doc["algorithm"] = algorithm;
  doc["n"] = tree.points.size();
  doc["total_length"] = tree.total_length;
  json edges = json::array();
  for (const Edge& e : tree.edges) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  return doc;
}

/// Reads the edges of a tree file and attaches them to `points`.
inline ColoredTree tree_from_json(const std::string& text, const std::vector<ColoredPoint>& points) {
  std::vector<Edge> edges;
  try {
    const json doc = json::parse(text);
    for (const auto& e : doc.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed tree JSON: ") + e.what());
  }
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= static_cast<int>(points.size()) || e.v >= static_cast<int>(points.size())) {
      throw Error(ErrorKind::InvalidInput, "tree edge refers to an unknown point");
    }
  }
  return make_tree(points, std::move(edges));
}

inline json report_to_json(const CrossingReport& r, bool with_properties) {
  json doc;
  doc["n"] = r.n;
  doc["crossing_count"] = r.crossing_count;
  doc["per_edge_max"] = r.per_edge_max;
  doc["plane"] = r.plane;
  doc["quasi_plane"] = r.quasi_plane;
  json pairs = json::array();
  for (const auto& [a, b] : r.crossing_pairs) pairs.push_back({a, b});
  doc["crossing_pairs"] = std::move(pairs);
  doc["odd_girth"] = r.odd_girth ? json(*r.odd_girth) : json(nullptr);
  if (with_properties) {
    json props;
    props["closest_pair_is_edge"] = r.closest_pair_is_edge;
    props["closest_edge_crossing_free"] = r.closest_edge_crossing_free;
    props["total_crossing_bound"] = max_total_crossings(r.n);
    props["total_crossing_bound_ok"] = r.total_crossing_bound_ok;
    props["per_edge_bound"] = max_crossings_per_edge(r.n);
    props["per_edge_bound_ok"] = r.per_edge_bound_ok;
    props["crossing_paths_bichromatic"] = r.crossing_paths_bichromatic;
    props["length_ties"] = r.length_ties;
    props["all_ok"] = r.all_ok();
    doc["properties"] = std::move(props);
  }
  return doc;
}

inline std::string report_to_text(const CrossingReport& r, bool with_properties) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "n: " << r.n << "\n"
      << "crossings: " << r.crossing_count << "\n"
      << "max crossings on one edge: " << r.per_edge_max << "\n"
      << "plane: " << yes(r.plane) << "\n"
      << "quasi-plane: " << yes(r.quasi_plane) << "\n"
      << "odd girth of crossing graph: " << (r.odd_girth ? std::to_string(*r.odd_girth) : "none") << "\n";
  if (with_properties) {
    out << "closest bichromatic pair is an edge: " << yes(r.closest_pair_is_edge) << "\n"
        << "closest-pair edge uncrossed: " << yes(r.closest_edge_crossing_free) << "\n"
        << "total crossings <= " << max_total_crossings(r.n) << ": " << yes(r.total_crossing_bound_ok) << "\n"
        << "per-edge crossings <= " << max_crossings_per_edge(r.n) << ": " << yes(r.per_edge_bound_ok) << "\n"
        << "crossing pairs joined by bichromatic paths: " << yes(r.crossing_paths_bichromatic) << "\n"
        << "length ties present: " << yes(r.length_ties) << "\n"
        << "all properties hold: " << yes(r.all_ok()) << "\n";
  }
  return out.str();
}

}  // namespace bichroma
