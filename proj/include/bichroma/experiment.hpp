#pragma once

// Batch measurement of the quadtree construction against the minimum
// colored spanning tree (and, for tiny inputs, the plane optimum).
//
// Config is a line-oriented `key = value` file; `#` starts a comment:
//
//   generator = uniform, max-crossing     # uniform | max-crossing | per-edge
//   sizes     = 8, 16, 20-24              # values and inclusive ranges
//   seeds     = 1-10
//   colors    = 2
//   shifts    = all-discrete              # all-discrete | random:K | grid:I,J
//   oracle    = auto                      # auto (n <= 9) | off

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bichroma/approx.hpp"
#include "bichroma/crossing.hpp"
#include "bichroma/generators.hpp"
#include "bichroma/io.hpp"
#include "bichroma/minbst.hpp"
#include "bichroma/oracle.hpp"
#include "bichroma/parallel.hpp"

namespace bichroma {

struct ShiftPolicy {
  enum class Kind { AllDiscrete, Random, Grid };
  Kind kind = Kind::AllDiscrete;
  std::uint64_t count = 1;   // Random
  std::uint64_t i = 0, j = 0;  // Grid
};

struct ExperimentConfig {
  std::vector<std::string> generators{"uniform"};
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds{1};
  int colors = 2;
  ShiftPolicy shifts;
  bool oracle = true;
};

struct ExperimentRecord {
  std::string instance_id;
  std::string generator;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double minbst_length = 0.0;
  std::vector<std::string> shift_labels;
  std::vector<double> approx_lengths;
  std::optional<double> derandomized_length;  // only when every discrete shift was run
  std::optional<double> plane_optimum;
  double ratio_best = 0.0;   // shortest approx / minbst
  double ratio_worst = 0.0;  // longest approx / minbst
  std::size_t crossing_count = 0;
  std::size_t per_edge_max = 0;
  bool quasi_plane = true;
  std::optional<std::size_t> odd_girth;
  bool length_ties = false;
  double wall_seconds = 0.0;
};

namespace detail {

inline Error config_error(std::size_t line, const std::string& msg) {
  return Error(ErrorKind::InvalidInput, "config line " + std::to_string(line) + ": " + msg);
}

inline std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::uint64_t parse_uint(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw config_error(line, "bad integer '" + s + "'");
  return v;
}

inline std::vector<std::uint64_t> parse_ranges(const std::string& value, std::size_t line) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(value)) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse_uint(item, line));
      continue;
    }
    const auto lo = parse_uint(trim(item.substr(0, dash)), line);
    const auto hi = parse_uint(trim(item.substr(dash + 1)), line);
    if (hi < lo) throw config_error(line, "empty range '" + item + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw config_error(line, "empty list");
  return out;
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(const std::string& text) {
  ExperimentConfig cfg;
  bool have_sizes = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw detail::config_error(line, "expected key = value");
    const std::string key = detail::trim(content.substr(0, eq));
    const std::string value = detail::trim(content.substr(eq + 1));
    if (key == "generator") {
      cfg.generators = detail::split_list(value);
      for (const auto& g : cfg.generators) {
        if (g != "uniform" && g != "max-crossing" && g != "per-edge") {
          throw detail::config_error(line, "unknown generator '" + g + "'");
        }
      }
      if (cfg.generators.empty()) throw detail::config_error(line, "empty generator list");
    } else if (key == "sizes") {
      cfg.sizes.clear();
      for (auto v : detail::parse_ranges(value, line)) {
        if (v < 2) throw detail::config_error(line, "sizes must be >= 2");
        cfg.sizes.push_back(static_cast<std::size_t>(v));
      }
      have_sizes = true;
    } else if (key == "seeds") {
      cfg.seeds = detail::parse_ranges(value, line);
    } else if (key == "colors") {
      const auto c = detail::parse_uint(value, line);
      if (c < 2 || c > 64) throw detail::config_error(line, "colors must be in [2, 64]");
      cfg.colors = static_cast<int>(c);
    } else if (key == "shifts") {
      if (value == "all-discrete") {
        cfg.shifts.kind = ShiftPolicy::Kind::AllDiscrete;
      } else if (value.rfind("random:", 0) == 0) {
        cfg.shifts.kind = ShiftPolicy::Kind::Random;
        cfg.shifts.count = detail::parse_uint(value.substr(7), line);
        if (cfg.shifts.count == 0) throw detail::config_error(line, "random shift count must be positive");
      } else if (value.rfind("grid:", 0) == 0) {
        const auto parts = detail::split_list(value.substr(5));
        if (parts.size() != 2) throw detail::config_error(line, "grid shift needs I,J");
        cfg.shifts.kind = ShiftPolicy::Kind::Grid;
        cfg.shifts.i = detail::parse_uint(parts[0], line);
        cfg.shifts.j = detail::parse_uint(parts[1], line);
      } else {
        throw detail::config_error(line, "unknown shift policy '" + value + "'");
      }
    } else if (key == "oracle") {
      if (value != "auto" && value != "off") throw detail::config_error(line, "oracle must be auto or off");
      cfg.oracle = value == "auto";
    } else {
      throw detail::config_error(line, "unknown key '" + key + "'");
    }
  }
  if (!have_sizes) throw Error(ErrorKind::InvalidInput, "config: missing 'sizes'");
  return cfg;
}

inline InstanceFile generate_instance(const std::string& generator, std::size_t n, std::uint64_t seed, int colors) {
  if (generator == "max-crossing") return gen_max_crossing_gadget(n);
  if (generator == "per-edge") return gen_per_edge_gadget(n);
  return gen_uniform(n, seed, colors);
}

/// Runs one instance through every stage. Pure apart from the wall clock.
inline ExperimentRecord run_experiment_instance(const ExperimentConfig& cfg, const std::string& generator,
                                                std::size_t n, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.generator = generator;
  rec.n = n;
  rec.seed = seed;
  rec.instance_id = generator + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
  const InstanceFile inst = generate_instance(generator, n, seed, cfg.colors);
  const auto& pts = inst.points;

  const ColoredTree minbst = min_colored_spanning_tree(pts);
  rec.minbst_length = minbst.total_length;
  const CrossingReport crossings = analyze_crossings(minbst);
  rec.crossing_count = crossings.crossing_count;
  rec.per_edge_max = crossings.per_edge_max;
  rec.quasi_plane = crossings.quasi_plane;
  rec.odd_girth = crossings.odd_girth;
  rec.length_ties = has_length_ties(minbst);

  const std::uint64_t grid = grid_resolution(n);
  std::vector<Shift> shifts;
  switch (cfg.shifts.kind) {
    case ShiftPolicy::Kind::AllDiscrete:
      for (std::uint64_t i = 0; i < grid; ++i) {
        for (std::uint64_t j = 0; j < grid; ++j) shifts.push_back(Shift::discrete(i, j, grid));
      }
      break;
    case ShiftPolicy::Kind::Random:
      for (std::uint64_t k = 0; k < cfg.shifts.count; ++k) shifts.push_back(Shift::continuous(seed * 1000003 + k));
      break;
    case ShiftPolicy::Kind::Grid:
      shifts.push_back(Shift::discrete(cfg.shifts.i % grid, cfg.shifts.j % grid, grid));
      break;
  }
  for (const Shift& s : shifts) {
    rec.shift_labels.push_back(s.describe());
    rec.approx_lengths.push_back(approx_tree(pts, s).total_length);
  }
  const auto [lo, hi] = std::minmax_element(rec.approx_lengths.begin(), rec.approx_lengths.end());
  rec.ratio_best = *lo / rec.minbst_length;
  rec.ratio_worst = *hi / rec.minbst_length;
  if (cfg.shifts.kind == ShiftPolicy::Kind::AllDiscrete) rec.derandomized_length = *lo;
  if (cfg.oracle && n <= kOracleMaxPoints) rec.plane_optimum = brute_force_min_plane_tree(pts).total_length;
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

/// Records in config order: generator, then size, then seed.
inline std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, unsigned threads = thread_count()) {
  struct Job {
    std::string generator;
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& g : cfg.generators) {
    for (auto n : cfg.sizes) {
      for (auto s : cfg.seeds) jobs.push_back({g, n, s});
    }
  }
  std::vector<ExperimentRecord> records(jobs.size());
  parallel_for(
      jobs.size(), [&](std::size_t k) { records[k] = run_experiment_instance(cfg, jobs[k].generator, jobs[k].n, jobs[k].seed); },
      threads);
  return records;
}

namespace detail {

inline std::string optional_number(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

}  // namespace detail

inline std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out =
      "instance_id,generator,n,seed,minbst_length,shifts,approx_min,approx_mean,approx_max,derandomized_length,"
      "plane_optimum,ratio_best,ratio_worst,crossing_count,per_edge_max,quasi_plane,odd_girth,length_ties\n";
  for (const auto& r : records) {
    double sum = 0.0;
    for (double v : r.approx_lengths) sum += v;
    const auto [lo, hi] = std::minmax_element(r.approx_lengths.begin(), r.approx_lengths.end());
    out += r.instance_id + "," + r.generator + "," + std::to_string(r.n) + "," + std::to_string(r.seed) + "," +
           format_double(r.minbst_length) + "," + std::to_string(r.approx_lengths.size()) + "," + format_double(*lo) +
           "," + format_double(sum / static_cast<double>(r.approx_lengths.size())) + "," + format_double(*hi) + "," +
           detail::optional_number(r.derandomized_length) + "," + detail::optional_number(r.plane_optimum) + "," +
           format_double(r.ratio_best) + "," + format_double(r.ratio_worst) + "," + std::to_string(r.crossing_count) +
           "," + std::to_string(r.per_edge_max) + "," + (r.quasi_plane ? "true" : "false") + "," +
           (r.odd_girth ? std::to_string(*r.odd_girth) : "") + "," + (r.length_ties ? "true" : "false") + "\n";
  }
  return out;
}

inline json records_to_json(const std::vector<ExperimentRecord>& records) {
  json doc = json::array();
  for (const auto& r : records) {
    json j;
    j["instance_id"] = r.instance_id;
    j["generator"] = r.generator;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["minbst_length"] = r.minbst_length;
    json shifts = json::array();
    for (std::size_t k = 0; k < r.approx_lengths.size(); ++k) {
      shifts.push_back({{"shift", r.shift_labels[k]}, {"length", r.approx_lengths[k]}});
    }
    j["approx"] = std::move(shifts);
    j["derandomized_length"] = r.derandomized_length ? json(*r.derandomized_length) : json(nullptr);
    j["plane_optimum"] = r.plane_optimum ? json(*r.plane_optimum) : json(nullptr);
    j["ratio_best"] = r.ratio_best;
    j["ratio_worst"] = r.ratio_worst;
    j["crossing_count"] = r.crossing_count;
    j["per_edge_max"] = r.per_edge_max;
    j["quasi_plane"] = r.quasi_plane;
    j["odd_girth"] = r.odd_girth ? json(*r.odd_girth) : json(nullptr);
    j["length_ties"] = r.length_ties;
    doc.push_back(std::move(j));
  }
  return doc;
}

/// Max and mean ratios per (generator, n).
inline std::string summary_to_csv(const std::vector<ExperimentRecord>& records) {
  struct Agg {
    std::size_t count = 0;
    double best_max = 0, best_sum = 0, worst_max = 0, worst_sum = 0;
  };
  std::map<std::pair<std::string, std::size_t>, Agg> groups;
  for (const auto& r : records) {
    Agg& a = groups[{r.generator, r.n}];
    ++a.count;
    a.best_max = std::max(a.best_max, r.ratio_best);
    a.best_sum += r.ratio_best;
    a.worst_max = std::max(a.worst_max, r.ratio_worst);
    a.worst_sum += r.ratio_worst;
  }
  std::string out = "generator,n,instances,max_ratio_best,mean_ratio_best,max_ratio_worst,mean_ratio_worst\n";
  for (const auto& [key, a] : groups) {
    const double c = static_cast<double>(a.count);
    out += key.first + "," + std::to_string(key.second) + "," + std::to_string(a.count) + "," +
           format_double(a.best_max) + "," + format_double(a.best_sum / c) + "," + format_double(a.worst_max) + "," +
           format_double(a.worst_sum / c) + "\n";
  }
  return out;
}

inline std::string timings_to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = "instance_id,wall_seconds\n";
  for (const auto& r : records) out += r.instance_id + "," + format_double(r.wall_seconds) + "\n";
  return out;
}

}  // namespace bichroma
