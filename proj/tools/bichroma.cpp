// Command-line front end: instance generation, minimum and plane trees,
// property verification, the exhaustive oracle, and batch experiments.

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bichroma.hpp"

namespace {

using namespace bichroma;

constexpr int kExitInvariant = 5;

InstanceFile load_checked(const std::string& path, bool need_general_position) {
  InstanceFile inst = load_instance(path);
  if (need_general_position) {
    const auto check = check_general_position(inst.points);
    if (check.sampled) {
      std::cerr << "warning: general position only sampled for n = " << inst.points.size() << "\n";
    }
    if (!check.ok) {
      const auto& w = *check.witness;
      throw Error(ErrorKind::NotGeneralPosition, "points " + std::to_string(w[0]) + ", " + std::to_string(w[1]) +
                                                     ", " + std::to_string(w[2]) + " are collinear or coincident");
    }
  }
  return inst;
}

Shift parse_shift(const std::string& text, std::size_t n) {
  const std::uint64_t grid = grid_resolution(n);
  if (text.rfind("random:", 0) == 0) return Shift::continuous(std::stoull(text.substr(7)));
  if (text.rfind("grid:", 0) == 0) {
    const std::string rest = text.substr(5);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidInput, "grid shift needs I,J");
    return Shift::discrete(std::stoull(rest.substr(0, comma)), std::stoull(rest.substr(comma + 1)), grid);
  }
  throw Error(ErrorKind::InvalidInput, "shift must be random:SEED, grid:I,J or best");
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum and plane bichromatic spanning trees"};
  app.require_subcommand(1);

  // gen
  std::string gen_kind = "uniform", gen_out;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  int gen_colors = 2;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", gen_kind, "uniform | max-crossing | per-edge")
      ->check(CLI::IsMember({"uniform", "max-crossing", "per-edge"}));
  gen->add_option("--n", gen_n, "Number of points")->required();
  gen->add_option("--seed", gen_seed, "Random seed (uniform only)");
  gen->add_option("--colors", gen_colors, "Number of colors (uniform only)");
  gen->add_option("--out", gen_out, "Output file (.json or .csv); stdout as JSON if omitted");

  // minbst
  std::string mst_in, mst_tree, mst_svg;
  auto* mst = app.add_subcommand("minbst", "Minimum properly colored spanning tree");
  mst->add_option("--in", mst_in, "Instance file")->required();
  mst->add_option("--out-tree", mst_tree, "Tree JSON output");
  mst->add_option("--svg", mst_svg, "SVG drawing");

  // approx
  std::string ap_in, ap_shift = "best", ap_tree, ap_svg, ap_report;
  auto* ap = app.add_subcommand("approx", "Plane tree from a shifted quadtree");
  ap->add_option("--in", ap_in, "Instance file")->required();
  ap->add_option("--shift", ap_shift, "random:SEED | grid:I,J | best");
  ap->add_option("--out-tree", ap_tree, "Tree JSON output");
  ap->add_option("--svg", ap_svg, "SVG drawing");
  ap->add_option("--report", ap_report, "Report JSON output (stdout if '-')");

  // verify
  std::string vf_in, vf_tree, vf_format = "text";
  bool vf_props = false;
  auto* vf = app.add_subcommand("verify", "Crossing analysis and structural checks");
  vf->add_option("--in", vf_in, "Instance file")->required();
  vf->add_option("--tree", vf_tree, "Tree JSON to analyze (default: the minimum tree)");
  vf->add_flag("--props", vf_props, "Check the properties every minimum tree must have");
  vf->add_option("--report", vf_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  // oracle
  std::string or_in, or_tree, or_svg;
  auto* orc = app.add_subcommand("oracle", "Exact minimum plane tree (n <= 9)");
  orc->add_option("--in", or_in, "Instance file")->required();
  orc->add_option("--out-tree", or_tree, "Tree JSON output");
  orc->add_option("--svg", or_svg, "SVG drawing");

  // experiment
  std::string ex_config, ex_out;
  auto* ex = app.add_subcommand("experiment", "Batch measurements");
  ex->add_option("--config", ex_config, "Config file")->required();
  ex->add_option("--out-dir", ex_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      InstanceFile inst;
      if (gen_kind == "max-crossing") {
        inst = gen_max_crossing_gadget(gen_n);
      } else if (gen_kind == "per-edge") {
        inst = gen_per_edge_gadget(gen_n);
      } else {
        inst = gen_uniform(gen_n, gen_seed, gen_colors);
      }
      if (gen_out.empty()) {
        std::cout << instance_to_json(inst);
      } else {
        save_instance(gen_out, inst);
      }
    } else if (*mst) {
      const InstanceFile inst = load_checked(mst_in, false);
      const ColoredTree tree = min_colored_spanning_tree(inst.points);
      if (!mst_tree.empty()) write_text_file(mst_tree, tree_to_json(tree, "minbst").dump(2) + "\n");
      if (!mst_svg.empty()) render_svg(inst.points, &tree, mst_svg);
      std::cout << "minbst length " << format_double(tree.total_length) << "\n";
    } else if (*ap) {
      const InstanceFile inst = load_checked(ap_in, true);
      const auto& pts = inst.points;
      ColoredTree tree;
      Shift shift;
      json report;
      if (ap_shift == "best") {
        const DerandomizedResult best = derandomized_tree(pts);
        tree = best.tree;
        shift = best.best_shift;
        report["mean_length_over_shifts"] = best.mean_length;
        report["shifts_evaluated"] = best.shifts_evaluated;
      } else {
        shift = parse_shift(ap_shift, pts.size());
        tree = approx_tree(pts, shift);
      }
      ApproxTrace trace;
      approx_tree(pts, shift, &trace);
      const ColoredTree reference = min_colored_spanning_tree(trace.normalized.points);
      const OptPrimeProfile profile = opt_prime(reference, trace.quadtree);
      const bool plane = is_plane(tree);
      const bool valid = plane && is_spanning_tree(tree) && is_properly_colored(tree);
      report["shift"] = shift.describe();
      report["shift_x"] = shift.x;
      report["shift_y"] = shift.y;
      report["length"] = tree.total_length;
      const double minbst_length = min_colored_spanning_tree(pts).total_length;
      report["minbst_length"] = minbst_length;
      report["ratio"] = tree.total_length / minbst_length;
      report["plane"] = plane;
      report["valid"] = valid;
      report["normalized_length"] = trace.normalized_length;
      report["normalized_minbst_length"] = reference.total_length;
      report["potential_per_level"] = profile.per_level;
      report["potential_total"] = profile.total;
      const double bound = std::sqrt(2.0) * reference.total_length + 4.0 * std::sqrt(2.0) * profile.total;
      report["length_bound"] = bound;
      report["length_bound_ok"] = trace.normalized_length <= bound + 1e-9;
      if (!ap_tree.empty()) write_text_file(ap_tree, tree_to_json(tree, "approx " + shift.describe()).dump(2) + "\n");
      if (!ap_svg.empty()) render_svg(pts, &tree, ap_svg);
      if (!ap_report.empty()) write_or_print(ap_report, report.dump(2) + "\n");
      std::cout << "approx length " << format_double(tree.total_length) << " shift " << shift.describe() << "\n";
      if (!valid) {
        std::cerr << "error: output tree failed validation\n";
        return kExitInvariant;
      }
    } else if (*vf) {
      const InstanceFile inst = load_checked(vf_in, true);
      const ColoredTree tree =
          vf_tree.empty() ? min_colored_spanning_tree(inst.points) : tree_from_json(read_text_file(vf_tree), inst.points);
      if (!is_spanning_tree(tree)) throw Error(ErrorKind::InvalidInput, "tree does not span the instance");
      const CrossingReport report = vf_props ? verify_minbst_properties(inst.points, tree) : analyze_crossings(tree);
      if (vf_format == "json") {
        std::cout << report_to_json(report, vf_props).dump(2) << "\n";
      } else {
        std::cout << report_to_text(report, vf_props);
      }
      if (vf_props && !report.all_ok()) return kExitInvariant;
    } else if (*orc) {
      const InstanceFile inst = load_checked(or_in, true);
      const ColoredTree tree = brute_force_min_plane_tree(inst.points);
      const double minbst_length = min_colored_spanning_tree(inst.points).total_length;
      if (!or_tree.empty()) write_text_file(or_tree, tree_to_json(tree, "oracle").dump(2) + "\n");
      if (!or_svg.empty()) render_svg(inst.points, &tree, or_svg);
      std::cout << "plane optimum " << format_double(tree.total_length) << "\n"
                << "minbst length " << format_double(minbst_length) << "\n";
    } else if (*ex) {
      const ExperimentConfig cfg = parse_experiment_config(read_text_file(ex_config));
      std::error_code ec;
      std::filesystem::create_directories(ex_out, ec);
      if (ec) throw Error(ErrorKind::IoError, "cannot create " + ex_out);
      const auto records = run_experiment(cfg);
      const std::filesystem::path dir(ex_out);
      write_text_file((dir / "records.csv").string(), records_to_csv(records));
      write_text_file((dir / "records.json").string(), records_to_json(records).dump(2) + "\n");
      write_text_file((dir / "summary.csv").string(), summary_to_csv(records));
      write_text_file((dir / "timings.csv").string(), timings_to_csv(records));
      for (const auto& r : records) {
        if (r.ratio_best < 1.0 - 1e-9 || !r.quasi_plane) {
          std::cerr << "error: invariant violated on " << r.instance_id << "\n";
          return kExitInvariant;
        }
      }
      std::cout << records.size() << " records written to " << ex_out << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
