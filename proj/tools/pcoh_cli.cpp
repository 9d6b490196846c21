#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "pcoh/engine.hpp"
#include "pcoh/errors.hpp"
#include "pcoh/io.hpp"
#include "pcoh/oracle.hpp"
#include "pcoh/rips.hpp"

namespace {

struct cli_config {
  std::string input;
  std::string format = "filtration";
  std::uint64_t field = 2;
  std::optional<double> rips_max_edge;
  std::optional<int> max_dim;
  bool lazy = true;
  bool reorder = true;
  bool stats = false;
  bool oracle = false;
  std::string output;
  bool emit_zero_length = false;
};

int run(const cli_config& cfg) {
  pcoh::prime_field field(cfg.field);

  pcoh::filtered_complex complex;
  if (cfg.format == "points") {
    if (!cfg.rips_max_edge || !cfg.max_dim)
      throw pcoh::input_error("points input needs --rips-max-edge and --max-dim");
    auto points = pcoh::read_points(cfg.input);
    complex = pcoh::build_rips(points, *cfg.rips_max_edge, *cfg.max_dim);
  } else {
    complex = pcoh::read_filtration(cfg.input);
  }

  pcoh::engine_options opts;
  opts.lazy = cfg.lazy;
  opts.reorder = cfg.reorder;
  opts.record_stats = cfg.stats;
  opts.emit_zero_length = cfg.emit_zero_length;
  auto result = pcoh::compute_persistence(complex, field, opts);
  const std::string text = pcoh::format_diagram(result.diagram);

  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    pcoh::write_diagram(result.diagram, cfg.output);
  }

  if (cfg.stats) {
    const std::string stats = pcoh::format_stats(result.stats);
    if (cfg.output.empty()) {
      std::cerr << stats;
    } else {
      std::ofstream out(cfg.output + ".stats", std::ios::binary);
      out << stats;
      if (!out) throw pcoh::input_error("failed writing " + cfg.output + ".stats");
    }
  }

  if (cfg.oracle) {
    auto expected = pcoh::oracle::reduce(complex, field, cfg.emit_zero_length);
    if (!pcoh::diagram_equal(result.diagram, expected)) {
      std::cerr << "oracle mismatch\n";
      for (const auto& p : pcoh::diagram_difference(result.diagram, expected))
        std::cerr << "- engine only: " << p.dim << ' ' << pcoh::format_value(p.birth) << ' '
                  << pcoh::format_value(p.death) << '\n';
      for (const auto& p : pcoh::diagram_difference(expected, result.diagram))
        std::cerr << "+ oracle only: " << p.dim << ' ' << pcoh::format_value(p.birth) << ' '
                  << pcoh::format_value(p.death) << '\n';
      return 3;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistent cohomology with compressed annotation matrices"};
  cli_config cfg;
  app.add_option("--input", cfg.input, "input file")->required()->check(CLI::ExistingFile);
  app.add_option("--format", cfg.format, "input format")
      ->check(CLI::IsMember({"points", "filtration"}))
      ->capture_default_str();
  app.add_option("--field", cfg.field, "prime characteristic of the coefficient field")
      ->capture_default_str();
  app.add_option("--rips-max-edge", cfg.rips_max_edge, "Rips threshold (points input)");
  app.add_option("--max-dim", cfg.max_dim, "maximal simplex dimension (points input)");
  app.add_flag("--lazy,!--no-lazy", cfg.lazy, "defer creator insertions (default on)");
  app.add_flag("--reorder,!--no-reorder", cfg.reorder, "reorder iso-valued simplices (default on)");
  app.add_flag("--stats", cfg.stats, "write run statistics to <output>.stats or stderr");
  app.add_flag("--oracle", cfg.oracle, "check the diagram against boundary-matrix reduction");
  app.add_option("--output", cfg.output, "diagram file (stdout if omitted)");
  app.add_flag("--emit-zero-length", cfg.emit_zero_length, "keep pairs with birth == death");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(cfg);
  } catch (const pcoh::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const pcoh::invariant_violation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
