#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "setlines/bench.hpp"
#include "setlines/io.hpp"
#include "setlines/metrics.hpp"
#include "setlines/pipeline.hpp"
#include "setlines/render.hpp"

namespace {

using namespace setlines;

const std::map<std::string, Strategy> kStrategies{
    {"hamming", Strategy::Hamming},
    {"upper-bound", Strategy::UpperBound},
    {"iterative-hamming", Strategy::IterativeHamming},
    {"iterative-upper-bound", Strategy::IterativeUpperBound},
    {"random", Strategy::Random},
};
const std::map<std::string, SolverKind> kSolvers{
    {"exact", SolverKind::Exact},
    {"heuristic", SolverKind::Heuristic},
};
const std::map<std::string, LayoutKind> kLayouts{
    {"storyline", LayoutKind::Storyline},
    {"star", LayoutKind::Star},
};
const std::map<std::string, GlyphStyle> kGlyphs{
    {"stacked", GlyphStyle::StackedWidth},
    {"colored", GlyphStyle::ColoredUniform},
};
const std::map<std::string, BinHeights> kBinHeights{
    {"uniform", BinHeights::Uniform},
    {"local", BinHeights::LocalCount},
    {"distribution", BinHeights::GivenDistribution},
};
const std::map<std::string, CurveStyle> kCurves{
    {"polyline", CurveStyle::Polyline},
    {"rounded", CurveStyle::Rounded},
};

struct OrderFlags {
  std::string input;
  LayoutKind layout = LayoutKind::Storyline;
  Strategy strategy = Strategy::UpperBound;
  SolverKind solver = SolverKind::Exact;
  int iterations = 5;
  uint64_t seed = 0;
  int exact_cap = kDefaultExactCap;
  std::vector<double> levels;
  std::vector<double> boundaries;
};

void add_order_flags(CLI::App* cmd, OrderFlags& flags) {
  cmd->add_option("input", flags.input, "input file (.csv or .json)")
      ->required();
  cmd->add_option("--layout", flags.layout, "diagram layout")
      ->transform(CLI::CheckedTransformer(kLayouts))
      ->default_str("storyline");
  cmd->add_option("--strategy", flags.strategy, "element ordering strategy")
      ->transform(CLI::CheckedTransformer(kStrategies))
      ->default_str("upper-bound");
  cmd->add_option("--tsp", flags.solver, "TSP solver")
      ->transform(CLI::CheckedTransformer(kSolvers))
      ->default_str("exact");
  cmd->add_option("--iterations", flags.iterations,
                  "iteration cap for iterative strategies")
      ->default_val(5);
  cmd->add_option("--seed", flags.seed, "seed for shuffles and the heuristic")
      ->default_val(0);
  cmd->add_option("--exact-cap", flags.exact_cap,
                  "vertex cap of the exact solver")
      ->default_val(kDefaultExactCap);
  cmd->add_option("--levels", flags.levels,
                  "certainty levels for CSV input (comma separated)")
      ->delimiter(',');
  cmd->add_option("--boundaries", flags.boundaries,
                  "bin boundaries for CSV input (comma separated)")
      ->delimiter(',');
}

struct OrderedInput {
  InputData data;
  OrderingResult result;
  LayoutMetrics metrics;
};

OrderedInput run_ordering(const OrderFlags& flags) {
  OrderedInput out;
  out.data = load_input_file(flags.input, flags.levels, flags.boundaries);
  OrderingOptions opts;
  opts.strategy = flags.strategy;
  opts.solver = flags.solver;
  opts.mode = flags.layout == LayoutKind::Star ? Mode::Cycle : Mode::Path;
  opts.max_iterations = flags.iterations;
  opts.seed = flags.seed;
  opts.exact_cap = flags.exact_cap;
  const auto t0 = std::chrono::steady_clock::now();
  out.result = order_elements(out.data.bins, opts);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  out.metrics = compute_metrics(out.result.layout, ms);
  return out;
}

void print_metrics_line(const OrderedInput& run) {
  std::printf(
      "{\"CR\":%lld,\"T_Sigma\":%lld,\"wiggle\":%lld,\"runtime_ms\":%.3f,"
      "\"iterations_used\":%d}\n",
      run.metrics.crossings, run.metrics.turns, run.metrics.wiggle,
      run.metrics.runtime_ms, run.result.iterations_used);
}

std::vector<int> parse_grid_axis(const std::string& text) {
  std::vector<int> values;
  const size_t c1 = text.find(':');
  if (c1 != std::string::npos) {
    const size_t c2 = text.find(':', c1 + 1);
    const int lo = std::stoi(text.substr(0, c1));
    const int hi = std::stoi(c2 == std::string::npos
                                 ? text.substr(c1 + 1)
                                 : text.substr(c1 + 1, c2 - c1 - 1));
    const int step =
        c2 == std::string::npos ? 1 : std::stoi(text.substr(c2 + 1));
    if (step <= 0 || lo <= 0 || hi < lo) {
      throw InputError("bad grid range '" + text + "'");
    }
    for (int v = lo; v <= hi; v += step) values.push_back(v);
    return values;
  }
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    values.push_back(std::stoi(text.substr(pos, comma - pos)));
    if (values.back() <= 0) throw InputError("grid values must be positive");
    pos = comma + 1;
  }
  if (values.empty()) throw InputError("empty grid axis");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "setlines: draw uncertain set systems as ordered curve diagrams"};
  app.require_subcommand(1);

  // --- render ---------------------------------------------------------
  OrderFlags render_flags;
  GlyphStyle glyph = GlyphStyle::StackedWidth;
  BinHeights bin_heights = BinHeights::Uniform;
  CurveStyle curve_style = CurveStyle::Polyline;
  bool compact = false;
  bool legend = false;
  double inner_radius = 0.3;
  double scale = 10.0;
  std::string out_path = "out.svg";

  CLI::App* render_cmd =
      app.add_subcommand("render", "compute an ordering and write an SVG");
  add_order_flags(render_cmd, render_flags);
  render_cmd->add_option("--glyph", glyph, "glyph style")
      ->transform(CLI::CheckedTransformer(kGlyphs))
      ->default_str("stacked");
  render_cmd->add_option("--bin-heights", bin_heights, "bin height rule")
      ->transform(CLI::CheckedTransformer(kBinHeights))
      ->default_str("uniform");
  render_cmd->add_option("--curves", curve_style, "curve style")
      ->transform(CLI::CheckedTransformer(kCurves))
      ->default_str("polyline");
  render_cmd->add_flag("--compact", compact,
                       "trim curves to their member span (storyline)");
  render_cmd->add_flag("--legend", legend, "draw a set-name legend column");
  render_cmd
      ->add_option("--inner-radius", inner_radius,
                   "inner free circle of the star layout, in [0,1)")
      ->default_val(0.3);
  render_cmd->add_option("--scale", scale, "pixels per layout unit")
      ->default_val(10.0);
  render_cmd->add_option("--out", out_path, "output SVG path")
      ->default_val("out.svg");

  // --- metrics --------------------------------------------------------
  OrderFlags metrics_flags;
  CLI::App* metrics_cmd = app.add_subcommand(
      "metrics", "compute an ordering and report quality metrics");
  add_order_flags(metrics_cmd, metrics_flags);

  // --- bench ----------------------------------------------------------
  std::string n_axis = "5:100:5";
  std::string m_axis = "2:30:2";
  BenchGrid grid = default_bench_grid();
  std::vector<Strategy> bench_strategies;
  std::vector<SolverKind> bench_solvers;
  std::string bench_out = "bench.csv";
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "run the synthetic strategy comparison and write a CSV");
  bench_cmd->add_option(
      "--n-values", n_axis,
      "element counts: list 'a,b,c' or range 'lo:hi:step'");
  bench_cmd->add_option("--m-values", m_axis, "set counts: list or range");
  bench_cmd
      ->add_option("--samples", grid.samples_per_cell,
                   "instances per grid cell")
      ->default_val(5);
  bench_cmd->add_option("--k", grid.k, "number of certainty levels")
      ->default_val(5);
  bench_cmd
      ->add_option("--strategies", bench_strategies,
                   "strategies to compare (comma separated)")
      ->transform(CLI::CheckedTransformer(kStrategies))
      ->delimiter(',');
  bench_cmd
      ->add_option("--solvers", bench_solvers,
                   "solvers to compare (comma separated)")
      ->transform(CLI::CheckedTransformer(kSolvers))
      ->delimiter(',');
  bench_cmd->add_option("--seed", grid.seed, "master seed")->default_val(1);
  bench_cmd->add_option("--jobs", grid.jobs, "worker threads")->default_val(1);
  bench_cmd
      ->add_option("--iterations", grid.max_iterations,
                   "iteration cap for iterative strategies")
      ->default_val(5);
  bench_cmd
      ->add_option("--exact-cap", grid.exact_cap,
                   "vertex cap of the exact solver")
      ->default_val(kDefaultExactCap);
  bench_cmd->add_option("--out", bench_out, "output CSV path")
      ->default_val("bench.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*render_cmd) {
      OrderedInput run = run_ordering(render_flags);
      LayoutConfig config;
      config.layout = render_flags.layout;
      config.glyph_style = glyph;
      config.bin_heights = bin_heights;
      config.curve_style = curve_style;
      config.compact = compact;
      config.inner_radius = inner_radius;
      if (bin_heights == BinHeights::GivenDistribution) {
        if (!run.data.has_distribution) {
          throw InputError(
              "--bin-heights distribution needs a 'distribution' block in "
              "the input JSON");
        }
        config.distribution = run.data.distribution;
      }
      Scene scene =
          build_scene(run.data.bins, run.result.layout, config,
                      run.data.element_names, run.data.set_names,
                      render_flags.seed);
      render_svg(scene, scale, legend).save(out_path);
      print_metrics_line(run);
    } else if (*metrics_cmd) {
      OrderedInput run = run_ordering(metrics_flags);
      print_metrics_line(run);
    } else if (*bench_cmd) {
      grid.n_values = parse_grid_axis(n_axis);
      grid.m_values = parse_grid_axis(m_axis);
      if (!bench_strategies.empty()) grid.strategies = bench_strategies;
      if (!bench_solvers.empty()) grid.solvers = bench_solvers;
      std::ofstream file(bench_out, std::ios::binary);
      if (!file) throw InputError("cannot write file: " + bench_out);
      run_bench(grid, file);
    }
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
