#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "warmgray/warmgray.hpp"

namespace warmgray::cli {

namespace {

// Invalid flag values discovered after parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Runs fn, turning parameter validation failures into usage errors.
template <typename Fn>
auto validated(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

LuminanceMethod method_or_throw(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw UsageError("unknown method '" + name + "' (expected ours, y, v, lab or weighted)");
}

struct DecolorArgs {
  std::string input;
  std::string output;
  std::string method = "ours";
  double beta_r = DecolorParams::default_beta_r;
  double beta_k = DecolorParams::default_beta_k;
  unsigned threads = 1;
};

struct MetricsArgs {
  std::string color;
  std::string gray;
  std::string method = "ours";
  std::string output;
  std::string name;
  std::uint64_t seed = PairSampleConfig::default_seed;
  std::size_t pairs = PairSampleConfig::default_pair_count;
  bool exhaustive = false;
  double beta_r = DecolorParams::default_beta_r;
  double beta_k = DecolorParams::default_beta_k;
  unsigned threads = 1;
};

struct TonemapArgs {
  std::string input;
  std::string output;
  std::string gray_out;
  std::string mode = "local";
  std::string method = "ours";
  double midpoint = SigmoidCurve::default_midpoint;
  double slope = SigmoidCurve::default_slope;
  std::size_t tiles = LocalHistogramGrid::default_tiles;
  std::size_t tile_w = 0;
  std::size_t tile_h = 0;
  std::size_t bins = LocalHistogramGrid::default_bins;
  double strength = LocalHistogramGrid::default_strength;
  double beta_r = DecolorParams::default_beta_r;
  double beta_k = DecolorParams::default_beta_k;
  unsigned threads = 1;
};

struct BenchArgs {
  std::size_t width = 800;
  std::size_t height = 600;
  std::vector<std::string> methods{"ours", "lab"};
  int repeats = min_bench_repeats;
  double cpu_ghz = reference_ghz;
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

void add_beta_flags(CLI::App* cmd, double& beta_r, double& beta_k) {
  cmd->add_option("--beta-r", beta_r, "R-vs-G weight, in (0.5, 1)")->capture_default_str();
  cmd->add_option("--beta-k", beta_k, "warm-vs-cool weight, in (0.5, 1)")->capture_default_str();
}

void add_threads_flag(CLI::App* cmd, unsigned& threads) {
  cmd->add_option("--threads", threads, "worker threads (0 = all cores)")
      ->envname("WARMGRAY_THREADS")
      ->capture_default_str();
}

int cmd_decolor(const DecolorArgs& a, std::ostream&) {
  const auto method = method_or_throw(a.method);
  const auto params = validated([&] { return DecolorParams(a.beta_r, a.beta_k); });
  format_for_path(a.output);
  const PlanarImage rgb = read_rgb_image(a.input);
  const PlanarImage gray = extract_luminance(rgb, method, params, a.threads);
  write_image(a.output, gray);
  return exit_ok;
}

PlanarImage as_luminance(PlanarImage img, const std::string& path) {
  if (img.kind() == PixelKind::luminance) return img;
  PlanarImage gray = PlanarImage::luminance(img.width(), img.height());
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    const RgbPixel p = img.pixel(i);
    if (p.r != p.g || p.g != p.b) throw IoError(path + ": gray image has chromatic pixels");
    gray.samples()[i] = p.r;
  }
  return gray;
}

int cmd_metrics(const MetricsArgs& a, std::ostream& out, std::ostream& err) {
  PairSampleConfig cfg;
  cfg.seed = a.seed;
  cfg.pair_count = a.pairs;
  cfg.exhaustive = a.exhaustive;
  validated([&] { cfg.validate(); return 0; });
  const auto method = method_or_throw(a.method);
  const auto params = validated([&] { return DecolorParams(a.beta_r, a.beta_k); });

  const PlanarImage color = read_rgb_image(a.color);
  const PlanarImage gray = a.gray.empty() ? extract_luminance(color, method, params, a.threads)
                                          : as_luminance(read_image(a.gray), a.gray);
  const MetricReport report = evaluate(color, gray, cfg);

  const std::string name =
      a.name.empty() ? std::filesystem::path(a.color).stem().string() : a.name;
  std::ostringstream csv;
  write_csv(csv, name, report);

  char mean[64];
  std::snprintf(mean, sizeof mean, "mean E-score: %.6f\n", report.mean_escore);
  if (a.output.empty()) {
    out << csv.str();
    err << mean;
  } else {
    const std::string text = csv.str();
    write_file(a.output, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    out << mean;
  }
  return exit_ok;
}

int cmd_tonemap(const TonemapArgs& a, std::ostream&) {
  if (a.mode != "global" && a.mode != "local") {
    throw UsageError("mode must be 'global' or 'local', got '" + a.mode + "'");
  }
  const auto method = method_or_throw(a.method);
  const auto params = validated([&] { return DecolorParams(a.beta_r, a.beta_k); });
  const auto curve = validated([&] { return SigmoidCurve(a.midpoint, a.slope); });
  format_for_path(a.output);
  if (!a.gray_out.empty()) format_for_path(a.gray_out);

  const PlanarImage rgb = read_rgb_image(a.input);

  LocalHistogramGrid grid = validated([&] {
    auto g = LocalHistogramGrid::for_image(rgb.width(), rgb.height(), a.tiles, a.tiles);
    if (a.tile_w != 0) g.tile_w = a.tile_w;
    if (a.tile_h != 0) g.tile_h = a.tile_h;
    g.bins = a.bins;
    g.strength = a.strength;
    g.validate();
    return g;
  });

  const PlanarImage l_in = extract_luminance(rgb, method, params, a.threads);
  const PlanarImage l_out = a.mode == "global" ? apply_sigmoid(l_in, curve, a.threads)
                                               : apply_local_lhe(l_in, grid, a.threads);
  const PlanarImage result = reinstate_color(rgb, l_in, l_out, a.threads);
  write_image(a.output, result);
  if (!a.gray_out.empty()) write_image(a.gray_out, l_out);
  return exit_ok;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.width == 0 || a.height == 0) throw UsageError("width and height must be >= 1");
  BenchOptions opts;
  opts.repeats = a.repeats;
  opts.cpu_ghz = a.cpu_ghz;
  opts.threads = a.threads;
  validated([&] { opts.validate(); return 0; });
  std::vector<LuminanceMethod> methods;
  for (const auto& m : a.methods) methods.push_back(method_or_throw(m));

  const PlanarImage img = random_rgb_image(a.width, a.height, a.seed);
  std::vector<BenchResult> rows;
  for (auto m : methods) rows.push_back(bench_method(img, m, opts));
  write_bench_tsv(out, rows);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"warmgray: color-temperature decolorization, metrics, tone mapping"};
  app.require_subcommand(1);

  DecolorArgs dec;
  auto* decolor = app.add_subcommand("decolor", "convert an RGB image to 8-bit grayscale");
  decolor->add_option("input", dec.input, "input PNG or PPM")->required();
  decolor->add_option("output", dec.output, "output PNG or PGM")->required();
  decolor->add_option("-m,--method", dec.method, "ours | y | v | lab | weighted")
      ->capture_default_str();
  add_beta_flags(decolor, dec.beta_r, dec.beta_k);
  add_threads_flag(decolor, dec.threads);

  MetricsArgs met;
  auto* metrics = app.add_subcommand("metrics", "CCPR/CCFR/E-score sweep over tau = 1..15");
  metrics->add_option("color", met.color, "color image")->required();
  metrics->add_option("gray", met.gray, "grayscale image (default: convert with --method)");
  metrics->add_option("-m,--method", met.method, "method used when no gray image is given")
      ->capture_default_str();
  metrics->add_option("--seed", met.seed, "pair sampler seed")->capture_default_str();
  metrics->add_option("--pairs", met.pairs, "sampled pair count")->capture_default_str();
  metrics->add_flag("--exhaustive", met.exhaustive, "evaluate every pixel pair");
  metrics->add_option("-o,--output", met.output, "CSV output path (default: stdout)");
  metrics->add_option("--name", met.name, "image column value (default: file stem)");
  add_beta_flags(metrics, met.beta_r, met.beta_k);
  add_threads_flag(metrics, met.threads);

  TonemapArgs tm;
  auto* tonemap = app.add_subcommand("tonemap", "decolor, tone map and reinstate color");
  tonemap->add_option("input", tm.input, "input PNG or PPM")->required();
  tonemap->add_option("output", tm.output, "output PNG or PPM")->required();
  tonemap->add_option("--mode", tm.mode, "global | local")->capture_default_str();
  tonemap->add_option("-m,--method", tm.method, "luminance channel to tone map")
      ->capture_default_str();
  tonemap->add_option("--midpoint", tm.midpoint, "sigmoid center")->capture_default_str();
  tonemap->add_option("--slope", tm.slope, "sigmoid gain")->capture_default_str();
  tonemap->add_option("--tiles", tm.tiles, "tiles per axis for local mode")->capture_default_str();
  tonemap->add_option("--tile-w", tm.tile_w, "tile width in pixels (overrides --tiles)");
  tonemap->add_option("--tile-h", tm.tile_h, "tile height in pixels (overrides --tiles)");
  tonemap->add_option("--bins", tm.bins, "histogram bins")->capture_default_str();
  tonemap->add_option("--strength", tm.strength, "blend with identity, in [0,1]")
      ->capture_default_str();
  tonemap->add_option("--gray-out", tm.gray_out, "also write the tone-mapped luminance");
  add_beta_flags(tonemap, tm.beta_r, tm.beta_k);
  add_threads_flag(tonemap, tm.threads);

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "per-pixel timing of luminance kernels");
  bench->add_option("--width", bn.width)->capture_default_str();
  bench->add_option("--height", bn.height)->capture_default_str();
  bench->add_option("--methods", bn.methods, "methods to time")->delimiter(',');
  bench->add_option("--repeats", bn.repeats, "timed runs per method (>= 5)")
      ->capture_default_str();
  bench->add_option("--cpu-ghz", bn.cpu_ghz, "nominal clock used for normalization")
      ->capture_default_str();
  bench->add_option("--seed", bn.seed, "random image seed")->capture_default_str();
  add_threads_flag(bench, bn.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*decolor) return cmd_decolor(dec, out);
    if (*metrics) return cmd_metrics(met, out, err);
    if (*tonemap) return cmd_tonemap(tm, out);
    if (*bench) return cmd_bench(bn, out);
  } catch (const UsageError& e) {
    err << "warmgray: " << e.what() << '\n';
    return exit_usage;
  } catch (const IoError& e) {
    err << "warmgray: " << e.what() << '\n';
    return exit_io;
  } catch (const std::exception& e) {
    err << "warmgray: " << e.what() << '\n';
    return exit_compute;
  }
  return exit_usage;
}

}  // namespace warmgray::cli
