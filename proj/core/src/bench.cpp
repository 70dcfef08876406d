#include "warmgray/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace warmgray {

void BenchOptions::validate() const {
  if (repeats < min_bench_repeats) {
    throw std::invalid_argument("repeats must be >= " + std::to_string(min_bench_repeats));
  }
  if (!(cpu_ghz > 0.0)) throw std::invalid_argument("cpu clock must be positive");
}

PlanarImage random_rgb_image(std::size_t width, std::size_t height, std::uint64_t seed) {
  PlanarImage img = PlanarImage::rgb(width, height);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double& v : img.samples()) v = unit(rng);
  return img;
}

namespace {

// Keeps the timed conversions observable to the optimizer.
volatile double bench_sink = 0.0;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

BenchResult bench_method(const PlanarImage& rgb, LuminanceMethod method, const BenchOptions& opts) {
  opts.validate();
  require_kind(rgb, PixelKind::rgb, "bench_method");

  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(opts.repeats));
  double sink = 0.0;
  for (int i = 0; i < opts.repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const PlanarImage gray = extract_luminance(rgb, method, opts.params, opts.threads);
    const auto stop = std::chrono::steady_clock::now();
    if (!gray.empty()) sink += gray.samples()[gray.pixel_count() / 2];
    samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  bench_sink = sink;

  BenchResult r;
  r.method = std::string(method_name(method));
  r.width = rgb.width();
  r.height = rgb.height();
  r.wall_ns = std::max(median(std::move(samples)), 1.0);
  const double pixels = static_cast<double>(std::max<std::size_t>(rgb.pixel_count(), 1));
  r.per_pixel_ns = r.wall_ns / pixels;
  r.normalized_us = r.per_pixel_ns * (opts.cpu_ghz / reference_ghz) / 1000.0;
  return r;
}

void write_bench_tsv(std::ostream& out, std::span<const BenchResult> rows) {
  out << "method\twidth\theight\twall_ns\tper_pixel_ns\tnormalized_us\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s\t%zu\t%zu\t%.0f\t%.4f\t%.6f\n", r.method.c_str(), r.width,
                  r.height, r.wall_ns, r.per_pixel_ns, r.normalized_us);
    out << buf;
  }
}

}  // namespace warmgray
