#pragma once

// Per-pixel timing of the luminance kernels. Times are wall-clock medians of
// repeated conversions of an in-memory image, excluding any I/O. The
// normalized figure rescales the per-pixel time to a 2.7 GHz reference clock:
// normalized_us = per_pixel_ns * (cpu_ghz / 2.7) / 1000.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "warmgray/image.hpp"
#include "warmgray/luminance.hpp"

namespace warmgray {

inline constexpr double reference_ghz = 2.7;
inline constexpr int min_bench_repeats = 5;

struct BenchResult {
  std::string method;
  std::size_t width = 0;
  std::size_t height = 0;
  double wall_ns = 0.0;
  double per_pixel_ns = 0.0;
  double normalized_us = 0.0;
};

struct BenchOptions {
  int repeats = min_bench_repeats;
  double cpu_ghz = reference_ghz;
  unsigned threads = 1;
  DecolorParams params{};

  /// Throws std::invalid_argument for repeats < 5 or a nonpositive clock.
  void validate() const;
};

/// Uniform random RGB image from a fixed-seed PRNG.
PlanarImage random_rgb_image(std::size_t width, std::size_t height, std::uint64_t seed = 42);

BenchResult bench_method(const PlanarImage& rgb, LuminanceMethod method, const BenchOptions& opts);

/// Tab-separated table with a header row.
void write_bench_tsv(std::ostream& out, std::span<const BenchResult> rows);

}  // namespace warmgray
