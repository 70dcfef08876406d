#pragma once

// Tone mapping on a luminance channel and color reinstatement.
//
// Global mode remaps luminance through a centered logistic curve. Local mode
// builds one cumulative-histogram curve per tile and bilinearly interpolates
// the four surrounding curves at every pixel, which keeps tile seams smooth
// and costs O(1) per pixel regardless of tile size.

#include <cstddef>
#include <span>
#include <vector>

#include "warmgray/image.hpp"

namespace warmgray {

/// Monotone piecewise-linear map of [0,1] onto [0,1] with uniformly spaced knots.
class ToneCurve {
 public:
  /// Identity curve with `segments` linear pieces.
  static ToneCurve identity(std::size_t segments);
  /// Equalization curve from a histogram over uniformly spaced bins. The knot
  /// at bin edge k is the fraction of samples in bins below k. Histograms with
  /// fewer than two occupied bins produce the identity.
  static ToneCurve from_histogram(std::span<const std::size_t> counts);

  double operator()(double v) const noexcept;
  std::span<const double> knots() const noexcept { return knots_; }

 private:
  explicit ToneCurve(std::vector<double> knots) : knots_(std::move(knots)) {}
  std::vector<double> knots_;
};

/// Logistic curve centered on `midpoint`, rescaled to map 0 -> 0 and 1 -> 1.
class SigmoidCurve {
 public:
  static constexpr double default_midpoint = 0.5;
  static constexpr double default_slope = 8.0;

  SigmoidCurve() : SigmoidCurve(default_midpoint, default_slope) {}
  /// Throws std::invalid_argument for slope <= 0 or midpoint outside [0,1].
  SigmoidCurve(double midpoint, double slope);

  double midpoint() const noexcept { return midpoint_; }
  double slope() const noexcept { return slope_; }

  double operator()(double v) const noexcept;

 private:
  double midpoint_;
  double slope_;
  double low_;
  double range_;
};

struct LocalHistogramGrid {
  static constexpr std::size_t default_tiles = 8;
  static constexpr std::size_t default_bins = 256;
  static constexpr double default_strength = 0.7;

  std::size_t tile_w = 64;
  std::size_t tile_h = 64;
  std::size_t bins = default_bins;
  /// 0 keeps the input, 1 applies the equalized curves fully.
  double strength = default_strength;

  /// Grid of tiles_x by tiles_y tiles covering a width x height image.
  static LocalHistogramGrid for_image(std::size_t width, std::size_t height,
                                      std::size_t tiles_x = default_tiles,
                                      std::size_t tiles_y = default_tiles);

  /// Throws std::invalid_argument for zero tiles, bins < 2, or strength outside [0,1].
  void validate() const;
};

PlanarImage apply_sigmoid(const PlanarImage& lum, const SigmoidCurve& curve, unsigned threads = 1);

/// Tiles larger than the image are clamped to the image size.
PlanarImage apply_local_lhe(const PlanarImage& lum, const LocalHistogramGrid& grid,
                            unsigned threads = 1);

inline constexpr double reinstate_epsilon = 1e-6;

/// Scales each RGB channel by l_out / max(l_in, eps) and clamps to [0,1];
/// pixels with l_in == 0 become black.
PlanarImage reinstate_color(const PlanarImage& rgb, const PlanarImage& l_in,
                            const PlanarImage& l_out, unsigned threads = 1);

}  // namespace warmgray
