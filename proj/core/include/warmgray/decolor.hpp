#pragma once

// Warm/cool color-temperature decolorization.
//
// Each pixel is reduced to one luminance value by blending a warm response
// (red-weighted distance of R and G, mixed with the white distance by the
// red ratio) and a cool response (the blue channel, mixed with the white
// distance by the blue ratio). All functions operate on gamma-encoded
// channels in [0,1] and are degree-1 homogeneous in the input pixel.

#include <cmath>

#include "warmgray/image.hpp"

namespace warmgray {

/// Blending weights. Both must lie strictly inside (0.5, 1).
class DecolorParams {
 public:
  static constexpr double default_beta_r = 0.55;
  static constexpr double default_beta_k = 0.8;

  DecolorParams() = default;
  /// Throws std::invalid_argument when either weight is outside (0.5, 1).
  DecolorParams(double beta_r, double beta_k);

  /// Weight of R against G in the warm distance.
  double beta_r() const noexcept { return beta_r_; }
  /// Weight of the warm response against the cool response.
  double beta_k() const noexcept { return beta_k_; }

  static bool valid_weight(double w) noexcept { return w > 0.5 && w < 1.0; }

 private:
  double beta_r_ = default_beta_r;
  double beta_k_ = default_beta_k;
};

/// Root-mean-square of the three channels.
double l_white(const RgbPixel& p) noexcept;
/// The blue channel.
double l_blue(const RgbPixel& p) noexcept;
/// sqrt(beta_r * r^2 + (1 - beta_r) * g^2).
double l_gr(const RgbPixel& p, const DecolorParams& params) noexcept;
/// Blend of l_gr and l_white by r / (r + g + b); black maps to 0.
double l_warm(const RgbPixel& p, const DecolorParams& params) noexcept;
/// Blend of l_blue and l_white by b / (r + g + b); black maps to 0.
double l_cool(const RgbPixel& p) noexcept;
/// sqrt(beta_k * warm^2 + (1 - beta_k) * cool^2), in [0,1].
double decolor_pixel(const RgbPixel& p, const DecolorParams& params) noexcept;

/// Fused kernel used by the image driver. Matches decolor_pixel to rounding.
inline double decolor_kernel(double r, double g, double b, double beta_r, double beta_k) noexcept {
  const double sum = r + g + b;
  if (!(sum > 0.0)) return 0.0;
  const double inv = 1.0 / sum;
  const double rr = r * r;
  const double gg = g * g;
  const double white = std::sqrt((rr + gg + b * b) * (1.0 / 3.0));
  const double gr = std::sqrt(beta_r * rr + (1.0 - beta_r) * gg);
  const double red_ratio = r * inv;
  const double blue_ratio = b * inv;
  const double warm = red_ratio * gr + (1.0 - red_ratio) * white;
  const double cool = (1.0 - blue_ratio) * b + blue_ratio * white;
  const double lum = std::sqrt(beta_k * warm * warm + (1.0 - beta_k) * cool * cool);
  return lum < 1.0 ? lum : 1.0;
}

/// Decolorizes every pixel of an RGB image. Rows are split across `threads`
/// workers (0 = hardware concurrency); the output does not depend on the
/// worker count. A zero-sized image yields an empty luminance image.
PlanarImage decolor_image(const PlanarImage& rgb, const DecolorParams& params = {},
                          unsigned threads = 1);

}  // namespace warmgray
