#include "warmgray/decolor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "warmgray/parallel.hpp"

namespace warmgray {

DecolorParams::DecolorParams(double beta_r, double beta_k) : beta_r_(beta_r), beta_k_(beta_k) {
  if (!valid_weight(beta_r)) {
    throw std::invalid_argument("beta_r must lie in (0.5, 1), got " + std::to_string(beta_r));
  }
  if (!valid_weight(beta_k)) {
    throw std::invalid_argument("beta_k must lie in (0.5, 1), got " + std::to_string(beta_k));
  }
}

double l_white(const RgbPixel& p) noexcept {
  return std::sqrt((p.r * p.r + p.g * p.g + p.b * p.b) / 3.0);
}

double l_blue(const RgbPixel& p) noexcept { return p.b; }

double l_gr(const RgbPixel& p, const DecolorParams& params) noexcept {
  const double w = params.beta_r();
  return std::sqrt(w * p.r * p.r + (1.0 - w) * p.g * p.g);
}

namespace {

// Channel share of the pixel sum; black pixels have no share.
double share(double channel, const RgbPixel& p) noexcept {
  const double sum = p.r + p.g + p.b;
  return sum > 0.0 ? channel / sum : 0.0;
}

}  // namespace

double l_warm(const RgbPixel& p, const DecolorParams& params) noexcept {
  const double ratio = share(p.r, p);
  return ratio * l_gr(p, params) + (1.0 - ratio) * l_white(p);
}

double l_cool(const RgbPixel& p) noexcept {
  const double ratio = share(p.b, p);
  return (1.0 - ratio) * l_blue(p) + ratio * l_white(p);
}

double decolor_pixel(const RgbPixel& p, const DecolorParams& params) noexcept {
  const double warm = l_warm(p, params);
  const double cool = l_cool(p);
  const double k = params.beta_k();
  const double lum = std::sqrt(k * warm * warm + (1.0 - k) * cool * cool);
  return lum < 1.0 ? lum : 1.0;
}

PlanarImage decolor_image(const PlanarImage& rgb, const DecolorParams& params, unsigned threads) {
  require_kind(rgb, PixelKind::rgb, "decolor_image");
  PlanarImage out = PlanarImage::luminance(rgb.width(), rgb.height());
  if (out.empty()) return out;

  const double beta_r = params.beta_r();
  const double beta_k = params.beta_k();
  const std::size_t width = rgb.width();
  for_each_row_block(rgb.height(), threads, [&](std::size_t y0, std::size_t y1) {
    for (std::size_t y = y0; y < y1; ++y) {
      const double* src = rgb.row(y).data();
      double* dst = out.row(y).data();
      for (std::size_t x = 0; x < width; ++x, src += 3) {
        dst[x] = decolor_kernel(src[0], src[1], src[2], beta_r, beta_k);
      }
    }
  });
  return out;
}

}  // namespace warmgray
