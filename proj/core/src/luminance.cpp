#include "warmgray/luminance.hpp"

#include "warmgray/colorspaces.hpp"
#include "warmgray/parallel.hpp"

namespace warmgray {

std::optional<LuminanceMethod> parse_method(std::string_view name) noexcept {
  if (name == "ours") return LuminanceMethod::ours;
  if (name == "y") return LuminanceMethod::y;
  if (name == "v") return LuminanceMethod::v;
  if (name == "lab") return LuminanceMethod::lab;
  if (name == "weighted") return LuminanceMethod::weighted;
  return std::nullopt;
}

std::string_view method_name(LuminanceMethod method) noexcept {
  switch (method) {
    case LuminanceMethod::ours: return "ours";
    case LuminanceMethod::y: return "y";
    case LuminanceMethod::v: return "v";
    case LuminanceMethod::lab: return "lab";
    case LuminanceMethod::weighted: return "weighted";
  }
  return "unknown";
}

double luminance_of(const RgbPixel& p, LuminanceMethod method,
                    const DecolorParams& params) noexcept {
  switch (method) {
    case LuminanceMethod::ours: return decolor_pixel(p, params);
    case LuminanceMethod::y:
    case LuminanceMethod::weighted: return luma_weighted(p);
    case LuminanceMethod::v: return hsv_v(p);
    case LuminanceMethod::lab: return lab_lightness(p);
  }
  return 0.0;
}

namespace {

template <typename PixelFn>
PlanarImage map_pixels(const PlanarImage& rgb, unsigned threads, PixelFn fn) {
  PlanarImage out = PlanarImage::luminance(rgb.width(), rgb.height());
  const std::size_t width = rgb.width();
  for_each_row_block(rgb.height(), threads, [&](std::size_t y0, std::size_t y1) {
    for (std::size_t y = y0; y < y1; ++y) {
      const double* src = rgb.row(y).data();
      double* dst = out.row(y).data();
      for (std::size_t x = 0; x < width; ++x, src += 3) {
        dst[x] = fn(RgbPixel{src[0], src[1], src[2]});
      }
    }
  });
  return out;
}

}  // namespace

PlanarImage extract_luminance(const PlanarImage& rgb, LuminanceMethod method,
                              const DecolorParams& params, unsigned threads) {
  require_kind(rgb, PixelKind::rgb, "extract_luminance");
  switch (method) {
    case LuminanceMethod::ours:
      return decolor_image(rgb, params, threads);
    case LuminanceMethod::y:
    case LuminanceMethod::weighted:
      return map_pixels(rgb, threads, [](const RgbPixel& p) { return luma_weighted(p); });
    case LuminanceMethod::v:
      return map_pixels(rgb, threads, [](const RgbPixel& p) { return hsv_v(p); });
    case LuminanceMethod::lab:
      return map_pixels(rgb, threads, [](const RgbPixel& p) { return lab_lightness(p); });
  }
  return PlanarImage::luminance(rgb.width(), rgb.height());
}

}  // namespace warmgray
