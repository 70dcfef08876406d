#include "warmgray/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "warmgray/errors.hpp"

namespace warmgray {

double clamp_unit(double v) noexcept {
  if (!(v > 0.0)) return 0.0;  // also catches NaN
  return v < 1.0 ? v : 1.0;
}

RgbPixel clamp_pixel(RgbPixel p) noexcept {
  return {clamp_unit(p.r), clamp_unit(p.g), clamp_unit(p.b)};
}

PlanarImage::PlanarImage(std::size_t width, std::size_t height, PixelKind kind)
    : width_(width), height_(height), kind_(kind), data_(width * height * channel_count(kind), 0.0) {}

PlanarImage::PlanarImage(std::size_t width, std::size_t height, PixelKind kind,
                         std::vector<double> samples)
    : width_(width), height_(height), kind_(kind), data_(std::move(samples)) {
  if (data_.size() != width * height * channel_count(kind)) {
    throw std::invalid_argument("image sample count " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(width) + "x" +
                                std::to_string(height) + "x" +
                                std::to_string(channel_count(kind)));
  }
  for (double v : data_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("image sample outside [0,1]: " + std::to_string(v));
    }
  }
}

void require_kind(const PlanarImage& img, PixelKind kind, const char* what) {
  if (img.kind() != kind) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                (kind == PixelKind::rgb ? "an rgb" : "a luminance") + " image");
  }
}

void require_same_shape(const PlanarImage& a, const PlanarImage& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionMismatch(std::string(what) + ": image dimensions differ (" +
                            std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                            " vs " + std::to_string(b.width()) + "x" +
                            std::to_string(b.height()) + ")");
  }
}

}  // namespace warmgray
