#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace warmgray {

/// One color sample with channels normalized to [0,1].
template <std::floating_point T>
struct BasicRgb {
  T r{};
  T g{};
  T b{};

  friend constexpr bool operator==(const BasicRgb&, const BasicRgb&) = default;
};

using RgbPixel = BasicRgb<double>;

/// Clamps every channel into [0,1]; NaN becomes 0. Used at ingestion only.
RgbPixel clamp_pixel(RgbPixel p) noexcept;
double clamp_unit(double v) noexcept;

enum class PixelKind { rgb, luminance };

constexpr std::size_t channel_count(PixelKind kind) noexcept {
  return kind == PixelKind::rgb ? 3 : 1;
}

/// Row-major raster of either interleaved RGB triples or scalar luminance.
///
/// Samples are doubles in [0,1]. The constructor taking a sample vector
/// rejects mismatched lengths and out-of-range or non-finite samples;
/// decoders clamp before constructing.
class PlanarImage {
 public:
  PlanarImage() = default;
  PlanarImage(std::size_t width, std::size_t height, PixelKind kind);
  PlanarImage(std::size_t width, std::size_t height, PixelKind kind,
              std::vector<double> samples);

  static PlanarImage rgb(std::size_t width, std::size_t height) {
    return {width, height, PixelKind::rgb};
  }
  static PlanarImage luminance(std::size_t width, std::size_t height) {
    return {width, height, PixelKind::luminance};
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  PixelKind kind() const noexcept { return kind_; }
  std::size_t channels() const noexcept { return channel_count(kind_); }
  std::size_t pixel_count() const noexcept { return width_ * height_; }
  bool empty() const noexcept { return pixel_count() == 0; }

  std::span<const double> samples() const noexcept { return data_; }
  std::span<double> samples() noexcept { return data_; }

  std::span<const double> row(std::size_t y) const noexcept {
    return std::span<const double>(data_).subspan(y * width_ * channels(), width_ * channels());
  }
  std::span<double> row(std::size_t y) noexcept {
    return std::span<double>(data_).subspan(y * width_ * channels(), width_ * channels());
  }

  RgbPixel pixel(std::size_t index) const noexcept {
    const double* s = data_.data() + 3 * index;
    return {s[0], s[1], s[2]};
  }
  RgbPixel pixel(std::size_t x, std::size_t y) const noexcept { return pixel(y * width_ + x); }
  void set_pixel(std::size_t index, RgbPixel p) noexcept {
    double* s = data_.data() + 3 * index;
    s[0] = p.r;
    s[1] = p.g;
    s[2] = p.b;
  }
  void set_pixel(std::size_t x, std::size_t y, RgbPixel p) noexcept { set_pixel(y * width_ + x, p); }

  double& at(std::size_t x, std::size_t y) noexcept { return data_[y * width_ + x]; }
  double at(std::size_t x, std::size_t y) const noexcept { return data_[y * width_ + x]; }

  bool same_shape(const PlanarImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const PlanarImage&, const PlanarImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  PixelKind kind_ = PixelKind::luminance;
  std::vector<double> data_;
};

/// Throws std::invalid_argument unless img.kind() == kind.
void require_kind(const PlanarImage& img, PixelKind kind, const char* what);

/// Throws warmgray::DimensionMismatch unless the two images share width and height.
void require_same_shape(const PlanarImage& a, const PlanarImage& b, const char* what);

}  // namespace warmgray
