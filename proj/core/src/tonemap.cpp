#include "warmgray/tonemap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "warmgray/parallel.hpp"

namespace warmgray {

ToneCurve ToneCurve::identity(std::size_t segments) {
  segments = std::max<std::size_t>(segments, 1);
  std::vector<double> knots(segments + 1);
  for (std::size_t k = 0; k <= segments; ++k) {
    knots[k] = static_cast<double>(k) / static_cast<double>(segments);
  }
  return ToneCurve(std::move(knots));
}

ToneCurve ToneCurve::from_histogram(std::span<const std::size_t> counts) {
  std::size_t total = 0;
  std::size_t occupied = 0;
  for (std::size_t c : counts) {
    total += c;
    if (c > 0) ++occupied;
  }
  if (occupied < 2) return identity(counts.size());

  std::vector<double> knots(counts.size() + 1);
  std::size_t below = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    knots[k] = static_cast<double>(below) / static_cast<double>(total);
    below += counts[k];
  }
  knots.back() = 1.0;
  return ToneCurve(std::move(knots));
}

double ToneCurve::operator()(double v) const noexcept {
  const std::size_t segments = knots_.size() - 1;
  const double pos = std::clamp(v, 0.0, 1.0) * static_cast<double>(segments);
  const std::size_t k = std::min(static_cast<std::size_t>(pos), segments - 1);
  const double t = pos - static_cast<double>(k);
  return knots_[k] + t * (knots_[k + 1] - knots_[k]);
}

SigmoidCurve::SigmoidCurve(double midpoint, double slope) : midpoint_(midpoint), slope_(slope) {
  if (!(slope > 0.0) || !std::isfinite(slope)) {
    throw std::invalid_argument("sigmoid slope must be positive, got " + std::to_string(slope));
  }
  if (!(midpoint >= 0.0 && midpoint <= 1.0)) {
    throw std::invalid_argument("sigmoid midpoint must lie in [0,1], got " +
                                std::to_string(midpoint));
  }
  // tanh form of the logistic keeps full relative precision for tiny slopes.
  low_ = std::tanh(0.5 * slope_ * (0.0 - midpoint_));
  range_ = std::tanh(0.5 * slope_ * (1.0 - midpoint_)) - low_;
}

double SigmoidCurve::operator()(double v) const noexcept {
  const double raw = std::tanh(0.5 * slope_ * (v - midpoint_));
  return std::clamp((raw - low_) / range_, 0.0, 1.0);
}

LocalHistogramGrid LocalHistogramGrid::for_image(std::size_t width, std::size_t height,
                                                 std::size_t tiles_x, std::size_t tiles_y) {
  if (tiles_x == 0 || tiles_y == 0) throw std::invalid_argument("tile count must be >= 1");
  LocalHistogramGrid grid;
  grid.tile_w = std::max<std::size_t>(1, (width + tiles_x - 1) / tiles_x);
  grid.tile_h = std::max<std::size_t>(1, (height + tiles_y - 1) / tiles_y);
  return grid;
}

void LocalHistogramGrid::validate() const {
  if (tile_w == 0 || tile_h == 0) throw std::invalid_argument("tile dimensions must be >= 1");
  if (bins < 2) throw std::invalid_argument("histogram needs at least 2 bins");
  if (!(strength >= 0.0 && strength <= 1.0)) {
    throw std::invalid_argument("strength must lie in [0,1], got " + std::to_string(strength));
  }
}

PlanarImage apply_sigmoid(const PlanarImage& lum, const SigmoidCurve& curve, unsigned threads) {
  require_kind(lum, PixelKind::luminance, "apply_sigmoid");
  PlanarImage out = lum;
  for_each_row_block(out.height(), threads, [&](std::size_t y0, std::size_t y1) {
    for (std::size_t y = y0; y < y1; ++y) {
      for (double& v : out.row(y)) v = curve(v);
    }
  });
  return out;
}

namespace {

// Interpolation stencil along one axis: the two neighboring tile indices and
// the weight of the second one.
struct AxisWeight {
  std::size_t lo = 0;
  std::size_t hi = 0;
  double w = 0.0;
};

std::vector<AxisWeight> axis_weights(std::size_t length, std::size_t tile) {
  const std::size_t tiles = (length + tile - 1) / tile;
  std::vector<double> centers(tiles);
  for (std::size_t i = 0; i < tiles; ++i) {
    const std::size_t begin = i * tile;
    const std::size_t end = std::min(begin + tile, length);
    centers[i] = 0.5 * static_cast<double>(begin + end);
  }
  std::vector<AxisWeight> weights(length);
  std::size_t i = 0;
  for (std::size_t x = 0; x < length; ++x) {
    const double pos = static_cast<double>(x) + 0.5;
    if (pos <= centers.front()) {
      weights[x] = {0, 0, 0.0};
    } else if (pos >= centers.back()) {
      weights[x] = {tiles - 1, tiles - 1, 0.0};
    } else {
      while (centers[i + 1] <= pos) ++i;
      weights[x] = {i, i + 1, (pos - centers[i]) / (centers[i + 1] - centers[i])};
    }
  }
  return weights;
}

std::size_t bin_of(double v, std::size_t bins) noexcept {
  const auto b = static_cast<std::size_t>(std::clamp(v, 0.0, 1.0) * static_cast<double>(bins));
  return std::min(b, bins - 1);
}

}  // namespace

PlanarImage apply_local_lhe(const PlanarImage& lum, const LocalHistogramGrid& grid,
                            unsigned threads) {
  require_kind(lum, PixelKind::luminance, "apply_local_lhe");
  grid.validate();
  if (lum.empty() || grid.strength == 0.0) return lum;

  const std::size_t width = lum.width();
  const std::size_t height = lum.height();
  const std::size_t tile_w = std::min(grid.tile_w, width);
  const std::size_t tile_h = std::min(grid.tile_h, height);
  const std::size_t tiles_x = (width + tile_w - 1) / tile_w;
  const std::size_t tiles_y = (height + tile_h - 1) / tile_h;

  std::vector<ToneCurve> curves(tiles_x * tiles_y, ToneCurve::identity(grid.bins));
  for_each_row_block(tiles_y, threads, [&](std::size_t ty0, std::size_t ty1) {
    std::vector<std::size_t> counts(grid.bins);
    for (std::size_t ty = ty0; ty < ty1; ++ty) {
      for (std::size_t tx = 0; tx < tiles_x; ++tx) {
        std::fill(counts.begin(), counts.end(), 0);
        const std::size_t x_end = std::min((tx + 1) * tile_w, width);
        const std::size_t y_end = std::min((ty + 1) * tile_h, height);
        for (std::size_t y = ty * tile_h; y < y_end; ++y) {
          for (std::size_t x = tx * tile_w; x < x_end; ++x) ++counts[bin_of(lum.at(x, y), grid.bins)];
        }
        curves[ty * tiles_x + tx] = ToneCurve::from_histogram(counts);
      }
    }
  });

  const auto cols = axis_weights(width, tile_w);
  const auto rows = axis_weights(height, tile_h);
  const double s = grid.strength;

  PlanarImage out = PlanarImage::luminance(width, height);
  for_each_row_block(height, threads, [&](std::size_t y0, std::size_t y1) {
    for (std::size_t y = y0; y < y1; ++y) {
      const AxisWeight& ry = rows[y];
      const ToneCurve* top = &curves[ry.lo * tiles_x];
      const ToneCurve* bottom = &curves[ry.hi * tiles_x];
      for (std::size_t x = 0; x < width; ++x) {
        const AxisWeight& cx = cols[x];
        const double v = lum.at(x, y);
        const double upper = (1.0 - cx.w) * top[cx.lo](v) + cx.w * top[cx.hi](v);
        const double lower = (1.0 - cx.w) * bottom[cx.lo](v) + cx.w * bottom[cx.hi](v);
        const double mapped = (1.0 - ry.w) * upper + ry.w * lower;
        out.at(x, y) = std::clamp((1.0 - s) * v + s * mapped, 0.0, 1.0);
      }
    }
  });
  return out;
}

PlanarImage reinstate_color(const PlanarImage& rgb, const PlanarImage& l_in,
                            const PlanarImage& l_out, unsigned threads) {
  require_kind(rgb, PixelKind::rgb, "reinstate_color");
  require_kind(l_in, PixelKind::luminance, "reinstate_color l_in");
  require_kind(l_out, PixelKind::luminance, "reinstate_color l_out");
  require_same_shape(rgb, l_in, "reinstate_color");
  require_same_shape(rgb, l_out, "reinstate_color");

  PlanarImage out = PlanarImage::rgb(rgb.width(), rgb.height());
  const auto lin = l_in.samples();
  const auto lout = l_out.samples();
  const auto src = rgb.samples();
  auto dst = out.samples();
  const std::size_t width = rgb.width();
  for_each_row_block(rgb.height(), threads, [&](std::size_t y0, std::size_t y1) {
    for (std::size_t i = y0 * width; i < y1 * width; ++i) {
      if (lin[i] == 0.0) continue;
      const double ratio = lout[i] / std::max(lin[i], reinstate_epsilon);
      for (std::size_t c = 0; c < 3; ++c) {
        dst[3 * i + c] = std::clamp(src[3 * i + c] * ratio, 0.0, 1.0);
      }
    }
  });
  return out;
}

}  // namespace warmgray
