#pragma once

#include <optional>
#include <string_view>

#include "warmgray/decolor.hpp"
#include "warmgray/image.hpp"

namespace warmgray {

/// Color-to-gray methods selectable from the command line.
enum class LuminanceMethod {
  ours,      ///< warm/cool decolorization
  y,         ///< Y of YCbCr (BT.601 full range)
  v,         ///< V of HSV
  lab,       ///< CIELAB L* / 100
  weighted,  ///< BT.601 weighted sum (rgb2gray)
};

std::optional<LuminanceMethod> parse_method(std::string_view name) noexcept;
std::string_view method_name(LuminanceMethod method) noexcept;

/// Per-pixel luminance of a single pixel with the selected method.
double luminance_of(const RgbPixel& p, LuminanceMethod method,
                    const DecolorParams& params = {}) noexcept;

/// Converts an RGB image to luminance with the selected method.
PlanarImage extract_luminance(const PlanarImage& rgb, LuminanceMethod method,
                              const DecolorParams& params = {}, unsigned threads = 1);

}  // namespace warmgray
