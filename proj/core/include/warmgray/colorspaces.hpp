#pragma once

// Baseline luminance extractors (BT.601 weighted sum, HSV value, CIELAB
// lightness) and the CIE76 color difference used by the metrics.

#include "warmgray/image.hpp"

namespace warmgray {

struct LabColor {
  double l_star = 0.0;
  double a_star = 0.0;
  double b_star = 0.0;
};

/// 0.2989 R + 0.5870 G + 0.1140 B. Also serves as full-range Y of YCbCr.
double luma_weighted(const RgbPixel& p) noexcept;

/// max(R, G, B).
double hsv_v(const RgbPixel& p) noexcept;

/// sRGB electro-optical transfer function (IEC 61966-2-1 piecewise curve).
double srgb_to_linear(double encoded) noexcept;

/// sRGB (D65, 2 degree observer) to CIELAB.
LabColor rgb_to_lab(const RgbPixel& p) noexcept;

/// CIELAB lightness rescaled to [0,1]. Only evaluates the Y row.
double lab_lightness(const RgbPixel& p) noexcept;

/// Euclidean distance in CIELAB.
double delta_e76(const LabColor& a, const LabColor& b) noexcept;

}  // namespace warmgray
