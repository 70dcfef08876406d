#include "warmgray/colorspaces.hpp"

#include <algorithm>
#include <cmath>

namespace warmgray {

namespace {

// Linear sRGB -> XYZ, D65.
constexpr double kM[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

// Reference white taken as the matrix row sums so that (1,1,1) lands on
// L* = 100, a* = b* = 0 without a residual from rounded constants.
constexpr double kWhiteX = kM[0][0] + kM[0][1] + kM[0][2];
constexpr double kWhiteY = kM[1][0] + kM[1][1] + kM[1][2];
constexpr double kWhiteZ = kM[2][0] + kM[2][1] + kM[2][2];

constexpr double kDelta = 6.0 / 29.0;
constexpr double kDelta3 = kDelta * kDelta * kDelta;

double lab_f(double t) noexcept {
  return t > kDelta3 ? std::cbrt(t) : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

}  // namespace

double luma_weighted(const RgbPixel& p) noexcept {
  return 0.2989 * p.r + 0.5870 * p.g + 0.1140 * p.b;
}

double hsv_v(const RgbPixel& p) noexcept { return std::max({p.r, p.g, p.b}); }

double srgb_to_linear(double c) noexcept {
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

LabColor rgb_to_lab(const RgbPixel& p) noexcept {
  const double r = srgb_to_linear(p.r);
  const double g = srgb_to_linear(p.g);
  const double b = srgb_to_linear(p.b);
  const double fx = lab_f((kM[0][0] * r + kM[0][1] * g + kM[0][2] * b) / kWhiteX);
  const double fy = lab_f((kM[1][0] * r + kM[1][1] * g + kM[1][2] * b) / kWhiteY);
  const double fz = lab_f((kM[2][0] * r + kM[2][1] * g + kM[2][2] * b) / kWhiteZ);
  return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

double lab_lightness(const RgbPixel& p) noexcept {
  const double y = (kM[1][0] * srgb_to_linear(p.r) + kM[1][1] * srgb_to_linear(p.g) +
                    kM[1][2] * srgb_to_linear(p.b)) /
                   kWhiteY;
  const double l = (116.0 * lab_f(y) - 16.0) / 100.0;
  return std::clamp(l, 0.0, 1.0);
}

double delta_e76(const LabColor& a, const LabColor& b) noexcept {
  const double dl = a.l_star - b.l_star;
  const double da = a.a_star - b.a_star;
  const double db = a.b_star - b.b_star;
  return std::sqrt(dl * dl + da * da + db * db);
}

}  // namespace warmgray
