#pragma once

// 8-bit image codecs: binary PPM (P6) / PGM (P5) and PNG.
//
// Decoding normalizes samples to [0,1] (clamping is implicit for integer
// formats). Encoding quantizes with round-half-up after clamping.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "warmgray/errors.hpp"
#include "warmgray/image.hpp"

namespace warmgray {

/// floor(clamp(v, 0, 1) * 255 + 0.5).
std::uint8_t quantize8(double v) noexcept;

enum class ImageFormat { pnm, png };

/// Decodes P5/P6 (any maxval up to 65535). Throws IoError on malformed input.
PlanarImage decode_pnm(std::span<const std::uint8_t> bytes);
/// P6 for rgb images, P5 for luminance, maxval 255.
std::vector<std::uint8_t> encode_pnm(const PlanarImage& img);

/// Decodes 8/16-bit gray, gray+alpha, RGB, RGBA or palette PNG. Color PNGs
/// become rgb images, gray PNGs luminance images; alpha is dropped.
PlanarImage decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const PlanarImage& img);

/// Sniffs the format from the leading bytes.
PlanarImage decode_image(std::span<const std::uint8_t> bytes);

/// Format chosen by extension: .png -> PNG, .ppm/.pgm/.pnm -> PNM.
ImageFormat format_for_path(const std::filesystem::path& path);

PlanarImage read_image(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const PlanarImage& img);

/// Reads the image and converts it to RGB (gray inputs are replicated).
PlanarImage read_rgb_image(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace warmgray
