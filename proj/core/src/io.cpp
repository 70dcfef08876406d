#include "warmgray/io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace warmgray {

std::uint8_t quantize8(double v) noexcept {
  return static_cast<std::uint8_t>(std::floor(clamp_unit(v) * 255.0 + 0.5));
}

namespace {

class PnmReader {
 public:
  explicit PnmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long number() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw IoError("pnm: malformed header");
    }
    unsigned long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > (1ul << 31)) throw IoError("pnm: header value too large");
    }
    return v;
  }

  std::size_t pos_ = 0;
  std::span<const std::uint8_t> bytes_;
};

}  // namespace

PlanarImage decode_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw IoError("pnm: only binary P5/P6 files are supported");
  }
  const PixelKind kind = bytes[1] == '6' ? PixelKind::rgb : PixelKind::luminance;
  PnmReader reader(bytes);
  reader.pos_ = 2;
  const auto width = reader.number();
  const auto height = reader.number();
  const auto maxval = reader.number();
  if (maxval == 0 || maxval > 65535) throw IoError("pnm: maxval must be in 1..65535");
  if (reader.pos_ >= bytes.size() || !std::isspace(bytes[reader.pos_])) {
    throw IoError("pnm: missing separator after header");
  }
  ++reader.pos_;

  const std::size_t wide = maxval > 255 ? 2 : 1;
  const std::size_t count = static_cast<std::size_t>(width) * height * channel_count(kind);
  if (bytes.size() - reader.pos_ < count * wide) throw IoError("pnm: truncated pixel data");

  std::vector<double> samples(count);
  const std::uint8_t* p = bytes.data() + reader.pos_;
  const double scale = 1.0 / static_cast<double>(maxval);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned raw = wide == 2 ? (unsigned{p[2 * i]} << 8) | p[2 * i + 1] : p[i];
    samples[i] = std::min(1.0, raw * scale);
  }
  return PlanarImage(width, height, kind, std::move(samples));
}

std::vector<std::uint8_t> encode_pnm(const PlanarImage& img) {
  const std::string header = std::string(img.kind() == PixelKind::rgb ? "P6" : "P5") + "\n" +
                             std::to_string(img.width()) + " " + std::to_string(img.height()) +
                             "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + img.samples().size());
  for (double v : img.samples()) out.push_back(quantize8(v));
  return out;
}

namespace {

struct PngImage {
  png_image image{};
  PngImage() {
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;
};

}  // namespace

PlanarImage decode_png(std::span<const std::uint8_t> bytes) {
  PngImage png;
  if (!png_image_begin_read_from_memory(&png.image, bytes.data(), bytes.size())) {
    throw IoError(std::string("png: ") + png.image.message);
  }
  const bool color = (png.image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(png.image));
  png_color black{0, 0, 0};
  if (!png_image_finish_read(&png.image, &black, buffer.data(), 0, nullptr)) {
    throw IoError(std::string("png: ") + png.image.message);
  }
  std::vector<double> samples(buffer.size());
  std::transform(buffer.begin(), buffer.end(), samples.begin(),
                 [](std::uint8_t v) { return v / 255.0; });
  return PlanarImage(png.image.width, png.image.height,
                     color ? PixelKind::rgb : PixelKind::luminance, std::move(samples));
}

std::vector<std::uint8_t> encode_png(const PlanarImage& img) {
  if (img.empty()) throw IoError("png: cannot encode an empty image");
  std::vector<std::uint8_t> pixels(img.samples().size());
  std::transform(img.samples().begin(), img.samples().end(), pixels.begin(), quantize8);

  PngImage png;
  png.image.width = static_cast<png_uint_32>(img.width());
  png.image.height = static_cast<png_uint_32>(img.height());
  png.image.format = img.kind() == PixelKind::rgb ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

  png_alloc_size_t size = 0;
  if (!png_image_write_get_memory_size(png.image, size, 0, pixels.data(), 0, nullptr)) {
    throw IoError(std::string("png: ") + png.image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&png.image, out.data(), &size, 0, pixels.data(), 0, nullptr)) {
    throw IoError(std::string("png: ") + png.image.message);
  }
  out.resize(size);
  return out;
}

PlanarImage decode_image(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t png_magic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::equal(std::begin(png_magic), std::end(png_magic), bytes.begin())) {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P') return decode_pnm(bytes);
  throw IoError("unsupported image format (expected PNG or binary PPM/PGM)");
}

ImageFormat format_for_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".png") return ImageFormat::png;
  if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm") return ImageFormat::pnm;
  throw IoError("unsupported output extension '" + ext + "' (use .png, .ppm or .pgm)");
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("error writing " + path.string());
}

PlanarImage read_image(const std::filesystem::path& path) {
  try {
    return decode_image(read_file(path));
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_image(const std::filesystem::path& path, const PlanarImage& img) {
  const auto format = format_for_path(path);
  write_file(path, format == ImageFormat::png ? encode_png(img) : encode_pnm(img));
}

PlanarImage read_rgb_image(const std::filesystem::path& path) {
  PlanarImage img = read_image(path);
  if (img.kind() == PixelKind::rgb) return img;
  PlanarImage rgb = PlanarImage::rgb(img.width(), img.height());
  const auto src = img.samples();
  for (std::size_t i = 0; i < src.size(); ++i) rgb.set_pixel(i, {src[i], src[i], src[i]});
  return rgb;
}

}  // namespace warmgray
