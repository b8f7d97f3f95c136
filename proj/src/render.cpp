#include "hardy/render.hpp"

#include <zlib.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

std::uint8_t channel(double v) {
  v = std::min(1.0, std::max(0.0, v));
  return static_cast<std::uint8_t>(std::lround(v * 255.0));
}

// piecewise-linear hue circle: t in [0,1) sweeps red -> yellow -> green ->
// cyan -> blue -> magenta -> red at full saturation and value
std::array<std::uint8_t, 3> hue_rgb(double t) {
  const double h = 6.0 * t;
  const int sector = static_cast<int>(std::floor(h)) % 6;
  const double f = h - std::floor(h);
  switch (sector) {
    case 0: return {255, channel(f), 0};
    case 1: return {channel(1.0 - f), 255, 0};
    case 2: return {0, 255, channel(f)};
    case 3: return {0, channel(1.0 - f), 255};
    case 4: return {channel(f), 0, 255};
    default: return {255, 0, channel(1.0 - f)};
  }
}

}  // namespace

const std::array<std::array<std::uint8_t, 3>, 256>& hue_wheel() {
  static const auto table = [] {
    std::array<std::array<std::uint8_t, 3>, 256> t{};
    for (int k = 0; k < 256; ++k) t[k] = hue_rgb(k / 256.0);
    return t;
  }();
  return table;
}

RenderResult render_field(const RenderSpec& spec, const MapFn& target) {
  if (spec.width < 16 || spec.height < 16)
    throw invalid_input("render: width and height must be at least 16");
  if (!(spec.x_max > spec.x_min) || !(spec.y_max > spec.y_min))
    throw invalid_input("render: empty coordinate range");

  RenderResult out;
  out.width = spec.width;
  out.height = spec.height;
  out.rgb.assign(static_cast<std::size_t>(spec.width) * spec.height * 3, 0);
  out.field.assign(static_cast<std::size_t>(spec.width) * spec.height, 0.0);

  const auto& wheel = hue_wheel();
  const double dx = (spec.x_max - spec.x_min) / spec.width;
  const double dy = (spec.y_max - spec.y_min) / spec.height;

  for (int row = 0; row < spec.height; ++row) {
    const double y = spec.y_max - (row + 0.5) * dy;  // top row = max y
    for (int col = 0; col < spec.width; ++col) {
      const double x = spec.x_min + (col + 0.5) * dx;
      const cplx z = std::exp(cplx(-y, x));
      const std::size_t pix = static_cast<std::size_t>(row) * spec.width + col;

      cplx value;
      bool ok = true;
      try {
        value = target(z);
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) ok = false;
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) {
        ++out.failed_pixels;
        continue;  // black
      }

      if (spec.mode == RenderMode::phase) {
        const double phase = std::arg(value);  // in (-pi, pi]
        out.field[pix] = phase;
        int idx = static_cast<int>(
            std::floor((phase + std::numbers::pi) / (2.0 * std::numbers::pi) * 256.0));
        if (idx >= 256) idx = 0;  // phase == pi wraps onto the seam
        if (idx < 0) idx = 0;
        const auto& c = wheel[static_cast<std::size_t>(idx)];
        out.rgb[3 * pix] = c[0];
        out.rgb[3 * pix + 1] = c[1];
        out.rgb[3 * pix + 2] = c[2];
      } else {
        const double mag = std::abs(value);
        double v = (mag > 0.0) ? -std::log(mag) : 10.0;
        v = std::min(10.0, std::max(0.0, v));
        out.field[pix] = v;
        const std::uint8_t g = channel(v / 10.0);
        out.rgb[3 * pix] = g;
        out.rgb[3 * pix + 1] = g;
        out.rgb[3 * pix + 2] = g;
      }
    }
  }

  if (out.failed_pixels * 1000 > static_cast<std::size_t>(spec.width) * spec.height)
    throw numerical_failure("render: evaluation failed on more than 0.1% of pixels");
  return out;
}

void write_ppm(const std::string& path, const RenderResult& image) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw invalid_input("write_ppm: cannot open " + path);
  f << "P6\n" << image.width << " " << image.height << "\n255\n";
  f.write(reinterpret_cast<const char*>(image.rgb.data()),
          static_cast<std::streamsize>(image.rgb.size()));
  if (!f) throw numerical_failure("write_ppm: write failed");
}

namespace {

void png_chunk(std::ofstream& f, const char type[4], const std::vector<std::uint8_t>& data) {
  auto be32 = [](std::uint32_t v) {
    return std::array<std::uint8_t, 4>{static_cast<std::uint8_t>(v >> 24),
                                       static_cast<std::uint8_t>(v >> 16),
                                       static_cast<std::uint8_t>(v >> 8),
                                       static_cast<std::uint8_t>(v)};
  };
  const auto len = be32(static_cast<std::uint32_t>(data.size()));
  f.write(reinterpret_cast<const char*>(len.data()), 4);
  f.write(type, 4);
  if (!data.empty())
    f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  std::uint32_t crc = crc32(0L, nullptr, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(type), 4);
  if (!data.empty()) crc = crc32(crc, data.data(), static_cast<uInt>(data.size()));
  const auto crcb = be32(crc);
  f.write(reinterpret_cast<const char*>(crcb.data()), 4);
}

}  // namespace

void write_png(const std::string& path, const RenderResult& image) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw invalid_input("write_png: cannot open " + path);
  static const std::uint8_t magic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  f.write(reinterpret_cast<const char*>(magic), 8);

  std::vector<std::uint8_t> ihdr(13);
  auto put32 = [&](std::size_t at, std::uint32_t v) {
    ihdr[at] = static_cast<std::uint8_t>(v >> 24);
    ihdr[at + 1] = static_cast<std::uint8_t>(v >> 16);
    ihdr[at + 2] = static_cast<std::uint8_t>(v >> 8);
    ihdr[at + 3] = static_cast<std::uint8_t>(v);
  };
  put32(0, static_cast<std::uint32_t>(image.width));
  put32(4, static_cast<std::uint32_t>(image.height));
  ihdr[8] = 8;   // bit depth
  ihdr[9] = 2;   // truecolor
  ihdr[10] = ihdr[11] = ihdr[12] = 0;
  png_chunk(f, "IHDR", ihdr);

  // filter byte 0 per scanline, then a fixed-level deflate
  std::vector<std::uint8_t> raw;
  raw.reserve(static_cast<std::size_t>(image.height) * (1 + 3 * image.width));
  for (int row = 0; row < image.height; ++row) {
    raw.push_back(0);
    const std::size_t off = static_cast<std::size_t>(row) * image.width * 3;
    raw.insert(raw.end(), image.rgb.begin() + static_cast<std::ptrdiff_t>(off),
               image.rgb.begin() + static_cast<std::ptrdiff_t>(off + 3 * image.width));
  }
  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> compressed(bound);
  if (compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6) != Z_OK)
    throw numerical_failure("write_png: deflate failed");
  compressed.resize(bound);
  png_chunk(f, "IDAT", compressed);
  png_chunk(f, "IEND", {});
  if (!f) throw numerical_failure("write_png: write failed");
}

}  // namespace hardy
