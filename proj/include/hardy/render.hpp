#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hardy/blaschke.hpp"

namespace hardy {

enum class RenderMode { phase, neglog_modulus };

// Deterministic field render over the strip coordinates (x, y), pixel
// coordinates mapping to z = exp(-y + i x); the top row carries the
// largest y. Phase mode maps arg in (-pi, pi] linearly onto a cyclic
// 256-entry hue wheel; neglog mode maps -ln|.| clipped to [0, 10]
// linearly to grayscale.
struct RenderSpec {
  double x_min = -3.141592653589793;
  double x_max = 3.141592653589793;
  double y_min = 0.001;
  double y_max = 6.0;
  int width = 256;
  int height = 256;
  RenderMode mode = RenderMode::phase;
};

struct RenderResult {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;      // row-major, 3 bytes per pixel
  std::vector<double> field;          // the scalar values behind the colors
  std::size_t failed_pixels = 0;      // painted black
};

using MapFn = std::function<cplx(cplx)>;

RenderResult render_field(const RenderSpec& spec, const MapFn& target);

void write_ppm(const std::string& path, const RenderResult& image);
void write_png(const std::string& path, const RenderResult& image);

// the documented hue wheel; entry k colors phases in
// [-pi + 2 pi k/256, -pi + 2 pi (k+1)/256)
const std::array<std::array<std::uint8_t, 3>, 256>& hue_wheel();

}  // namespace hardy
