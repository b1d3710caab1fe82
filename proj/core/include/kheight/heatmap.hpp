#pragma once

#include "kheight/graph.hpp"
#include "kheight/heights.hpp"

#include <cstdint>
#include <string>

namespace kheight {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Linear ramp from low_color (value 0) to high_color (value k), rounded
// half up per channel. k = 0 maps everything to low_color.
inline constexpr Rgb low_color{33, 102, 172};
inline constexpr Rgb high_color{214, 47, 39};
Rgb ramp_color(int value, int k);

enum class ImageFormat { ppm, svg };

struct Image {
  ImageFormat format = ImageFormat::ppm;
  std::string data;
  std::string extension() const { return format == ImageFormat::ppm ? "ppm" : "svg"; }
};

struct HeatmapOptions {
  int cell = 8;  // pixels per cell side (PPM) or per node spacing unit (SVG)
};

// Binary P6 for rect and hex tori: a rect torus is g x h cells, a hex
// torus 2g x h with the lower triangle of point (x, y) at column 2x and
// the upper at 2x+1. Other graphs become an SVG of disks on a circle.
Image render_heatmap(const Graph& graph, const KHeight& x, const HeatmapOptions& options = {});

}  // namespace kheight
