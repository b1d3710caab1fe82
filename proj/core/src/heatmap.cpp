#include "kheight/heatmap.hpp"

#include "kheight/error.hpp"

#include <cmath>
#include <cstdio>

namespace kheight {
namespace {

std::uint8_t lerp(int a, int b, int v, int k) {
  // round(a + (b - a) v / k) with non-negative integer arithmetic
  long num = 2L * a * (k - v) + 2L * b * v + k;
  return static_cast<std::uint8_t>(num / (2L * k));
}

std::string hex_color(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

Image render_ppm(std::size_t width, std::size_t height, int cell,
                 const std::vector<Rgb>& cells) {
  Image img;
  img.format = ImageFormat::ppm;
  const std::size_t W = width * cell, H = height * cell;
  img.data = "P6\n" + std::to_string(W) + " " + std::to_string(H) + "\n255\n";
  img.data.reserve(img.data.size() + 3 * W * H);
  for (std::size_t py = 0; py < H; ++py)
    for (std::size_t px = 0; px < W; ++px) {
      Rgb c = cells[(py / cell) * width + px / cell];
      img.data += static_cast<char>(c.r);
      img.data += static_cast<char>(c.g);
      img.data += static_cast<char>(c.b);
    }
  return img;
}

Image render_svg(const Graph& graph, const KHeight& x, int cell) {
  const std::size_t n = graph.size();
  const double radius = std::max(2.0, 1.5 * cell * double(n) / 6.283185307179586);
  const double margin = 2.0 * cell;
  const double size = 2 * (radius + margin);
  std::vector<std::pair<double, double>> pos(n);
  for (std::size_t v = 0; v < n; ++v) {
    double a = 6.283185307179586 * double(v) / double(std::max<std::size_t>(n, 1));
    pos[v] = {size / 2 + radius * std::sin(a), size / 2 - radius * std::cos(a)};
  }
  auto num = [](double d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", d);
    return std::string(buf);
  };
  Image img;
  img.format = ImageFormat::svg;
  std::string& s = img.data;
  s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) + "\" height=\"" +
      num(size) + "\">\n";
  for (auto [u, v] : graph.edges())
    s += "<line x1=\"" + num(pos[u].first) + "\" y1=\"" + num(pos[u].second) + "\" x2=\"" +
         num(pos[v].first) + "\" y2=\"" + num(pos[v].second) + "\" stroke=\"#888888\"/>\n";
  for (std::size_t v = 0; v < n; ++v)
    s += "<circle cx=\"" + num(pos[v].first) + "\" cy=\"" + num(pos[v].second) + "\" r=\"" +
         num(0.5 * cell) + "\" fill=\"" + hex_color(ramp_color(x[v], x.k())) + "\"/>\n";
  s += "</svg>\n";
  return img;
}

}  // namespace

Rgb ramp_color(int value, int k) {
  if (k < 0 || value < 0 || value > k) throw InvalidInput("value outside 0..k");
  if (k == 0) return low_color;
  return {lerp(low_color.r, high_color.r, value, k), lerp(low_color.g, high_color.g, value, k),
          lerp(low_color.b, high_color.b, value, k)};
}

Image render_heatmap(const Graph& graph, const KHeight& x, const HeatmapOptions& options) {
  if (x.size() != graph.size()) throw InvalidInput("height does not match the graph");
  if (options.cell < 1) throw InvalidInput("cell size must be positive");
  const auto& dims = graph.torus();
  if (dims && graph.kind() == GraphKind::rect_torus) {
    std::vector<Rgb> cells(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v) cells[v] = ramp_color(x[v], x.k());
    return render_ppm(dims->g, dims->h, options.cell, cells);
  }
  if (dims && graph.kind() == GraphKind::hex_torus) {
    // index 2(y g + x) + t lands at row y, column 2x + t
    std::vector<Rgb> cells(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v) cells[v] = ramp_color(x[v], x.k());
    return render_ppm(2 * dims->g, dims->h, options.cell, cells);
  }
  return render_svg(graph, x, options.cell);
}

}  // namespace kheight
