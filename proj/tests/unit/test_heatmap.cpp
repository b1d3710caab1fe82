#include "kheight/coupling.hpp"
#include "kheight/error.hpp"
#include "kheight/heatmap.hpp"
#include "kheight/io.hpp"

#include <gtest/gtest.h>

using namespace kheight;

namespace {

std::string pixels(const Image& img) {
  // skip the three header lines
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) pos = img.data.find('\n', pos) + 1;
  return img.data.substr(pos);
}

}  // namespace

TEST(Heatmap, RampEnds) {
  EXPECT_EQ(ramp_color(0, 3), low_color);
  EXPECT_EQ(ramp_color(3, 3), high_color);
  EXPECT_EQ(ramp_color(0, 0), low_color);
  Rgb mid = ramp_color(1, 2);
  EXPECT_EQ(mid.r, (low_color.r + high_color.r + 1) / 2);
  EXPECT_THROW(ramp_color(4, 3), InvalidInput);
}

TEST(Heatmap, UniformHeightsAreMonochrome) {
  Graph g = make_toroidal_rect(5, 4);
  for (auto x : {KHeight::bottom(g, 2), KHeight::top(g, 2)}) {
    auto img = render_heatmap(g, x, {3});
    EXPECT_EQ(img.format, ImageFormat::ppm);
    EXPECT_EQ(img.data.rfind("P6\n15 12\n255\n", 0), 0u);
    std::string px = pixels(img);
    ASSERT_EQ(px.size(), 15u * 12u * 3u);
    Rgb want = x[0] == 0 ? low_color : high_color;
    for (std::size_t i = 0; i < px.size(); i += 3) {
      ASSERT_EQ(static_cast<unsigned char>(px[i]), want.r);
      ASSERT_EQ(static_cast<unsigned char>(px[i + 1]), want.g);
      ASSERT_EQ(static_cast<unsigned char>(px[i + 2]), want.b);
    }
  }
}

TEST(Heatmap, HexGridLayout) {
  Graph g = make_toroidal_hex(4, 3);
  auto img = render_heatmap(g, KHeight::bottom(g, 1), {1});
  EXPECT_EQ(img.data.rfind("P6\n8 3\n255\n", 0), 0u);
}

TEST(Heatmap, FixedSampleIsByteIdentical) {
  Graph g = make_toroidal_rect(12, 9);
  KHeight x = cftp_sample(g, 3, 2024);
  auto a = render_heatmap(g, x), b = render_heatmap(g, cftp_sample(g, 3, 2024));
  EXPECT_EQ(a.data, b.data);
  // golden digest of this image
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : a.data) h = (h ^ c) * 0x100000001b3ULL;
  EXPECT_EQ(h, 0x31166f853b5069cfULL);
}

TEST(Heatmap, NonGridFallsBackToSvg) {
  Graph g = make_complete(4);
  auto img = render_heatmap(g, KHeight::top(g, 2));
  EXPECT_EQ(img.format, ImageFormat::svg);
  EXPECT_EQ(img.extension(), "svg");
  EXPECT_NE(img.data.find("<circle"), std::string::npos);
  EXPECT_THROW(render_heatmap(g, KHeight::top(make_path(3), 2)), InvalidInput);
}
