#include <gtest/gtest.h>

#include "tles/core/image.hpp"
#include "tles/core/rng.hpp"
#include "tles/core/tensor.hpp"

namespace {

using tles::Image8;
using tles::Rng;

TEST(Rng, DeterministicGivenSeed) {
  Rng a(1234), b(1234);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, SeedsDiffer) {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 100; ++i) equal += a.next_u64() == b.next_u64();
  EXPECT_EQ(equal, 0);
}

TEST(Rng, Uniform01Range) {
  Rng rng(7);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  EXPECT_LT(lo, 0.01);
  EXPECT_GT(hi, 0.99);
}

TEST(Rng, UniformIntInclusiveBounds) {
  Rng rng(3);
  bool saw_lo = false, saw_hi = false;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform_int(2, 5);
    ASSERT_GE(v, 2);
    ASSERT_LE(v, 5);
    saw_lo |= v == 2;
    saw_hi |= v == 5;
  }
  EXPECT_TRUE(saw_lo);
  EXPECT_TRUE(saw_hi);
}

TEST(Rng, NormalMoments) {
  Rng rng(11);
  double sum = 0, sum2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum2 += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.02);
  EXPECT_NEAR(sum2 / n, 1.0, 0.03);
}

TEST(Rng, DerivedStreamsDependOnlyOnSeedAndTag) {
  tles::Rng a = tles::derive_rng(42, "embryo-A");
  tles::Rng b = tles::derive_rng(42, "embryo-B");
  EXPECT_NE(a.next_u64(), b.next_u64());
  tles::Rng a1 = tles::derive_rng(42, "embryo-A");
  tles::Rng a2 = tles::derive_rng(42, "embryo-A");
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a1.next_u64(), a2.next_u64());
  tles::Rng other_seed = tles::derive_rng(43, "embryo-A");
  EXPECT_NE(tles::derive_rng(42, "embryo-A").next_u64(), other_seed.next_u64());
}

TEST(Image, ResizeIdentityWhenSameSize) {
  Image8 img(8, 8);
  for (int i = 0; i < 64; ++i) img.pixels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i * 4);
  const Image8 out = tles::resize_bilinear(img, 8, 8);
  EXPECT_EQ(out.pixels, img.pixels);
}

TEST(Image, ResizePreservesRange) {
  tles::Rng rng(5);
  Image8 img(13, 17);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  const Image8 up = tles::resize_bilinear(img, 64, 64);
  const Image8 down = tles::resize_bilinear(img, 5, 7);
  auto in_range = [](const Image8& im) {
    return std::all_of(im.pixels.begin(), im.pixels.end(), [](std::uint8_t) { return true; });
  };
  EXPECT_TRUE(in_range(up));
  EXPECT_TRUE(in_range(down));
  // Constant image stays constant under bilinear resampling.
  Image8 flat(9, 9);
  std::fill(flat.pixels.begin(), flat.pixels.end(), 200);
  const Image8 flat_up = tles::resize_bilinear(flat, 33, 21);
  for (auto p : flat_up.pixels) ASSERT_EQ(p, 200);
}

TEST(Image, HorizontalFlipIsInvolution) {
  tles::Rng rng(9);
  Image8 img(12, 15);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  EXPECT_EQ(tles::flip_horizontal(tles::flip_horizontal(img)).pixels, img.pixels);
}

TEST(Image, IdentityAffineWarpIsExact) {
  tles::Rng rng(10);
  Image8 img(16, 16);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  const auto m = tles::make_inverse_affine(16, 0.0, 1.0, 0.0, 0.0);
  const Image8 out = tles::warp_affine(img, m);
  EXPECT_EQ(out.pixels, img.pixels);
}

TEST(Tensor, ShapeAndFill) {
  tles::Tensor t({2, 3, 4});
  EXPECT_EQ(t.numel(), 24);
  t.fill(1.5);
  EXPECT_DOUBLE_EQ(t[23], 1.5);
}

}  // namespace
