#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "tles/core/error.hpp"

namespace tles {

/// Single-channel 8-bit image, row-major.
struct Image8 {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> pixels;

  Image8() = default;
  Image8(int h, int w) : height(h), width(w), pixels(static_cast<std::size_t>(h) * w, 0) {}

  std::uint8_t at(int y, int x) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int y, int x) { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

inline std::uint8_t clamp_u8(double v) {
  const long r = std::lround(v);
  return static_cast<std::uint8_t>(std::clamp(r, 0L, 255L));
}

/// Bilinear sample with zero fill outside the image. Coordinates are pixel
/// centers: (0, 0) is the center of the top-left pixel.
inline double bilinear_sample(const Image8& img, double y, double x) {
  if (y <= -1.0 || x <= -1.0 || y >= img.height || x >= img.width) return 0.0;
  const int y0 = static_cast<int>(std::floor(y));
  const int x0 = static_cast<int>(std::floor(x));
  const double fy = y - y0;
  const double fx = x - x0;
  auto px = [&](int yy, int xx) -> double {
    if (yy < 0 || xx < 0 || yy >= img.height || xx >= img.width) return 0.0;
    return img.at(yy, xx);
  };
  const double top = px(y0, x0) * (1.0 - fx) + px(y0, x0 + 1) * fx;
  const double bot = px(y0 + 1, x0) * (1.0 - fx) + px(y0 + 1, x0 + 1) * fx;
  return top * (1.0 - fy) + bot * fy;
}

/// Bilinear resize; the interpolation is pinned so resampled sequences are
/// reproducible across runs. Output values stay within [0, 255].
inline Image8 resize_bilinear(const Image8& src, int out_h, int out_w) {
  require(src.height > 0 && src.width > 0, "IMAGE_EMPTY", "resize of empty image");
  require(out_h > 0 && out_w > 0, "IMAGE_DIMS", "non-positive resize target");
  if (out_h == src.height && out_w == src.width) return src;
  Image8 dst(out_h, out_w);
  const double sy = static_cast<double>(src.height) / out_h;
  const double sx = static_cast<double>(src.width) / out_w;
  for (int y = 0; y < out_h; ++y) {
    // Align pixel centers (the usual half-pixel convention).
    const double src_y = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < out_w; ++x) {
      const double src_x = (x + 0.5) * sx - 0.5;
      const double yy = std::clamp(src_y, 0.0, static_cast<double>(src.height - 1));
      const double xx = std::clamp(src_x, 0.0, static_cast<double>(src.width - 1));
      dst.at(y, x) = clamp_u8(bilinear_sample(src, yy, xx));
    }
  }
  return dst;
}

/// 2x3 affine map applied around pixel coordinates: dst(y, x) samples
/// src at (m[0]*x + m[1]*y + m[2], ...) expressed as (x', y').
struct Affine2D {
  // x' = a*x + b*y + c;  y' = d*x + e*y + f   (source coords from dest coords)
  double a = 1, b = 0, c = 0, d = 0, e = 1, f = 0;

  bool is_identity() const {
    return a == 1 && b == 0 && c == 0 && d == 0 && e == 1 && f == 0;
  }
};

/// Inverse map for warp: rotate by `deg` around the image center, scale by
/// `scale`, then translate by (tx, ty) pixels. The returned affine maps
/// destination pixels back into source coordinates.
inline Affine2D make_inverse_affine(int side, double deg, double scale, double tx, double ty) {
  const double rad = deg * M_PI / 180.0;
  const double cs = std::cos(rad), sn = std::sin(rad);
  const double cx = (side - 1) * 0.5, cy = (side - 1) * 0.5;
  // Forward: p' = R*S*(p - c) + c + t.  Inverse: p = S^-1*R^-1*(p' - c - t) + c.
  const double inv = 1.0 / scale;
  Affine2D m;
  m.a = cs * inv;
  m.b = sn * inv;
  m.c = cx - inv * (cs * (cx + tx) + sn * (cy + ty));
  m.d = -sn * inv;
  m.e = cs * inv;
  m.f = cy - inv * (-sn * (cx + tx) + cs * (cy + ty));
  return m;
}

/// Bilinear warp with zero fill outside the frame.
inline Image8 warp_affine(const Image8& src, const Affine2D& m) {
  if (m.is_identity()) return src;
  Image8 dst(src.height, src.width);
  for (int y = 0; y < dst.height; ++y) {
    for (int x = 0; x < dst.width; ++x) {
      const double sx = m.a * x + m.b * y + m.c;
      const double sy = m.d * x + m.e * y + m.f;
      dst.at(y, x) = clamp_u8(bilinear_sample(src, sy, sx));
    }
  }
  return dst;
}

/// Exact horizontal mirror (no interpolation, involutive).
inline Image8 flip_horizontal(const Image8& src) {
  Image8 dst(src.height, src.width);
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x) dst.at(y, x) = src.at(y, src.width - 1 - x);
  return dst;
}

/// Separable box blur, `passes` iterations (3 passes ~ Gaussian).
inline Image8 box_blur(const Image8& src, int radius, int passes = 3) {
  if (radius <= 0) return src;
  Image8 cur = src;
  const int h = src.height, w = src.width;
  std::vector<double> tmp(static_cast<std::size_t>(h) * w);
  for (int p = 0; p < passes; ++p) {
    // Horizontal.
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double acc = 0;
        int cnt = 0;
        for (int k = -radius; k <= radius; ++k) {
          const int xx = x + k;
          if (xx < 0 || xx >= w) continue;
          acc += cur.at(y, xx);
          ++cnt;
        }
        tmp[static_cast<std::size_t>(y) * w + x] = acc / cnt;
      }
    }
    // Vertical.
    Image8 next(h, w);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double acc = 0;
        int cnt = 0;
        for (int k = -radius; k <= radius; ++k) {
          const int yy = y + k;
          if (yy < 0 || yy >= h) continue;
          acc += tmp[static_cast<std::size_t>(yy) * w + x];
          ++cnt;
        }
        next.at(y, x) = clamp_u8(acc / cnt);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace tles
