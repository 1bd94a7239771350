#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "tles/core/image.hpp"
#include "tles/seq/raw.hpp"

namespace tles::augment {

/// Two-stage augmentation parameters. Stage 1 perturbs the sampling timeline
/// and focal plane; stage 2 applies one spatial/photometric parameter set to
/// every frame of the sequence (temporal coherence).
struct AugmentationConfig {
  double sequence_offset_hours = 0.5;              // global offset drawn in +-this
  std::array<double, 3> focal_offset_probs{0.25, 0.50, 0.25};  // over offsets -1, 0, +1
  double per_frame_jitter_hours = 0.375;           // independent per-frame jitter, +-this
  double truncation_lo_hpi = 108.0;                // end time drawn uniformly in
  double truncation_hi_hpi = 140.0;                //   [lo, hi]
  bool cutout_enabled = true;
  double cutout_frac_lo = 0.10;                    // cutout side as fraction of image side
  double cutout_frac_hi = 0.30;
  double rescale_lo = 0.90;
  double rescale_hi = 1.10;
  double translation_max = 0.10;                   // fraction of the side, each axis
  double brightness_lo = 0.90;                     // multiplicative factor
  double brightness_hi = 1.10;
  double rotation_max_deg = 10.0;
  double hflip_prob = 0.5;
};

inline void validate(const AugmentationConfig& c) {
  const double p = c.focal_offset_probs[0] + c.focal_offset_probs[1] + c.focal_offset_probs[2];
  require(std::fabs(p - 1.0) < 1e-9, "CONFIG_INVALID", "focal offset probabilities must sum to 1");
  require(c.truncation_lo_hpi <= c.truncation_hi_hpi, "CONFIG_INVALID",
          "truncation range inverted");
  require(c.hflip_prob >= 0.0 && c.hflip_prob <= 1.0, "CONFIG_INVALID", "hflip_prob in [0,1]");
}

struct Stage1Draw {
  std::vector<double> targets;
  int focal_offset = 0;
  double end_time = 0.0;
};

/// Stage 1: one global time offset, one focal-plane offset, independent
/// per-frame jitter, and a random truncation of the sequence end. The draw
/// order is fixed (offset, focal, jitter per frame, end time) so a seeded rng
/// reproduces the same perturbation.
template <typename RngT>
Stage1Draw stage1_temporal(const std::vector<double>& base_targets, const AugmentationConfig& cfg,
                           RngT& rng) {
  validate(cfg);
  Stage1Draw draw;
  const double offset = rng.uniform(-cfg.sequence_offset_hours, cfg.sequence_offset_hours);
  const double u = rng.uniform01();
  draw.focal_offset = u < cfg.focal_offset_probs[0]                             ? -1
                      : u < cfg.focal_offset_probs[0] + cfg.focal_offset_probs[1] ? 0
                                                                                  : 1;
  draw.targets.reserve(base_targets.size());
  for (double t : base_targets)
    draw.targets.push_back(t + offset +
                           rng.uniform(-cfg.per_frame_jitter_hours, cfg.per_frame_jitter_hours));
  draw.end_time = rng.uniform(cfg.truncation_lo_hpi, cfg.truncation_hi_hpi);
  return draw;
}

/// One parameter set per sequence, applied identically to all frames.
struct Stage2Params {
  double scale = 1.0;
  double translate_x = 0.0;  // pixels
  double translate_y = 0.0;
  double rotation_deg = 0.0;
  bool hflip = false;
  double brightness = 1.0;
  bool cutout = false;
  int cut_x = 0, cut_y = 0, cut_w = 0, cut_h = 0;

  bool geometry_is_identity() const {
    return scale == 1.0 && translate_x == 0.0 && translate_y == 0.0 && rotation_deg == 0.0;
  }
};

template <typename RngT>
Stage2Params draw_stage2(const AugmentationConfig& cfg, int side, RngT& rng) {
  Stage2Params p;
  p.scale = rng.uniform(cfg.rescale_lo, cfg.rescale_hi);
  p.translate_x = rng.uniform(-cfg.translation_max, cfg.translation_max) * side;
  p.translate_y = rng.uniform(-cfg.translation_max, cfg.translation_max) * side;
  p.rotation_deg = rng.uniform(-cfg.rotation_max_deg, cfg.rotation_max_deg);
  p.hflip = rng.uniform01() < cfg.hflip_prob;
  p.brightness = rng.uniform(cfg.brightness_lo, cfg.brightness_hi);
  if (cfg.cutout_enabled) {
    p.cutout = true;
    const double frac = rng.uniform(cfg.cutout_frac_lo, cfg.cutout_frac_hi);
    const int cut_side = std::max(1, static_cast<int>(std::lround(frac * side)));
    p.cut_w = p.cut_h = std::min(cut_side, side);
    p.cut_x = static_cast<int>(rng.uniform_int(0, side - p.cut_w));
    p.cut_y = static_cast<int>(rng.uniform_int(0, side - p.cut_h));
  }
  return p;
}

/// Applies a fixed parameter set to every frame. Invalid (zero-padded) slots
/// stay exactly zero: geometry maps zero to zero, brightness is skipped on
/// them, and the cutout only erases. Pixel order of operations: horizontal
/// flip, then the affine rotate/scale/translate warp (bilinear, zero fill),
/// then brightness with clamping to [0, 255], then the cutout rectangle.
inline seq::FrameSequence stage2_spatial(const seq::FrameSequence& in, const Stage2Params& p) {
  seq::FrameSequence out = in;
  const int side = in.side;
  const Affine2D affine = p.geometry_is_identity()
                              ? Affine2D{}
                              : make_inverse_affine(side, p.rotation_deg, p.scale, p.translate_x,
                                                    p.translate_y);
  for (std::size_t f = 0; f < in.frame_count(); ++f) {
    if (!in.validity[f]) continue;  // stays all-zero
    Image8 img(side, side);
    std::copy_n(in.frame_ptr(f), img.pixels.size(), img.pixels.begin());
    if (p.hflip) img = flip_horizontal(img);
    if (!affine.is_identity()) img = warp_affine(img, affine);
    if (p.brightness != 1.0)
      for (auto& px : img.pixels) px = clamp_u8(px * p.brightness);
    if (p.cutout)
      for (int y = p.cut_y; y < p.cut_y + p.cut_h; ++y)
        for (int x = p.cut_x; x < p.cut_x + p.cut_w; ++x) img.at(y, x) = 0;
    std::copy(img.pixels.begin(), img.pixels.end(), out.frame_ptr(f));
  }
  return out;
}

template <typename RngT>
seq::FrameSequence stage2_spatial(const seq::FrameSequence& in, const AugmentationConfig& cfg,
                                  RngT& rng) {
  validate(cfg);
  return stage2_spatial(in, draw_stage2(cfg, in.side, rng));
}

}  // namespace tles::augment
