#pragma once

#include <cmath>

#include "tles/seq/container.hpp"

namespace tles::seq {

inline constexpr double kDefaultStartHpi = 12.0;
inline constexpr int kDefaultFrameCount = 128;
inline constexpr double kGapToleranceHours = 0.5;

/// Hourly target grid: times[i] = start_offset + i hours.
inline std::vector<double> frame_grid(double start_offset = kDefaultStartHpi,
                                      int count = kDefaultFrameCount) {
  require(count >= 1, "GRID_COUNT", "frame grid needs count >= 1");
  std::vector<double> times(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) times[static_cast<std::size_t>(i)] = start_offset + i;
  return times;
}

/// Central focal plane plus offset, clamped into the valid range so shallow
/// 3-plane stacks remain usable.
inline int select_focal_plane(int num_focals, int focal_offset) {
  require(num_focals >= 1, "FOCAL_ABSENT", "sequence has no focal planes");
  const int central = num_focals / 2;
  return std::clamp(central + focal_offset, 0, num_focals - 1);
}

/// Builds the model-ready sequence: for each target time not past `end_time`
/// the nearest raw frame on the selected plane is taken when it lies within
/// `tolerance` hours, and resized to side x side. Everything else is an
/// all-zero slot with validity false. Purely deterministic; all randomness
/// lives in the augmentation stage.
inline FrameSequence sample_sequence(const FrameIndex& index, const std::string& embryo_id,
                                     const std::vector<double>& targets, int focal_offset,
                                     double end_time, int side,
                                     double tolerance = kGapToleranceHours) {
  require(!targets.empty(), "GRID_COUNT", "no target times");
  require(side >= 1, "IMAGE_DIMS", "side must be >= 1");
  require(index.frame_count() > 0, "SEQUENCE_EMPTY", embryo_id + ": raw sequence is empty");
  const int plane = select_focal_plane(index.num_focals(), focal_offset);

  FrameSequence out;
  out.embryo_id = embryo_id;
  out.side = side;
  out.target_times = targets;
  out.validity.assign(targets.size(), false);
  out.data.assign(targets.size() * out.frame_size(), 0);

  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double t = targets[i];
    if (t > end_time) continue;
    const auto [frame_idx, dt] = index.nearest(plane, t);
    if (dt > tolerance) continue;
    const Image8 resized = resize_bilinear(index.read_frame(frame_idx), side, side);
    std::copy(resized.pixels.begin(), resized.pixels.end(), out.frame_ptr(i));
    out.validity[i] = true;
  }
  return out;
}

/// In-memory variant used by tests and the synthetic generator.
inline FrameSequence sample_sequence(const RawSequence& raw, const std::vector<double>& targets,
                                     int focal_offset, double end_time, int side,
                                     double tolerance = kGapToleranceHours) {
  validate(raw);
  const int plane = select_focal_plane(raw.num_focals, focal_offset);

  FrameSequence out;
  out.embryo_id = raw.embryo_id;
  out.side = side;
  out.target_times = targets;
  out.validity.assign(targets.size(), false);
  out.data.assign(targets.size() * out.frame_size(), 0);

  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double t = targets[i];
    if (t > end_time) continue;
    // Nearest frame on the plane; ties resolve to the earlier frame.
    std::size_t best = raw.frame_count();
    double best_dt = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < raw.frame_count(); ++f) {
      if (raw.focal_index[f] != plane) continue;
      const double dt = std::fabs(raw.times[f] - t);
      if (dt < best_dt) {
        best_dt = dt;
        best = f;
      }
    }
    require(best < raw.frame_count(), "FOCAL_ABSENT",
            raw.embryo_id + ": no frames on selected focal plane");
    if (best_dt > tolerance) continue;
    const Image8 resized = resize_bilinear(raw.frame(best), side, side);
    std::copy(resized.pixels.begin(), resized.pixels.end(), out.frame_ptr(i));
    out.validity[i] = true;
  }
  return out;
}

}  // namespace tles::seq
