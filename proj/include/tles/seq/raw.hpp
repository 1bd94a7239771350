#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tles/core/error.hpp"
#include "tles/core/image.hpp"

namespace tles::seq {

/// Raw time-lapse acquisition: frames at native resolution, stored flat in
/// (time, focal) order. Acquisition times are strictly increasing within each
/// focal plane; all frames share one height and width.
struct RawSequence {
  std::string embryo_id;
  int num_focals = 0;
  int height = 0;
  int width = 0;
  std::vector<double> times;       // hpi per frame
  std::vector<int> focal_index;    // 0 = most negative plane
  std::vector<std::uint8_t> pixels;  // frame i at [i * height * width, ...)

  std::size_t frame_count() const { return times.size(); }

  Image8 frame(std::size_t i) const {
    Image8 img(height, width);
    const std::size_t sz = static_cast<std::size_t>(height) * width;
    std::copy_n(pixels.begin() + static_cast<long>(i * sz), sz, img.pixels.begin());
    return img;
  }
};

inline void validate(const RawSequence& raw) {
  require(raw.frame_count() > 0, "SEQUENCE_EMPTY", raw.embryo_id + ": raw sequence is empty");
  require(raw.num_focals >= 1, "SEQUENCE_INVALID", "num_focals must be >= 1");
  require(raw.height > 0 && raw.width > 0, "SEQUENCE_INVALID", "frame dimensions must be positive");
  require(raw.times.size() == raw.focal_index.size(), "SEQUENCE_INVALID",
          "times/focal_index size mismatch");
  require(raw.pixels.size() ==
              raw.frame_count() * static_cast<std::size_t>(raw.height) * raw.width,
          "SEQUENCE_INVALID", "pixel payload does not match frame count");
  std::vector<double> last(static_cast<std::size_t>(raw.num_focals),
                           -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < raw.frame_count(); ++i) {
    const int f = raw.focal_index[i];
    require(f >= 0 && f < raw.num_focals, "SEQUENCE_INVALID", "focal_index out of range");
    require(raw.times[i] > last[static_cast<std::size_t>(f)], "SEQUENCE_INVALID",
            "acquisition times must be strictly increasing per focal plane");
    last[static_cast<std::size_t>(f)] = raw.times[i];
  }
}

/// Model-ready sequence: `count` frames of side x side pixels on an hourly
/// grid. Slots with no usable acquisition are exactly zero with validity
/// false.
struct FrameSequence {
  std::string embryo_id;
  int side = 0;
  std::vector<double> target_times;     // hpi, one per slot
  std::vector<bool> validity;           // false => frame is all zeros
  std::vector<std::uint8_t> data;       // slot i at [i * side * side, ...)

  std::size_t frame_count() const { return target_times.size(); }
  std::size_t frame_size() const { return static_cast<std::size_t>(side) * side; }

  std::uint8_t* frame_ptr(std::size_t i) { return data.data() + i * frame_size(); }
  const std::uint8_t* frame_ptr(std::size_t i) const { return data.data() + i * frame_size(); }
};

}  // namespace tles::seq
