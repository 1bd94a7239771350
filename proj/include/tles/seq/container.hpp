#pragma once

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "tles/core/io.hpp"
#include "tles/seq/raw.hpp"

namespace tles::seq {

// Per-embryo directory layout:
//   frames.bin  little-endian header {magic "TLF1", version u16,
//               frame_count u32, num_focals u16, height u16, width u16}
//               followed by unsigned 8-bit row-major frame payloads in
//               (time, focal) order
//   times.csv   frame_index, hpi (3 decimals), focal_index

inline constexpr char kFramesMagic[4] = {'T', 'L', 'F', '1'};
inline constexpr std::uint16_t kFramesVersion = 1;
inline constexpr std::size_t kFramesHeaderSize = 16;

inline void write_sequence(const fs::path& dir, const RawSequence& raw) {
  validate(raw);
  require(raw.frame_count() <= std::numeric_limits<std::uint32_t>::max(), "CONTAINER_OVERFLOW",
          "frame_count exceeds u32");
  require(raw.num_focals <= std::numeric_limits<std::uint16_t>::max(), "CONTAINER_OVERFLOW",
          "num_focals exceeds u16");
  require(raw.height <= std::numeric_limits<std::uint16_t>::max() &&
              raw.width <= std::numeric_limits<std::uint16_t>::max(),
          "CONTAINER_OVERFLOW", "frame dimensions exceed u16");
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "frames.bin", std::ios::binary);
    require(out.good(), "IO_ERROR", "cannot write " + (dir / "frames.bin").string());
    out.write(kFramesMagic, 4);
    put_le<std::uint16_t>(out, kFramesVersion);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(raw.frame_count()));
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(raw.num_focals));
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(raw.height));
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(raw.width));
    out.write(reinterpret_cast<const char*>(raw.pixels.data()),
              static_cast<std::streamsize>(raw.pixels.size()));
    require(out.good(), "IO_ERROR", "write failed: " + (dir / "frames.bin").string());
  }
  {
    std::ostringstream csv;
    csv << "frame_index,hpi,focal_index\n";
    char buf[64];
    for (std::size_t i = 0; i < raw.frame_count(); ++i) {
      std::snprintf(buf, sizeof buf, "%zu,%.3f,%d\n", i, raw.times[i], raw.focal_index[i]);
      csv << buf;
    }
    write_text_file(dir / "times.csv", csv.str());
  }
}

struct ContainerHeader {
  std::uint16_t version = 0;
  std::uint32_t frame_count = 0;
  std::uint16_t num_focals = 0;
  std::uint16_t height = 0;
  std::uint16_t width = 0;
};

inline ContainerHeader read_header(std::istream& in, const std::string& path) {
  char magic[4];
  in.read(magic, 4);
  require(in.good() && std::equal(magic, magic + 4, kFramesMagic), "CONTAINER_MAGIC",
          path + ": bad magic");
  ContainerHeader h;
  h.version = get_le<std::uint16_t>(in);
  h.frame_count = get_le<std::uint32_t>(in);
  h.num_focals = get_le<std::uint16_t>(in);
  h.height = get_le<std::uint16_t>(in);
  h.width = get_le<std::uint16_t>(in);
  require(in.good(), "CONTAINER_TRUNCATED", path + ": truncated header");
  require(h.version == kFramesVersion, "CONTAINER_VERSION",
          path + ": unsupported version " + std::to_string(h.version));
  require(h.num_focals >= 1 && h.height >= 1 && h.width >= 1, "CONTAINER_MAGIC",
          path + ": degenerate dimensions");
  return h;
}

inline std::vector<std::pair<double, int>> read_times_csv(const fs::path& path,
                                                          std::size_t expected_rows) {
  std::ifstream in(path);
  require(in.good(), "IO_ERROR", "cannot open: " + path.string());
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::pair<double, int>> rows;
  rows.reserve(expected_rows);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t idx;
    double hpi;
    int focal;
    require(std::sscanf(line.c_str(), "%zu,%lf,%d", &idx, &hpi, &focal) == 3, "CONTAINER_TRUNCATED",
            path.string() + ": bad row: " + line);
    require(idx == rows.size(), "CONTAINER_TRUNCATED", path.string() + ": non-contiguous rows");
    rows.emplace_back(hpi, focal);
  }
  require(rows.size() == expected_rows, "CONTAINER_TRUNCATED",
          path.string() + ": row count does not match frames.bin");
  return rows;
}

inline RawSequence read_sequence(const fs::path& dir, std::string embryo_id = "") {
  const fs::path bin = dir / "frames.bin";
  std::ifstream in(bin, std::ios::binary);
  require(in.good(), "IO_ERROR", "cannot open: " + bin.string());
  const ContainerHeader h = read_header(in, bin.string());
  RawSequence raw;
  raw.embryo_id = embryo_id.empty() ? dir.filename().string() : std::move(embryo_id);
  raw.num_focals = h.num_focals;
  raw.height = h.height;
  raw.width = h.width;
  const std::size_t payload =
      static_cast<std::size_t>(h.frame_count) * h.height * h.width;
  raw.pixels.resize(payload);
  in.read(reinterpret_cast<char*>(raw.pixels.data()), static_cast<std::streamsize>(payload));
  require(in.gcount() == static_cast<std::streamsize>(payload), "CONTAINER_TRUNCATED",
          bin.string() + ": truncated payload");
  const auto rows = read_times_csv(dir / "times.csv", h.frame_count);
  raw.times.reserve(rows.size());
  raw.focal_index.reserve(rows.size());
  for (const auto& [hpi, focal] : rows) {
    raw.times.push_back(hpi);
    raw.focal_index.push_back(focal);
  }
  validate(raw);
  return raw;
}

/// Lazy per-frame access for training: keeps the time index in memory and
/// reads single frames from disk on demand. Read-only and safe to share
/// across threads once constructed.
class FrameIndex {
 public:
  explicit FrameIndex(fs::path dir) : dir_(std::move(dir)) {
    const fs::path bin = dir_ / "frames.bin";
    std::ifstream in(bin, std::ios::binary);
    require(in.good(), "IO_ERROR", "cannot open: " + bin.string());
    header_ = read_header(in, bin.string());
    in.seekg(0, std::ios::end);
    const auto file_size = static_cast<std::size_t>(in.tellg());
    const std::size_t expected = kFramesHeaderSize + static_cast<std::size_t>(header_.frame_count) *
                                                         header_.height * header_.width;
    require(file_size == expected, "CONTAINER_TRUNCATED",
            bin.string() + ": size mismatch (" + std::to_string(file_size) + " vs " +
                std::to_string(expected) + ")");
    const auto rows = read_times_csv(dir_ / "times.csv", header_.frame_count);
    by_plane_.resize(header_.num_focals);
    for (std::size_t i = 0; i < rows.size(); ++i)
      by_plane_[static_cast<std::size_t>(rows[i].second)].push_back({rows[i].first, i});
  }

  int num_focals() const { return header_.num_focals; }
  int height() const { return header_.height; }
  int width() const { return header_.width; }
  std::size_t frame_count() const { return header_.frame_count; }

  double mean_interval_minutes(int plane) const {
    const auto& v = by_plane_.at(static_cast<std::size_t>(plane));
    require(v.size() >= 2, "SEQUENCE_INVALID", "not enough frames to measure cadence");
    return (v.back().hpi - v.front().hpi) / static_cast<double>(v.size() - 1) * 60.0;
  }

  /// Frame on `plane` nearest in time to `t`; ties resolve to the earlier
  /// frame. Returns (frame flat index, |dt|).
  std::pair<std::size_t, double> nearest(int plane, double t) const {
    const auto& v = by_plane_.at(static_cast<std::size_t>(plane));
    require(!v.empty(), "FOCAL_ABSENT", dir_.string() + ": no frames on selected focal plane");
    auto cmp = [](const Entry& e, double x) { return e.hpi < x; };
    auto it = std::lower_bound(v.begin(), v.end(), t, cmp);
    if (it == v.begin()) return {it->index, std::fabs(it->hpi - t)};
    if (it == v.end()) return {(it - 1)->index, std::fabs((it - 1)->hpi - t)};
    const double d_hi = std::fabs(it->hpi - t);
    const double d_lo = std::fabs((it - 1)->hpi - t);
    if (d_lo <= d_hi) return {(it - 1)->index, d_lo};
    return {it->index, d_hi};
  }

  Image8 read_frame(std::size_t index) const {
    const fs::path bin = dir_ / "frames.bin";
    std::ifstream in(bin, std::ios::binary);
    require(in.good(), "IO_ERROR", "cannot open: " + bin.string());
    Image8 img(header_.height, header_.width);
    const std::size_t sz = img.pixels.size();
    in.seekg(static_cast<std::streamoff>(kFramesHeaderSize + index * sz));
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(sz));
    require(in.gcount() == static_cast<std::streamsize>(sz), "CONTAINER_TRUNCATED",
            bin.string() + ": truncated frame read");
    return img;
  }

 private:
  struct Entry {
    double hpi;
    std::size_t index;
  };

  fs::path dir_;
  ContainerHeader header_;
  std::vector<std::vector<Entry>> by_plane_;
};

}  // namespace tles::seq
