#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tles/core/error.hpp"

namespace tles {

namespace fs = std::filesystem;
using json = nlohmann::json;

inline void write_text_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "IO_ERROR", "cannot open for write: " + path.string());
  out << content;
  require(out.good(), "IO_ERROR", "write failed: " + path.string());
}

inline std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "IO_ERROR", "cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Line-delimited JSON: one record per line, `null` for absent values.
inline void write_jsonl(const fs::path& path, const std::vector<json>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.dump();
    out += '\n';
  }
  write_text_file(path, out);
}

inline std::vector<json> read_jsonl(const fs::path& path) {
  std::ifstream in(path);
  require(in.good(), "IO_ERROR", "cannot open: " + path.string());
  std::vector<json> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    require(!j.is_discarded(), "MANIFEST_PARSE",
            path.string() + ":" + std::to_string(lineno) + ": invalid record");
    records.push_back(std::move(j));
  }
  return records;
}

// Little-endian scalar encoding for the binary frame container.
template <typename T>
void put_le(std::ostream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
  return v;
}

}  // namespace tles
