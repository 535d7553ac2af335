#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string_view>
#include <vector>

#include "degen/embedding.hpp"
#include "degen/graph.hpp"
#include "degen/planar_code.hpp"

namespace degen {

enum class StreamFormat { graph6, planar_code };

std::optional<StreamFormat> parse_stream_format(std::string_view name);

struct StreamRecord {
  std::size_t index = 0;   // 0-based position in the stream
  std::size_t offset = 0;  // byte offset of the record
  Graph graph;
  bool planar = false;
  std::optional<EmbeddedGraph> embedding;  // set iff planar
};

// Lazily decodes graph6 lines or planar_code records. graph6 records are
// embedded on the fly; non-planar ones come back with planar = false.
// Malformed input throws FormatError with the absolute byte offset.
class GraphStream {
 public:
  GraphStream(const std::filesystem::path& path, StreamFormat format);
  GraphStream(std::vector<std::uint8_t> bytes, StreamFormat format);

  std::optional<StreamRecord> next();

 private:
  void start();

  std::vector<std::uint8_t> bytes_;
  StreamFormat format_;
  std::size_t offset_ = 0;
  std::size_t index_ = 0;
  Endianness endian_ = Endianness::little;
};

std::vector<StreamRecord> read_stream(const std::filesystem::path& path, StreamFormat format);

}  // namespace degen
