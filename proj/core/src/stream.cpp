#include "degen/stream.hpp"

#include <iterator>

#include "degen/errors.hpp"
#include "degen/graph6.hpp"

namespace degen {

std::optional<StreamFormat> parse_stream_format(std::string_view name) {
  if (name == "graph6") return StreamFormat::graph6;
  if (name == "planar_code") return StreamFormat::planar_code;
  return std::nullopt;
}

GraphStream::GraphStream(const std::filesystem::path& path, StreamFormat format)
    : format_(format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  bytes_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  start();
}

GraphStream::GraphStream(std::vector<std::uint8_t> bytes, StreamFormat format)
    : bytes_(std::move(bytes)), format_(format) {
  start();
}

void GraphStream::start() {
  if (format_ == StreamFormat::planar_code) {
    endian_ = skip_planar_code_header(bytes_, offset_);
  } else {
    const std::string_view view(reinterpret_cast<const char*>(bytes_.data()), bytes_.size());
    if (view.starts_with(kGraph6Header)) offset_ = kGraph6Header.size();
  }
}

std::optional<StreamRecord> GraphStream::next() {
  StreamRecord rec;
  if (format_ == StreamFormat::planar_code) {
    if (offset_ >= bytes_.size()) return std::nullopt;
    rec.offset = offset_;
    EmbeddedGraph eg = decode_planar_code(bytes_, offset_, endian_);
    rec.graph = eg.graph();
    rec.planar = true;
    rec.embedding = std::move(eg);
  } else {
    const std::string_view view(reinterpret_cast<const char*>(bytes_.data()), bytes_.size());
    while (offset_ < view.size() && (view[offset_] == '\n' || view[offset_] == '\r')) ++offset_;
    if (offset_ >= view.size()) return std::nullopt;
    std::size_t end = view.find('\n', offset_);
    if (end == std::string_view::npos) end = view.size();
    std::string_view line = view.substr(offset_, end - offset_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    rec.offset = offset_;
    try {
      rec.graph = decode_graph6(line);
    } catch (const FormatError& e) {
      throw FormatError("graph6 record " + std::to_string(index_) + " malformed",
                        offset_ + e.offset());
    }
    offset_ = end;
    try {
      rec.embedding = embed_graph(rec.graph);
      rec.planar = true;
    } catch (const NotPlanarError&) {
      rec.planar = false;
    }
  }
  rec.index = index_++;
  return rec;
}

std::vector<StreamRecord> read_stream(const std::filesystem::path& path, StreamFormat format) {
  GraphStream stream(path, format);
  std::vector<StreamRecord> out;
  while (auto rec = stream.next()) out.push_back(std::move(*rec));
  return out;
}

}  // namespace degen
