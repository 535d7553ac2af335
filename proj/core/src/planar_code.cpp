#include "degen/planar_code.hpp"

#include <algorithm>
#include <string>

#include "degen/errors.hpp"

namespace degen {

namespace {

void put16(std::vector<std::uint8_t>& out, std::uint32_t x) {
  out.push_back(static_cast<std::uint8_t>(x & 0xff));
  out.push_back(static_cast<std::uint8_t>(x >> 8));
}

}  // namespace

std::vector<std::uint8_t> encode_planar_code(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  std::vector<std::uint32_t> index(g.id_bound(), 0);
  std::uint32_t n = 0;
  for (VertexId v : g.vertices()) index[v] = ++n;
  if (n > 65535) throw std::invalid_argument("planar_code supports at most 65535 vertices");
  const bool wide = n > 255;

  std::vector<std::uint8_t> out;
  if (wide) {
    out.push_back(0);
    put16(out, n);
  } else {
    out.push_back(static_cast<std::uint8_t>(n));
  }
  for (VertexId v : g.vertices()) {
    for (VertexId u : eg.rotation(v)) {
      if (wide) put16(out, index[u]);
      else out.push_back(static_cast<std::uint8_t>(index[u]));
    }
    if (wide) put16(out, 0);
    else out.push_back(0);
  }
  return out;
}

Endianness skip_planar_code_header(std::span<const std::uint8_t> bytes, std::size_t& offset) {
  const std::string_view view(reinterpret_cast<const char*>(bytes.data()) + offset,
                              bytes.size() - offset);
  if (!view.starts_with(">>planar_code")) return Endianness::little;
  const auto end = view.find("<<");
  if (end == std::string_view::npos) throw FormatError("unterminated planar_code header", offset);
  const std::string_view header = view.substr(0, end + 2);
  offset += header.size();
  return header.find(" be") != std::string_view::npos ? Endianness::big : Endianness::little;
}

EmbeddedGraph decode_planar_code(std::span<const std::uint8_t> bytes, std::size_t& offset,
                                 Endianness endian) {
  const std::size_t start = offset;
  auto need = [&](std::size_t k) {
    if (offset + k > bytes.size()) throw FormatError("planar_code record truncated", bytes.size());
  };
  need(1);
  bool wide = false;
  std::uint32_t n = bytes[offset++];
  auto read16 = [&]() -> std::uint32_t {
    need(2);
    const std::uint32_t a = bytes[offset];
    const std::uint32_t b = bytes[offset + 1];
    offset += 2;
    return endian == Endianness::little ? (a | (b << 8)) : ((a << 8) | b);
  };
  if (n == 0) {
    wide = true;
    n = read16();
  }
  auto entry = [&]() -> std::uint32_t {
    if (wide) return read16();
    need(1);
    return bytes[offset++];
  };

  RotationSystem rotation(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (;;) {
      const std::size_t at = offset;
      const std::uint32_t x = entry();
      if (x == 0) break;
      if (x > n) throw FormatError("planar_code neighbour out of range", at);
      rotation[v].push_back(x - 1);
    }
  }
  Graph g(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (VertexId u : rotation[v]) {
      if (u == v) throw FormatError("planar_code self-loop", start);
      if (!g.has_edge(v, u)) {
        // Each edge must appear once from each side.
        if (std::count(rotation[u].begin(), rotation[u].end(), v) != 1 ||
            std::count(rotation[v].begin(), rotation[v].end(), u) != 1)
          throw FormatError("planar_code rotation is not symmetric", start);
        g.add_edge(v, u);
      }
    }
  }
  try {
    return EmbeddedGraph(std::move(g), std::move(rotation));
  } catch (const FormatError& e) {
    throw FormatError(e.what(), start);
  }
}

std::vector<std::uint8_t> encode_planar_code_stream(std::span<const EmbeddedGraph> graphs,
                                                    bool with_header) {
  std::vector<std::uint8_t> out;
  if (with_header) out.assign(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const auto& eg : graphs) {
    const auto body = encode_planar_code(eg);
    out.insert(out.end(), body.begin(), body.end());
  }
  return out;
}

}  // namespace degen
