#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degen/embedding.hpp"

namespace degen {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

// plantri's planar_code for one graph: n, then for each vertex (1-based) its
// rotation followed by 0. Orders above 255 use a leading 0 byte and 16-bit
// little-endian entries. Dead ids are compacted away.
std::vector<std::uint8_t> encode_planar_code(const EmbeddedGraph& eg);

enum class Endianness { little, big };

// Decodes the record starting at `offset` and advances it. Throws FormatError
// with the absolute byte offset of the problem.
EmbeddedGraph decode_planar_code(std::span<const std::uint8_t> bytes, std::size_t& offset,
                                 Endianness wide = Endianness::little);

// Skips a ">>planar_code ...<<" header if present; reports its endianness.
Endianness skip_planar_code_header(std::span<const std::uint8_t> bytes, std::size_t& offset);

std::vector<std::uint8_t> encode_planar_code_stream(std::span<const EmbeddedGraph> graphs,
                                                    bool with_header = true);

}  // namespace degen
