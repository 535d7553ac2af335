#pragma once

#include <string>
#include <string_view>

#include "degen/graph.hpp"

namespace degen {

// McKay's graph6: N(n) header then the upper triangle, column by column,
// packed 6 bits per printable byte (value + 63). Dead ids are compacted away.
std::string encode_graph6(const Graph& g);

// One record without the trailing newline. Throws FormatError whose offset is
// relative to the start of `record`.
Graph decode_graph6(std::string_view record);

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace degen
