#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "degen/embedding.hpp"
#include "degen/graph.hpp"

namespace degen {

inline constexpr std::size_t kCanonicalMaxOrder = 16;

// Upper triangle of the adjacency matrix under a canonical relabelling, as a
// 120-bit string. Equal codes iff isomorphic (same order assumed).
using CanonicalCode = std::array<std::uint64_t, 2>;

CanonicalCode canonical_code(const Graph& g);
Graph graph_from_code(const CanonicalCode& code, std::size_t n);

// Every triangulation of the sphere on n vertices up to isomorphism
// (reflections identified), found by a search of the diagonal-flip graph,
// which is connected. 4 <= n <= 16.
std::vector<EmbeddedGraph> all_triangulations(std::size_t n);

// Every connected planar graph on n vertices up to isomorphism: all spanning
// connected subgraphs of triangulations, reached by single-edge deletions.
// 4 <= n <= 16, practical up to about 10.
std::vector<Graph> all_connected_planar(std::size_t n);

}  // namespace degen
