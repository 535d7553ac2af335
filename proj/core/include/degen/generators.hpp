#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degen/embedding.hpp"

namespace degen {

class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// K4, octahedron, icosahedron, cube, dodecahedron, glued_octahedra,
// lemma10_fixture. Throws std::invalid_argument for anything else.
EmbeddedGraph named_graph(std::string_view name);
const std::vector<std::string>& named_graph_names();

// Triangulation around a centre 0 whose ring vertices 1..k have the given
// final degrees (each >= 5). Ring vertex i gets deg - 3 outer neighbours, the
// last shared with ring vertex i + 1; a cap vertex closes the outer cycle.
EmbeddedGraph ringed_wheel(const std::vector<std::size_t>& ring_degrees);

// Uniform draw from [0, bound) by rejection; the same on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// K4, then n - 4 insertions into uniformly drawn faces, then 4n random
// diagonal flips. With min_degree 5, flips that lower the total degree
// deficiency continue until none is left or the attempt budget runs out
// (GenerationFailure). Pure function of its arguments.
EmbeddedGraph random_triangulation(std::size_t n, std::uint64_t seed, int min_degree = 3);

}  // namespace degen
