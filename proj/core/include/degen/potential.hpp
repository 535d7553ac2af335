#pragma once

#include <cstdint>
#include <vector>

#include "degen/graph.hpp"
#include "degen/rational.hpp"

namespace degen {

// Gamma = |V|/12 + Phi/36 + tc/18 with Phi = sum over v of (deg(v) - 5) and tc
// the number of connected components that are trees (isolated vertices count).
// Gamma bounds how many deletions an extraction may spend.
struct GammaBreakdown {
  std::int64_t vertex_count = 0;
  std::int64_t phi = 0;
  std::int64_t tree_components = 0;
  Rational gamma;
};

GammaBreakdown gamma_breakdown(const Graph& g);

inline Rational gamma(const Graph& g) { return gamma_breakdown(g).gamma; }

Rational gamma_from(std::int64_t vertex_count, std::int64_t phi, std::int64_t tree_components);

// 2|E|/|V|; throws std::domain_error on the empty graph.
Rational average_degree(const Graph& g);

// Components in order of their smallest vertex; each component sorted.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

std::int64_t tree_component_count(const Graph& g);

}  // namespace degen
