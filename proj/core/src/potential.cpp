#include "degen/potential.hpp"

#include <algorithm>
#include <stdexcept>

namespace degen {

Rational gamma_from(std::int64_t vertex_count, std::int64_t phi, std::int64_t tree_components) {
  // Common denominator 36.
  return Rational(3 * vertex_count + phi + 2 * tree_components, 36);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<std::uint8_t> seen(g.id_bound(), 0);
  std::vector<VertexId> stack;
  for (VertexId s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : g.neighbours(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::int64_t tree_component_count(const Graph& g) {
  std::int64_t trees = 0;
  for (const auto& comp : connected_components(g)) {
    std::size_t degree_sum = 0;
    for (VertexId v : comp) degree_sum += g.degree(v);
    if (degree_sum / 2 + 1 == comp.size()) ++trees;
  }
  return trees;
}

GammaBreakdown gamma_breakdown(const Graph& g) {
  GammaBreakdown b;
  b.vertex_count = static_cast<std::int64_t>(g.vertex_count());
  b.phi = 2 * static_cast<std::int64_t>(g.edge_count()) - 5 * b.vertex_count;
  b.tree_components = tree_component_count(g);
  b.gamma = gamma_from(b.vertex_count, b.phi, b.tree_components);
  return b;
}

Rational average_degree(const Graph& g) {
  if (g.empty()) throw std::domain_error("average degree of the empty graph");
  return Rational(2 * static_cast<std::int64_t>(g.edge_count()),
                  static_cast<std::int64_t>(g.vertex_count()));
}

}  // namespace degen
