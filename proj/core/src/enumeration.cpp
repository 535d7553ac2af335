#include "degen/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

#include "flip_triangulation.hpp"

namespace degen {

namespace {

using Mask = std::uint16_t;

struct Labeller {
  std::size_t n;
  std::array<Mask, kCanonicalMaxOrder> adj{};

  CanonicalCode code_of(const std::vector<int>& colour) const {
    std::array<int, kCanonicalMaxOrder> pos{};
    for (std::size_t v = 0; v < n; ++v) pos[static_cast<std::size_t>(colour[v])] = static_cast<int>(v);
    CanonicalCode code{0, 0};
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if (adj[static_cast<std::size_t>(pos[i])] >> pos[j] & 1) code[bit / 64] |= std::uint64_t{1} << (bit % 64);
    return code;
  }

  // Colour refinement to an equitable partition. Colours are ranks 0..n-1
  // with the convention that a cell of size s occupies ranks [c, c + s), and
  // every vertex of the cell carries colour c.
  void refine(std::vector<int>& colour) const {
    for (;;) {
      std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> s{colour[v]};
        std::vector<int> around;
        for (std::size_t u = 0; u < n; ++u)
          if (adj[v] >> u & 1) around.push_back(colour[u]);
        std::sort(around.begin(), around.end());
        s.insert(s.end(), around.begin(), around.end());
        sig[v] = {std::move(s), v};
      }
      std::sort(sig.begin(), sig.end());
      std::vector<int> next(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) {
          next[sig[i].second] = static_cast<int>(i);
        } else {
          next[sig[i].second] = next[sig[i - 1].second];
        }
      }
      const bool stable = next == colour;
      colour = std::move(next);
      if (stable) return;
    }
  }

  void search(std::vector<int> colour, CanonicalCode& best, bool& have) const {
    refine(colour);
    // First non-singleton cell, by colour.
    int target = -1;
    std::vector<int> size(n, 0);
    for (std::size_t v = 0; v < n; ++v) ++size[static_cast<std::size_t>(colour[v])];
    for (std::size_t c = 0; c < n; ++c)
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      const CanonicalCode code = code_of(colour);
      if (!have || code > best) {
        best = code;
        have = true;
      }
      return;
    }
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (colour[v] == target) members.push_back(v);
    std::vector<std::size_t> tried;
    for (std::size_t v : members) {
      // Swapping two twins of one cell is an automorphism of the coloured
      // graph, so one of each twin class suffices.
      const bool twin = std::any_of(tried.begin(), tried.end(), [&](std::size_t u) {
        const Mask strip = static_cast<Mask>(~((Mask{1} << u) | (Mask{1} << v)));
        return (adj[u] & strip) == (adj[v] & strip);
      });
      if (twin) continue;
      tried.push_back(v);
      std::vector<int> split = colour;
      for (std::size_t u : members)
        if (u != v) split[u] = target + 1;
      search(std::move(split), best, have);
    }
  }
};

CanonicalCode canonical_of_masks(std::size_t n, const std::array<Mask, kCanonicalMaxOrder>& adj) {
  Labeller lab{n, adj};
  CanonicalCode best{0, 0};
  bool have = false;
  lab.search(std::vector<int>(n, 0), best, have);
  return best;
}

std::array<Mask, kCanonicalMaxOrder> masks_of(const Graph& g) {
  const Graph c = g.compacted();
  if (c.vertex_count() > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical labelling supports at most 16 vertices");
  std::array<Mask, kCanonicalMaxOrder> adj{};
  for (VertexId v : c.vertices())
    for (VertexId u : c.neighbours(v)) adj[v] |= static_cast<Mask>(Mask{1} << u);
  return adj;
}

bool connected(std::size_t n, const std::array<Mask, kCanonicalMaxOrder>& adj) {
  if (n == 0) return true;
  Mask seen = 1;
  Mask frontier = 1;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= static_cast<Mask>(f - 1))
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = static_cast<Mask>(next & ~seen);
    seen |= next;
  }
  const Mask all = static_cast<Mask>(n == 16 ? 0xffff : (1u << n) - 1);
  return seen == all;
}

std::array<Mask, kCanonicalMaxOrder> masks_from_code(const CanonicalCode& code, std::size_t n) {
  std::array<Mask, kCanonicalMaxOrder> adj{};
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (code[bit / 64] >> (bit % 64) & 1) {
        adj[i] |= static_cast<Mask>(Mask{1} << j);
        adj[j] |= static_cast<Mask>(Mask{1} << i);
      }
  return adj;
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  return canonical_of_masks(g.vertex_count(), masks_of(g));
}

Graph graph_from_code(const CanonicalCode& code, std::size_t n) {
  const auto adj = masks_from_code(code, n);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj[i] >> j & 1) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

std::vector<EmbeddedGraph> all_triangulations(std::size_t n) {
  if (n < 4 || n > kCanonicalMaxOrder)
    throw std::invalid_argument("all_triangulations: n out of range");
  auto start = detail::FlipTriangulation::k4();
  while (start.vertex_count() < n) start.insert(start.face_count() - 1);

  std::set<CanonicalCode> seen{canonical_code(start.graph())};
  std::deque<detail::FlipTriangulation> queue{start};
  std::vector<EmbeddedGraph> out;
  while (!queue.empty()) {
    detail::FlipTriangulation t = std::move(queue.front());
    queue.pop_front();
    out.push_back(t.embedded());
    for (std::size_t f = 0; f < t.face_count(); ++f) {
      for (int side = 0; side < 3; ++side) {
        const auto q = t.quad(f, side);
        if (q.a > q.b) continue;  // each edge once
        detail::FlipTriangulation next = t;
        if (!next.flip(f, side)) continue;
        if (seen.insert(canonical_code(next.graph())).second) queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<Graph> all_connected_planar(std::size_t n) {
  if (n < 4 || n > kCanonicalMaxOrder)
    throw std::invalid_argument("all_connected_planar: n out of range");
  std::set<CanonicalCode> layer;
  for (const EmbeddedGraph& t : all_triangulations(n)) layer.insert(canonical_code(t.graph()));
  std::vector<Graph> out;
  while (!layer.empty()) {
    std::set<CanonicalCode> below;
    for (const CanonicalCode& code : layer) {
      out.push_back(graph_from_code(code, n));
      const auto adj = masks_from_code(code, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!(adj[i] >> j & 1)) continue;
          auto cut = adj;
          cut[i] &= static_cast<Mask>(~(Mask{1} << j));
          cut[j] &= static_cast<Mask>(~(Mask{1} << i));
          if (connected(n, cut)) below.insert(canonical_of_masks(n, cut));
        }
      }
    }
    layer = std::move(below);
  }
  return out;
}

}  // namespace degen
