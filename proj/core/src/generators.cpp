#include "degen/generators.hpp"

#include <algorithm>

#include "flip_triangulation.hpp"

namespace degen {

namespace {

using Faces = std::vector<std::vector<VertexId>>;

EmbeddedGraph k4() { return from_oriented_faces(4, Faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

Faces octahedron_faces() {
  Faces f;
  for (VertexId i = 1; i <= 4; ++i) {
    const VertexId j = i % 4 + 1;
    f.push_back({0, i, j});
    f.push_back({5, j, i});
  }
  return f;
}

EmbeddedGraph icosahedron() {
  Faces f;
  for (VertexId i = 0; i < 5; ++i) {
    const VertexId u = 1 + i, u1 = 1 + (i + 1) % 5;
    const VertexId l = 6 + i, l1 = 6 + (i + 1) % 5;
    f.push_back({0, u, u1});
    f.push_back({u1, u, l});
    f.push_back({u1, l, l1});
    f.push_back({11, l1, l});
  }
  return from_oriented_faces(12, f);
}

EmbeddedGraph cube() {
  Faces f{{4, 5, 6, 7}, {0, 3, 2, 1}};
  for (VertexId i = 0; i < 4; ++i) {
    const VertexId j = (i + 1) % 4;
    f.push_back({i, j, j + 4, i + 4});
  }
  return from_oriented_faces(8, f);
}

// Two octahedra sharing the face 0 1 2, which becomes a separating triangle.
EmbeddedGraph glued_octahedra() {
  Faces f = octahedron_faces();
  f.erase(std::find(f.begin(), f.end(), std::vector<VertexId>{0, 1, 2}));
  const Faces other{{0, 1, 8}, {1, 2, 6}, {2, 0, 7}, {0, 8, 7},
                    {8, 1, 6}, {6, 2, 7}, {6, 7, 8}};
  f.insert(f.end(), other.begin(), other.end());
  return from_oriented_faces(9, f);
}

}  // namespace

const std::vector<std::string>& named_graph_names() {
  static const std::vector<std::string> names{"K4",           "octahedron",      "icosahedron",
                                              "cube",         "dodecahedron",    "glued_octahedra",
                                              "lemma10_fixture"};
  return names;
}

EmbeddedGraph named_graph(std::string_view name) {
  if (name == "K4") return k4();
  if (name == "octahedron") return from_oriented_faces(6, octahedron_faces());
  if (name == "icosahedron") return icosahedron();
  if (name == "cube") return cube();
  if (name == "dodecahedron") return dual(icosahedron());
  if (name == "glued_octahedra") return glued_octahedra();
  if (name == "lemma10_fixture") return ringed_wheel(std::vector<std::size_t>(8, 5));
  throw std::invalid_argument("unknown graph name: " + std::string(name));
}

EmbeddedGraph ringed_wheel(const std::vector<std::size_t>& ring_degrees) {
  const std::size_t k = ring_degrees.size();
  if (k < 3) throw std::invalid_argument("ringed_wheel needs at least three ring vertices");
  std::size_t outer = 0;
  for (std::size_t d : ring_degrees) {
    if (d < 5) throw std::invalid_argument("ringed_wheel ring degrees must be at least 5");
    outer += d - 4;
  }
  if (outer < 3) throw std::invalid_argument("ringed_wheel outer cycle too short");
  const auto ring = [&](std::size_t i) { return static_cast<VertexId>(1 + i % k); };
  const auto out = [&](std::size_t j) { return static_cast<VertexId>(1 + k + j % outer); };
  const auto cap = static_cast<VertexId>(1 + k + outer);

  Faces f;
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t extra = ring_degrees[i] - 3;
    const std::size_t shared = start + extra - 1;
    f.push_back({0, ring(i), ring(i + 1)});
    f.push_back({ring(i + 1), ring(i), out(shared)});
    for (std::size_t j = start; j < shared; ++j) f.push_back({ring(i), out(j), out(j + 1)});
    start = shared;
  }
  for (std::size_t j = 0; j < outer; ++j) f.push_back({cap, out(j + 1), out(j)});
  return from_oriented_faces(cap + 1, f);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

EmbeddedGraph random_triangulation(std::size_t n, std::uint64_t seed, int min_degree) {
  if (n < 4) throw std::invalid_argument("random_triangulation needs n >= 4");
  if (min_degree != 3 && min_degree != 5)
    throw std::invalid_argument("random_triangulation: min_degree must be 3 or 5");
  std::mt19937_64 rng(seed);
  auto t = detail::FlipTriangulation::k4();
  while (t.vertex_count() < n) t.insert(uniform_below(rng, t.face_count()));
  for (std::size_t i = 0; i < 4 * n; ++i)
    t.flip(uniform_below(rng, t.face_count()), static_cast<int>(uniform_below(rng, 3)));
  if (min_degree == 3) return t.embedded();

  auto deficiency = [&](VertexId v) -> int {
    return t.degree(v) < 5 ? static_cast<int>(5 - t.degree(v)) : 0;
  };
  int total = 0;
  for (VertexId v = 0; v < n; ++v) total += deficiency(v);
  const std::size_t budget = 400 * n;
  for (std::size_t attempt = 0; total > 0 && attempt < budget; ++attempt) {
    const std::size_t f = uniform_below(rng, t.face_count());
    const int side = static_cast<int>(uniform_below(rng, 3));
    const auto q = t.quad(f, side);
    if (q.c == q.d || t.has_edge(q.c, q.d)) continue;
    // Effect on the deficiency: a and b lose a degree, c and d gain one.
    const int delta = (t.degree(q.a) <= 5) + (t.degree(q.b) <= 5) - (t.degree(q.c) < 5) -
                      (t.degree(q.d) < 5);
    if (delta > 0 || (delta == 0 && uniform_below(rng, 2) == 0)) continue;
    t.flip(f, side);
    total += delta;
  }
  if (total > 0)
    throw GenerationFailure("no minimum-degree-5 triangulation reached for n = " +
                            std::to_string(n) + ", seed = " + std::to_string(seed));
  return t.embedded();
}

}  // namespace degen
