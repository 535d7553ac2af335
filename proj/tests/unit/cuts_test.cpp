#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "degen/cuts.hpp"
#include "degen/discharging.hpp"
#include "degen/generators.hpp"
#include "oracles.hpp"

namespace degen {
namespace {

using CutKey = std::pair<int, std::vector<VertexId>>;

CutKey key(const BadCut& c) {
  auto vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  return {c.kind == BadCut::Kind::triangle ? 3 : 4, vs};
}

std::set<CutKey> reference_cuts(const Graph& g) {
  std::set<CutKey> out;
  const auto vs = g.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const VertexId a = vs[i], b = vs[j], c = vs[k];
        const bool tri = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
        if (tri && testing::reference_separates(g, {a, b, c})) out.insert({3, {a, b, c}});
        for (std::size_t l = k + 1; l < n; ++l) {
          const VertexId d = vs[l];
          const std::array<VertexId, 4> q{a, b, c, d};
          int edges = 0;
          std::array<int, 4> deg{};
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (g.has_edge(q[x], q[y])) ++edges, ++deg[x], ++deg[y];
          // Induced C4: four edges, every vertex of degree two.
          if (edges != 4 || std::any_of(deg.begin(), deg.end(), [](int x) { return x != 2; }))
            continue;
          if (testing::reference_separates(g, {a, b, c, d})) out.insert({4, {a, b, c, d}});
        }
      }
  return out;
}

Graph drop_edges(const Graph& g, std::uint64_t seed, std::size_t count) {
  auto edges = g.edges();
  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  Graph out = Graph::from_edges(g.id_bound(), std::vector<Edge>(edges.begin() + count, edges.end()));
  return out;
}

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (const auto& name : named_graph_names()) out.push_back(named_graph(name).graph());
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph t = random_triangulation(10 + seed, seed).graph();
    out.push_back(t);
    const Graph holed = drop_edges(t, seed, 3 + seed % 4);
    if (testing::component_count(holed) == 1) out.push_back(holed);
  }
  return out;
}

TEST(BadCuts, MatchBruteForce) {
  std::size_t triangles = 0, quads = 0;
  for (const Graph& g : small_corpus()) {
    std::set<CutKey> got;
    for (const auto& c : find_bad_cuts(g)) {
      ASSERT_TRUE(got.insert(key(c)).second) << "duplicate cut";
      ASSERT_TRUE(is_cut_set(g, c.vertices));
      // Listed in cycle order.
      const auto& v = c.vertices;
      for (std::size_t i = 0; i < v.size(); ++i) ASSERT_TRUE(g.has_edge(v[i], v[(i + 1) % v.size()]));
      (c.kind == BadCut::Kind::triangle ? triangles : quads)++;
    }
    ASSERT_EQ(got, reference_cuts(g));
  }
  EXPECT_GT(triangles, 0u);
  EXPECT_GT(quads, 0u);
}

TEST(BadCuts, NamedGraphs) {
  EXPECT_TRUE(find_bad_cuts(named_graph("icosahedron").graph()).empty());
  EXPECT_TRUE(find_bad_cuts(named_graph("K4").graph()).empty());

  const auto oct = find_bad_cuts(named_graph("octahedron").graph());
  EXPECT_EQ(oct.size(), 3u);
  for (const auto& c : oct) EXPECT_EQ(c.kind, BadCut::Kind::chordless_quad);

  const Graph glued = named_graph("glued_octahedra").graph();
  const auto cuts = find_bad_cuts(glued);
  const BadCut shared{BadCut::Kind::triangle, {0, 1, 2}};
  EXPECT_NE(std::find(cuts.begin(), cuts.end(), shared), cuts.end());
  EXPECT_EQ(bad_cuts_through(glued, 0).size(),
            static_cast<std::size_t>(std::count_if(cuts.begin(), cuts.end(), [](const BadCut& c) {
              return std::find(c.vertices.begin(), c.vertices.end(), 0u) != c.vertices.end();
            })));
}

TEST(GoodSubgraph, WholeGraphWhenNoCuts) {
  const Graph ico = named_graph("icosahedron").graph();
  const GoodSubgraph gs = good_subgraph(ico);
  EXPECT_FALSE(gs.cut);
  EXPECT_EQ(gs.kernel.size(), 12u);
  EXPECT_EQ(gs.ordinary.size(), 12u);
  EXPECT_TRUE(gs.extraordinary.empty());
}

void check_structure(const Graph& g, const GoodSubgraph& gs) {
  const auto cuts = reference_cuts(g);
  bool clean = true;
  for (VertexId v : gs.kernel)
    for (const auto& c : cuts) clean = clean && std::count(c.second.begin(), c.second.end(), v) == 0;
  ASSERT_EQ(clean, gs.kernel_avoids_cuts);
  if (!clean) {
    // Only possible below minimum degree 5.
    const auto vs = g.vertices();
    ASSERT_TRUE(std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return g.degree(v) < 5; }));
  }
  std::set<VertexId> h(gs.h_vertices.begin(), gs.h_vertices.end());
  std::set<VertexId> kernel(gs.kernel.begin(), gs.kernel.end());
  if (gs.cut) {
    ASSERT_TRUE(cuts.count(key(*gs.cut)));
    for (VertexId c : gs.cut->vertices) {
      ASSERT_TRUE(h.count(c));
      kernel.insert(c);
    }
  }
  ASSERT_EQ(kernel, h);
  std::set<VertexId> split(gs.ordinary.begin(), gs.ordinary.end());
  split.insert(gs.extraordinary.begin(), gs.extraordinary.end());
  ASSERT_EQ(split, std::set<VertexId>(gs.kernel.begin(), gs.kernel.end()));
  for (VertexId v : gs.kernel) {
    std::size_t touching = 0;
    if (gs.cut && gs.cut->kind == BadCut::Kind::triangle)
      for (VertexId c : gs.cut->vertices) touching += g.has_edge(v, c);
    const bool extra = std::count(gs.extraordinary.begin(), gs.extraordinary.end(), v) > 0;
    ASSERT_EQ(extra, touching >= 2);
  }
}

TEST(GoodSubgraph, StructureOnCorpus) {
  std::size_t with_cut = 0;
  for (const Graph& g : small_corpus()) {
    const GoodSubgraph gs = good_subgraph(g);
    check_structure(g, gs);
    with_cut += gs.cut.has_value();
  }
  EXPECT_GT(with_cut, 0u);
}

TEST(GoodSubgraph, MinimumDegreeFiveWithCuts) {
  std::size_t with_cut = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const EmbeddedGraph eg = random_triangulation(40, seed, 5);
    const GoodSubgraph gs = good_subgraph(eg.graph());
    const auto cuts = reference_cuts(eg.graph());
    for (VertexId v : gs.kernel)
      for (const auto& c : cuts) ASSERT_EQ(std::count(c.second.begin(), c.second.end(), v), 0);
    with_cut += gs.cut.has_value();
    const auto report = check_dichotomy(gs, run_discharging(eg).final_state);
    EXPECT_TRUE(report.pass) << seed;
  }
  RecordProperty("graphs_with_cut", static_cast<int>(with_cut));
}

TEST(GoodSubgraph, GluedOctahedra) {
  // Every vertex of an octahedron lies on the 4-cycle around one of its
  // neighbours, so no kernel can avoid bad cuts here.
  const EmbeddedGraph eg = named_graph("glued_octahedra");
  const GoodSubgraph gs = good_subgraph(eg.graph());
  ASSERT_TRUE(gs.cut);
  EXPECT_FALSE(gs.kernel_avoids_cuts);
  check_structure(eg.graph(), gs);

  const DischargeRun run = run_discharging(eg);
  Rational direct(0);
  for (VertexId v : gs.kernel) direct += run.final_state.vertex_charge[v];
  for (FaceId f : kernel_faces(gs, eg)) direct += run.final_state.face_charge[f];
  EXPECT_EQ(kernel_charge(gs, run.final_state, eg), direct);
}

TEST(GoodSubgraph, KernelChargeOfWholeGraph) {
  const EmbeddedGraph eg = named_graph("icosahedron");
  const GoodSubgraph gs = good_subgraph(eg.graph());
  EXPECT_EQ(kernel_charge(gs, run_discharging(eg).final_state, eg), Rational(12));
}

TEST(GoodSubgraph, QuadCutOnly) {
  const EmbeddedGraph base = named_graph("cube");
  std::vector<std::vector<VertexId>> faces;
  for (const Face& f : base.faces()) faces.push_back(f.walk);
  const Graph& g = base.graph();
  auto edges = g.edges();
  // A hub inside every face of the cube; the six face 4-cycles are then the
  // only bad cuts.
  const std::size_t n = g.id_bound();
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (VertexId v : faces[i]) edges.push_back({v, static_cast<VertexId>(n + i)});
  const Graph hubs = Graph::from_edges(n + faces.size(), edges);
  const auto cuts = find_bad_cuts(hubs);
  ASSERT_EQ(cuts.size(), 6u);
  for (const auto& c : cuts) EXPECT_EQ(c.kind, BadCut::Kind::chordless_quad);
  const GoodSubgraph gs = good_subgraph(hubs);
  ASSERT_TRUE(gs.cut);
  EXPECT_EQ(gs.kernel.size(), 1u);
  EXPECT_TRUE(gs.extraordinary.empty());
  EXPECT_TRUE(gs.kernel_avoids_cuts);
}

}  // namespace
}  // namespace degen
