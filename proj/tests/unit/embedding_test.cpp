#include <gtest/gtest.h>

#include <map>
#include <random>

#include "degen/embedding.hpp"
#include "degen/enumeration.hpp"
#include "degen/errors.hpp"
#include "degen/generators.hpp"
#include "degen/planar_code.hpp"
#include "oracles.hpp"

namespace degen {
namespace {

std::map<std::size_t, std::size_t> face_length_histogram(const EmbeddedGraph& eg) {
  std::map<std::size_t, std::size_t> h;
  for (const Face& f : eg.faces()) ++h[f.length()];
  return h;
}

TEST(Embedding, PlatonicSolids) {
  struct Row {
    const char* name;
    std::size_t v, e, f, len;
  };
  for (const Row& r : {Row{"K4", 4, 6, 4, 3}, Row{"octahedron", 6, 12, 8, 3},
                       Row{"icosahedron", 12, 30, 20, 3}, Row{"cube", 8, 12, 6, 4},
                       Row{"dodecahedron", 20, 30, 12, 5}}) {
    const EmbeddedGraph eg = named_graph(r.name);
    EXPECT_EQ(eg.graph().vertex_count(), r.v) << r.name;
    EXPECT_EQ(eg.graph().edge_count(), r.e) << r.name;
    EXPECT_EQ(eg.faces().size(), r.f) << r.name;
    EXPECT_EQ(face_length_histogram(eg), (std::map<std::size_t, std::size_t>{{r.len, r.f}}))
        << r.name;
    EXPECT_TRUE(satisfies_euler(eg)) << r.name;
  }
}

TEST(Embedding, RejectsNonPlanar) {
  EXPECT_THROW(embed(testing::complete_graph(5)), NotPlanarError);
  Graph k33(6);
  for (VertexId a = 0; a < 3; ++a)
    for (VertexId b = 3; b < 6; ++b) k33.add_edge(a, b);
  EXPECT_THROW(embed(k33), NotPlanarError);
}

TEST(Embedding, TreesAndForests) {
  const Graph tree = testing::random_tree(12, 3);
  const EmbeddedGraph eg = embed_graph(tree);
  ASSERT_EQ(eg.faces().size(), 1u);
  EXPECT_EQ(eg.faces()[0].length(), 22u);

  Graph forest(5);
  forest.add_edge(0, 1);
  const EmbeddedGraph ef = embed_graph(forest);
  EXPECT_TRUE(satisfies_euler(ef));
  EXPECT_EQ(ef.faces().size(), 4u);  // one per component
}

TEST(Embedding, RejectsInconsistentRotation) {
  const EmbeddedGraph oct = named_graph("octahedron");
  RotationSystem rot = oct.rotation();
  std::swap(rot[0][0], rot[0][1]);
  EXPECT_THROW(EmbeddedGraph(oct.graph(), rot), FormatError);
  rot = oct.rotation();
  rot[0].pop_back();
  EXPECT_THROW(EmbeddedGraph(oct.graph(), rot), FormatError);
}

TEST(Embedding, AngleFacesFollowTheTracingRule) {
  const EmbeddedGraph eg = random_triangulation(40, 11);
  for (VertexId v : eg.graph().vertices()) {
    const auto rot = eg.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Face& f = eg.face(eg.angle_face(v, i));
      const auto& w = f.walk;
      bool found = false;
      for (std::size_t j = 0; j < w.size(); ++j)
        found = found || (w[j] == rot[i] && w[(j + 1) % w.size()] == v &&
                          w[(j + 2) % w.size()] == rot[(i + 1) % rot.size()]);
      EXPECT_TRUE(found) << v << " " << i;
    }
  }
}

TEST(Embedding, RestrictionKeepsEuler) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const EmbeddedGraph eg = random_triangulation(50, seed);
    Graph sub = eg.graph();
    for (int i = 0; i < 10; ++i) {
      const auto vs = sub.vertices();
      sub.remove_vertex(vs[rng() % vs.size()]);
    }
    const EmbeddedGraph r = restrict_embedding(eg, sub);
    EXPECT_TRUE(satisfies_euler(r));
    std::size_t total = 0;
    for (const Face& f : r.faces()) total += f.length();
    EXPECT_EQ(total, 2 * sub.edge_count());
  }
}

TEST(Embedding, DualOfCubeIsOctahedron) {
  const EmbeddedGraph d = dual(named_graph("cube"));
  EXPECT_EQ(canonical_code(d.graph()), canonical_code(named_graph("octahedron").graph()));
  const EmbeddedGraph dd = dual(named_graph("icosahedron"));
  EXPECT_EQ(dd.graph().vertex_count(), 20u);
  for (VertexId v : dd.graph().vertices()) EXPECT_EQ(dd.graph().degree(v), 3u);
  EXPECT_EQ(dd.faces().size(), 12u);
}

TEST(Embedding, NontriangularIncidencesAreCountedPerAppearance) {
  const EmbeddedGraph cube = named_graph("cube");
  for (VertexId v : cube.graph().vertices()) EXPECT_EQ(nontriangular_face_count(cube, v), 3u);

  // A path embeds with one face that visits the middle vertex twice.
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  const EmbeddedGraph ep = embed_graph(path);
  EXPECT_EQ(nontriangular_face_count(ep, 1), 2u);
}

TEST(Embedding, ConsecutiveFives) {
  // Ring degrees around the centre: three 5s in a row, then 6s.
  const EmbeddedGraph w = ringed_wheel({6, 5, 5, 5, 6, 6, 6, 6});
  const auto c = consecutive_five_neighbours(w, 0);
  ASSERT_TRUE(c.holds);
  EXPECT_EQ(c.central, std::optional<VertexId>(3));

  const EmbeddedGraph split = ringed_wheel({5, 6, 5, 5, 6, 6, 6, 6});
  EXPECT_FALSE(consecutive_five_neighbours(split, 0).holds);

  // Wrap-around: positions 7, 0, 1.
  const EmbeddedGraph wrap = ringed_wheel({5, 5, 6, 6, 6, 6, 6, 5});
  const auto cw = consecutive_five_neighbours(wrap, 0);
  ASSERT_TRUE(cw.holds);
  EXPECT_EQ(cw.central, std::optional<VertexId>(1));
}

TEST(PlanarCode, RoundTripPreservesRotation) {
  for (std::size_t n : {4u, 20u, 300u}) {
    const EmbeddedGraph eg = random_triangulation(n, n);
    const auto bytes = encode_planar_code(eg);
    std::size_t offset = 0;
    const EmbeddedGraph back = decode_planar_code(bytes, offset);
    EXPECT_EQ(offset, bytes.size());
    EXPECT_EQ(back.graph(), eg.graph());
    EXPECT_EQ(back.rotation(), eg.rotation());
  }
}

TEST(PlanarCode, KnownBytesForK4) {
  const std::vector<EmbeddedGraph> one{named_graph("K4")};
  const auto bytes = encode_planar_code_stream(one, false);
  ASSERT_EQ(bytes.size(), 1u + 4u * 4u);
  EXPECT_EQ(bytes[0], 4);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(bytes[4 * i + 4], 0);
}

TEST(PlanarCode, TruncationReportsOffset) {
  const std::vector<EmbeddedGraph> two{named_graph("K4"), named_graph("octahedron")};
  auto bytes = encode_planar_code_stream(two, true);
  bytes.resize(bytes.size() - 3);
  std::size_t offset = 0;
  skip_planar_code_header(bytes, offset);
  decode_planar_code(bytes, offset);
  const std::size_t second = offset;
  try {
    decode_planar_code(bytes, offset);
    FAIL() << "truncated record accepted";
  } catch (const FormatError& e) {
    EXPECT_GE(e.offset(), second);
    EXPECT_LE(e.offset(), bytes.size());
  }
}

}  // namespace
}  // namespace degen
