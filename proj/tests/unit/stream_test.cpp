#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "degen/errors.hpp"
#include "degen/generators.hpp"
#include "degen/graph6.hpp"
#include "degen/planar_code.hpp"
#include "degen/stream.hpp"
#include "oracles.hpp"

namespace degen {
namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

TEST(Stream, Graph6Lines) {
  GraphStream s(bytes_of(">>graph6<<C~\nD~{\n\nCl\n"), StreamFormat::graph6);
  auto a = s.next();
  ASSERT_TRUE(a);
  EXPECT_EQ(a->graph, testing::complete_graph(4));
  EXPECT_TRUE(a->planar);
  ASSERT_TRUE(a->embedding);
  EXPECT_EQ(a->embedding->faces().size(), 4u);
  EXPECT_EQ(a->offset, 10u);

  auto b = s.next();
  ASSERT_TRUE(b);
  EXPECT_EQ(b->index, 1u);
  EXPECT_FALSE(b->planar);
  EXPECT_FALSE(b->embedding);

  auto c = s.next();
  ASSERT_TRUE(c);
  EXPECT_EQ(c->graph, testing::cycle_graph(4));
  EXPECT_FALSE(s.next());
}

TEST(Stream, Graph6ErrorCarriesAbsoluteOffset) {
  GraphStream s(bytes_of("C~\nD~\n"), StreamFormat::graph6);
  ASSERT_TRUE(s.next());
  try {
    s.next();
    FAIL() << "short record accepted";
  } catch (const FormatError& e) {
    EXPECT_GE(e.offset(), 3u);
    EXPECT_LE(e.offset(), 6u);
  }
}

TEST(Stream, PlanarCodeRecords) {
  std::vector<EmbeddedGraph> graphs;
  for (const char* name : {"K4", "octahedron", "icosahedron"}) graphs.push_back(named_graph(name));
  GraphStream s(encode_planar_code_stream(graphs), StreamFormat::planar_code);
  std::size_t i = 0;
  while (auto rec = s.next()) {
    ASSERT_LT(i, graphs.size());
    EXPECT_TRUE(rec->planar);
    EXPECT_EQ(rec->embedding->rotation(), graphs[i].rotation());
    ++i;
  }
  EXPECT_EQ(i, 3u);
}

TEST(Stream, TruncatedPlanarCode) {
  const std::vector<EmbeddedGraph> graphs{named_graph("K4"), named_graph("cube")};
  auto bytes = encode_planar_code_stream(graphs);
  const std::size_t full = bytes.size();
  bytes.resize(full - 5);
  GraphStream s(bytes, StreamFormat::planar_code);
  ASSERT_TRUE(s.next());
  try {
    s.next();
    FAIL() << "truncated record accepted";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.offset(), bytes.size());
  }
}

TEST(Stream, ReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "degen_stream_test.g6";
  {
    std::ofstream out(path);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
      out << encode_graph6(random_triangulation(20, seed).graph()) << "\n";
  }
  const auto records = read_stream(path, StreamFormat::graph6);
  std::filesystem::remove(path);
  ASSERT_EQ(records.size(), 5u);
  for (const auto& r : records) EXPECT_TRUE(r.planar);
  EXPECT_THROW(read_stream(path, StreamFormat::graph6), std::runtime_error);
}

TEST(Stream, FormatNames) {
  EXPECT_EQ(parse_stream_format("graph6"), StreamFormat::graph6);
  EXPECT_EQ(parse_stream_format("planar_code"), StreamFormat::planar_code);
  EXPECT_FALSE(parse_stream_format("dot"));
}

}  // namespace
}  // namespace degen
