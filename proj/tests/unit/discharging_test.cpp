#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "degen/discharging.hpp"
#include "degen/generators.hpp"

namespace degen {
namespace {

// Triangulation with a random matching of edges removed, so that some
// vertices sit on 4- and 5-faces.
EmbeddedGraph with_holes(const EmbeddedGraph& eg, std::uint64_t seed, std::size_t holes) {
  const Graph& g = eg.graph();
  auto edges = g.edges();
  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<std::uint8_t> used(g.id_bound(), 0);
  std::vector<Edge> kept;
  std::size_t removed = 0;
  for (auto [u, v] : edges) {
    if (removed < holes && !used[u] && !used[v] && g.degree(u) > 5 && g.degree(v) > 5) {
      used[u] = used[v] = 1;
      ++removed;
      continue;
    }
    kept.push_back({u, v});
  }
  return restrict_embedding(eg, Graph::from_edges(g.id_bound(), kept));
}

std::vector<EmbeddedGraph> corpus() {
  std::vector<EmbeddedGraph> out;
  for (const auto& name : named_graph_names()) out.push_back(named_graph(name));
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    out.push_back(random_triangulation(40 + 10 * seed, seed, 5));
    out.push_back(random_triangulation(30 + 5 * seed, seed, 3));
    out.push_back(with_holes(random_triangulation(60, seed, 5), seed, 6));
  }
  return out;
}

// Table rows written out again: degree (10 = 10+), minimum number of
// non-triangular incidences, maximum 5-neighbours (-1 = three consecutive).
struct Row {
  TypeLabel label;
  int degree;
  std::size_t nontri;
  int fives;
};
constexpr Row kRows[] = {
    {TypeLabel::t10a, 10, 0, 3}, {TypeLabel::t10b, 10, 0, 1000}, {TypeLabel::t9a, 9, 1, 3},
    {TypeLabel::t9b, 9, 0, 2},   {TypeLabel::t9c, 9, 0, -1},     {TypeLabel::t9d, 9, 0, 9},
    {TypeLabel::t8a, 8, 0, 1},   {TypeLabel::t8b, 8, 1, 2},      {TypeLabel::t8c, 8, 2, -1},
    {TypeLabel::t8d, 8, 0, 2},   {TypeLabel::t8e, 8, 0, 8},      {TypeLabel::t7a, 7, 0, 1},
    {TypeLabel::t7b, 7, 1, 2},   {TypeLabel::t7c, 7, 0, 2},      {TypeLabel::t7d, 7, 0, 7},
    {TypeLabel::t6a, 6, 1, 1},   {TypeLabel::t6b, 6, 0, 6},
};

bool three_consecutive_fives(const EmbeddedGraph& eg, VertexId v) {
  const auto rot = eg.rotation(v);
  const std::size_t d = rot.size();
  std::size_t fives = 0;
  for (VertexId u : rot) fives += eg.graph().degree(u) == 5;
  if (fives != 3) return false;
  for (std::size_t i = 0; i < d; ++i) {
    bool run = true;
    for (std::size_t j = 0; j < 3; ++j) run = run && eg.graph().degree(rot[(i + j) % d]) == 5;
    if (run) return true;
  }
  return false;
}

TypeLabel reference_type(const EmbeddedGraph& eg, VertexId v) {
  const Graph& g = eg.graph();
  const std::size_t d = g.degree(v);
  if (d < 6) return TypeLabel::none;
  std::size_t nontri = 0;
  for (const Face& f : eg.faces())
    for (VertexId x : f.walk) nontri += x == v && f.length() >= 4;
  int fives = 0;
  for (VertexId u : g.neighbours(v)) fives += g.degree(u) == 5;
  for (const Row& r : kRows) {
    if (r.degree == 10 ? d < 10 : static_cast<int>(d) != r.degree) continue;
    if (nontri < r.nontri) continue;
    if (r.fives < 0 ? three_consecutive_fives(eg, v) : fives <= r.fives) return r.label;
  }
  return TypeLabel::none;
}

TEST(Types, MatchFirstApplicableRow) {
  std::map<TypeLabel, int> seen;
  for (const auto& eg : corpus()) {
    const auto types = classify_types(eg);
    for (VertexId v : eg.graph().vertices()) {
      ASSERT_EQ(types[v].label, reference_type(eg, v))
          << "vertex " << v << " got " << label_name(types[v].label);
      ++seen[types[v].label];
    }
  }
  EXPECT_GE(seen.size(), 8u);
}

TEST(Types, RingedWheelCentres) {
  EXPECT_EQ(classify_vertex(ringed_wheel(std::vector<std::size_t>(8, 5)), 0).label, TypeLabel::t8e);
  EXPECT_EQ(classify_vertex(ringed_wheel({5, 6, 6, 6, 6, 6, 6, 6}), 0).label, TypeLabel::t8a);
  EXPECT_EQ(classify_vertex(ringed_wheel({5, 6, 5, 6, 6, 6, 6, 6}), 0).label, TypeLabel::t8d);
  EXPECT_EQ(classify_vertex(ringed_wheel(std::vector<std::size_t>(10, 5)), 0).label,
            TypeLabel::t10b);
  EXPECT_EQ(classify_vertex(ringed_wheel({5, 5, 5, 6, 6, 6, 6, 6, 6, 6}), 0).label,
            TypeLabel::t10a);
  EXPECT_EQ(classify_vertex(ringed_wheel({6, 6, 6, 6, 6, 6}), 0).label, TypeLabel::t6b);
  EXPECT_EQ(classify_vertex(ringed_wheel({5, 6, 6, 6, 6, 6, 6}), 0).label, TypeLabel::t7a);

  const EmbeddedGraph nine = ringed_wheel({6, 5, 5, 5, 6, 6, 6, 6, 6});
  const VertexType t = classify_vertex(nine, 0);
  EXPECT_EQ(t.label, TypeLabel::t9c);
  EXPECT_EQ(max_charge(t, 3), Rational(1));
  EXPECT_EQ(max_charge(t, 2), Rational(9, 10));
  EXPECT_EQ(max_charge(t, 4), Rational(9, 10));
}

TEST(Types, EightCNeedsTwoOpenFaces) {
  // Dropping rim edges 1-2 and 5-6 opens two 4-faces at the centre and leaves
  // ring degrees 6,5,5,5,6,6,6,6.
  const EmbeddedGraph base = ringed_wheel({7, 6, 5, 5, 7, 7, 6, 6});
  const Graph& g = base.graph();
  std::vector<Edge> kept;
  for (auto e : g.edges())
    if (e != Edge{1, 2} && e != Edge{5, 6}) kept.push_back(e);
  const EmbeddedGraph opened = restrict_embedding(base, Graph::from_edges(g.id_bound(), kept));
  ASSERT_EQ(opened.graph().degree(0), 8u);
  EXPECT_EQ(nontriangular_face_count(opened, 0), 2u);
  const VertexType t = classify_vertex(opened, 0);
  EXPECT_EQ(t.label, TypeLabel::t8c);
  EXPECT_EQ(t.central, std::optional<VertexId>(3));
  EXPECT_EQ(t.label, reference_type(opened, 0));

  // With the triangles intact the same neighbourhood is only 8e.
  EXPECT_EQ(classify_vertex(ringed_wheel({6, 5, 5, 5, 6, 6, 6, 6}), 0).label, TypeLabel::t8e);
}

TEST(Charges, InitialTotalIsTwelve) {
  for (const auto& eg : corpus()) {
    std::int64_t sum = 0;
    for (VertexId v : eg.graph().vertices()) sum += 6 - static_cast<std::int64_t>(eg.graph().degree(v));
    for (const Face& f : eg.faces()) sum += 2 * (3 - static_cast<std::int64_t>(f.length()));
    EXPECT_EQ(sum, 12);
    EXPECT_EQ(initial_charges(eg).total(), Rational(12));
  }
}

TEST(Charges, EveryStageConserves) {
  for (const auto& eg : corpus()) {
    const DischargeRun run = run_discharging(eg);
    for (const auto& t : run.stage_totals) EXPECT_EQ(t, Rational(12));
    EXPECT_TRUE(ledger_consistent(run.initial, run.final_state));
  }
}

TEST(Charges, IcosahedronEndsAtOnePerVertex) {
  const EmbeddedGraph ico = named_graph("icosahedron");
  const DischargeRun run = run_discharging(ico);
  for (VertexId v : ico.graph().vertices()) EXPECT_EQ(run.final_state.vertex_charge[v], Rational(1));
  for (const auto& c : run.final_state.face_charge) EXPECT_EQ(c, Rational(0));
}

TEST(Charges, StepOneRule) {
  for (const auto& eg : corpus()) {
    const Graph& g = eg.graph();
    const ChargeState s = step1_face_discharge(initial_charges(eg), eg);
    std::vector<Rational> expected(g.id_bound(), Rational(0));
    for (VertexId v : g.vertices()) expected[v] = Rational(6 - static_cast<std::int64_t>(g.degree(v)));
    for (const Face& f : eg.faces()) {
      if (f.length() < 4) continue;
      const auto& w = f.walk;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const VertexId v = w[i];
        const VertexId a = w[(i + w.size() - 1) % w.size()];
        const VertexId b = w[(i + 1) % w.size()];
        if (g.degree(v) == 6) expected[v] -= Rational(2, 5);
        else if (g.degree(a) == 6 && g.degree(b) == 6) expected[v] -= Rational(3, 5);
        else expected[v] -= Rational(1, 2);
      }
    }
    EXPECT_EQ(s.vertex_charge, expected);
  }
}

using InstanceKey = std::tuple<VertexId, VertexId, std::array<VertexId, 4>>;

std::vector<InstanceKey> reference_instances(const EmbeddedGraph& eg, bool strict, bool single,
                                             bool exclusive) {
  const Graph& g = eg.graph();
  auto fives_of = [&](VertexId x) {
    int c = 0;
    for (VertexId u : g.neighbours(x)) c += g.degree(u) == 5;
    return c;
  };
  std::vector<InstanceKey> out;
  for (VertexId w : g.vertices()) {
    const auto rot = eg.rotation(w);
    const std::size_t d = rot.size();
    if (d < 7) continue;
    for (std::size_t i = 0; i < d; ++i) {
      std::array<VertexId, 4> p{};
      for (std::size_t j = 0; j < 4; ++j) p[j] = rot[(i + j) % d];
      if (g.degree(p[0]) < 6 || g.degree(p[1]) != 6 || g.degree(p[2]) != 6 || g.degree(p[3]) < 6)
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < 3; ++j) ok = ok && g.has_edge(p[j], p[j + 1]);
      if (strict) {
        // Each angle w, p[j], p[j+1] must bound a triangular face.
        for (std::size_t j = 0; j < 3; ++j) {
          bool tri = false;
          for (const Face& f : eg.faces()) {
            if (f.length() != 3) continue;
            for (std::size_t k = 0; k < 3; ++k)
              tri = tri || (f.walk[k] == p[j] && f.walk[(k + 1) % 3] == w &&
                            f.walk[(k + 2) % 3] == p[j + 1]);
          }
          ok = ok && tri;
        }
      }
      if (single) ok = ok && fives_of(p[1]) == 1 && fives_of(p[2]) == 1;
      if (!ok) continue;
      for (VertexId s : g.vertices()) {
        if (s == w || s == p[0] || s == p[3] || g.degree(s) != 5) continue;
        if (g.has_edge(s, p[1]) && g.has_edge(s, p[2])) out.emplace_back(s, w, p);
      }
    }
  }
  if (exclusive) {
    std::vector<InstanceKey> kept;
    for (const auto& [s, w, p] : out) {
      bool clash = false;
      for (const auto& [s2, w2, q] : out)
        if (w2 == w && q != p)
          for (VertexId x : q) clash = clash || x == p[1] || x == p[2];
      if (!clash) kept.emplace_back(s, w, p);
    }
    out = std::move(kept);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(DistanceDischarging, InstancesMatchReference) {
  std::size_t total = 0;
  for (const auto& eg : corpus()) {
    for (bool strict : {true, false})
      for (bool single : {true, false})
        for (bool exclusive : {true, false}) {
          std::vector<InstanceKey> got;
          for (const auto& inst : distance_instances(eg, {strict, single, exclusive}))
            got.emplace_back(inst.sender, inst.receiver, inst.witness_path);
          std::sort(got.begin(), got.end());
          ASSERT_EQ(got, reference_instances(eg, strict, single, exclusive));
          total += got.size();
        }
  }
  EXPECT_GT(total, 0u);
}

TEST(DistanceDischarging, InflowBound) {
  EXPECT_EQ(distance_inflow_bound(7, 0), Rational(2, 5));
  EXPECT_EQ(distance_inflow_bound(10, 2), Rational(2, 5));
  EXPECT_EQ(distance_inflow_bound(8, 8), Rational(0));
  for (const auto& eg : corpus()) {
    const DischargeRun run = run_discharging(eg);
    EXPECT_TRUE(check_distance_inflow(run.final_state, eg).empty());
  }
}

TEST(FinalDischarging, RecomputedIndependently) {
  for (const auto& eg : corpus()) {
    const Graph& g = eg.graph();
    const auto types = classify_types(eg);
    const ChargeState mid = step2_distance_discharge(step1_face_discharge(initial_charges(eg), eg), eg);
    const ChargeState fin = step3_final_discharge(mid, eg, types);
    std::vector<Rational> expected = mid.vertex_charge;
    for (VertexId v : g.vertices()) {
      if (g.degree(v) != 5) continue;
      std::vector<std::pair<Rational, VertexId>> targets;
      for (VertexId w : g.neighbours(v)) {
        if (g.degree(w) < 6) continue;
        Rational mc = types[w].max_charge;
        if (types[w].central) mc = *types[w].central == v ? Rational(1) : Rational(9, 10);
        targets.emplace_back(mc, w);
      }
      std::sort(targets.begin(), targets.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });
      for (const auto& [mc, w] : targets) {
        const Rational give = std::min(mc, std::max(Rational(0), expected[v]));
        expected[v] -= give;
        expected[w] += give;
      }
    }
    EXPECT_EQ(fin.vertex_charge, expected);
    for (VertexId v : g.vertices())
      if (g.degree(v) == 5 && fin.completely_discharged_into[v]) {
        EXPECT_LE(fin.vertex_charge[v], Rational(0));
      }
  }
}

TEST(FaceCharges, NonPositiveOnMinimumDegreeFive) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const EmbeddedGraph eg = random_triangulation(100, seed, 5);
    const auto report = check_lemma_faces(run_discharging(eg).final_state, eg);
    EXPECT_TRUE(report.hypothesis_met);
    EXPECT_TRUE(report.pass) << seed;
  }
  const EmbeddedGraph cube = named_graph("cube");
  EXPECT_FALSE(check_lemma_faces(run_discharging(cube).final_state, cube).hypothesis_met);
}

TEST(Ledger, DetectsTampering) {
  const EmbeddedGraph eg = random_triangulation(50, 1, 5);
  DischargeRun run = run_discharging(eg);
  ASSERT_TRUE(ledger_consistent(run.initial, run.final_state));
  run.final_state.vertex_charge[0] += Rational(1, 5);
  EXPECT_FALSE(ledger_consistent(run.initial, run.final_state));
}

}  // namespace
}  // namespace degen
