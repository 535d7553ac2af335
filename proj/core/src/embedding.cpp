#include "degen/embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "degen/errors.hpp"
#include "degen/potential.hpp"

namespace degen {

namespace {

// position[v][k] = index in rotation[v] of the k-th smallest neighbour of v.
std::vector<std::vector<std::uint32_t>> position_tables(const Graph& g,
                                                        const RotationSystem& rotation) {
  if (rotation.size() != g.id_bound())
    throw FormatError("rotation system covers " + std::to_string(rotation.size()) +
                      " ids, graph has " + std::to_string(g.id_bound()));
  std::vector<std::vector<std::uint32_t>> pos(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    const auto nbrs = g.neighbours(v);
    const auto& rot = rotation[v];
    if (!g.has_vertex(v)) {
      if (!rot.empty()) throw FormatError("rotation given for removed vertex " + std::to_string(v));
      continue;
    }
    if (rot.size() != nbrs.size())
      throw FormatError("rotation of vertex " + std::to_string(v) + " has " +
                        std::to_string(rot.size()) + " entries, degree is " +
                        std::to_string(nbrs.size()));
    pos[v].assign(nbrs.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < rot.size(); ++i) {
      auto it = std::lower_bound(nbrs.begin(), nbrs.end(), rot[i]);
      if (it == nbrs.end() || *it != rot[i])
        throw FormatError("rotation of vertex " + std::to_string(v) + " lists non-neighbour " +
                          std::to_string(rot[i]));
      auto& slot = pos[v][static_cast<std::size_t>(it - nbrs.begin())];
      if (slot != UINT32_MAX)
        throw FormatError("rotation of vertex " + std::to_string(v) + " repeats " +
                          std::to_string(rot[i]));
      slot = i;
    }
  }
  return pos;
}

std::uint32_t lookup(const Graph& g, const std::vector<std::vector<std::uint32_t>>& pos,
                     VertexId v, VertexId u) {
  const auto nbrs = g.neighbours(v);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u);
  if (it == nbrs.end() || *it != u)
    throw std::out_of_range(std::to_string(u) + " is not adjacent to " + std::to_string(v));
  return pos[v][static_cast<std::size_t>(it - nbrs.begin())];
}

struct Traced {
  std::vector<Face> faces;
  std::vector<std::vector<FaceIncidence>> incidence;
  std::vector<std::vector<FaceId>> angle_face;
};

Traced trace(const Graph& g, const RotationSystem& rotation,
             const std::vector<std::vector<std::uint32_t>>& pos) {
  Traced t;
  t.incidence.resize(g.id_bound());
  t.angle_face.resize(g.id_bound());
  std::vector<std::vector<std::uint8_t>> used(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    used[v].assign(rotation[v].size(), 0);
    t.angle_face[v].assign(rotation[v].size(), 0);
  }
  for (VertexId s = 0; s < g.id_bound(); ++s) {
    if (!g.has_vertex(s)) continue;
    if (rotation[s].empty()) {
      const auto f = static_cast<FaceId>(t.faces.size());
      t.faces.push_back(Face{{s}});
      t.incidence[s].push_back({f, s, s});
      continue;
    }
    for (std::size_t i = 0; i < rotation[s].size(); ++i) {
      if (used[s][i]) continue;
      const auto f = static_cast<FaceId>(t.faces.size());
      Face face;
      VertexId u = s;
      std::size_t idx = i;
      while (!used[u][idx]) {
        used[u][idx] = 1;
        face.walk.push_back(u);
        const VertexId v = rotation[u][idx];
        const std::uint32_t back = lookup(g, pos, v, u);
        const std::size_t next = (back + 1) % rotation[v].size();
        t.angle_face[v][back] = f;
        t.incidence[v].push_back({f, u, rotation[v][next]});
        u = v;
        idx = next;
      }
      t.faces.push_back(std::move(face));
    }
  }
  return t;
}

}  // namespace

std::vector<Face> faces_from_rotation(const Graph& g, const RotationSystem& rotation) {
  return trace(g, rotation, position_tables(g, rotation)).faces;
}

EmbeddedGraph::EmbeddedGraph(Graph graph, RotationSystem rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  const auto pos = position_tables(graph_, rotation_);
  Traced t = trace(graph_, rotation_, pos);
  faces_ = std::move(t.faces);
  incidence_ = std::move(t.incidence);
  angle_face_ = std::move(t.angle_face);
  if (!satisfies_euler(*this))
    throw FormatError("rotation system is not a plane embedding (Euler check failed)");
}

std::size_t EmbeddedGraph::position(VertexId v, VertexId u) const {
  const auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end())
    throw std::out_of_range(std::to_string(u) + " is not adjacent to " + std::to_string(v));
  return static_cast<std::size_t>(it - rot.begin());
}

bool satisfies_euler(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  const auto comps = connected_components(g);
  std::vector<std::uint32_t> comp_of(g.id_bound(), 0);
  for (std::uint32_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c]) comp_of[v] = c;
  std::vector<std::int64_t> chi(comps.size(), 0);
  std::size_t length_sum = 0;
  for (std::uint32_t c = 0; c < comps.size(); ++c) {
    std::int64_t deg = 0;
    for (VertexId v : comps[c]) deg += static_cast<std::int64_t>(g.degree(v));
    chi[c] = static_cast<std::int64_t>(comps[c].size()) - deg / 2;
  }
  for (const Face& f : eg.faces()) {
    ++chi[comp_of[f.walk.front()]];
    length_sum += f.length();
  }
  if (length_sum != 2 * g.edge_count()) return false;
  return std::all_of(chi.begin(), chi.end(), [](std::int64_t x) { return x == 2; });
}

RotationSystem embed(const Graph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>,
                            boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

  BoostGraph bg(g.id_bound());
  int index = 0;
  for (const auto& [u, v] : g.edges()) {
    auto e = boost::add_edge(u, v, bg).first;
    boost::put(boost::edge_index, bg, e, index++);
  }
  std::vector<std::vector<BoostEdge>> storage(boost::num_vertices(bg));
  auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding);
  if (!planar) throw NotPlanarError();

  RotationSystem rotation(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    for (const auto& e : storage[v]) {
      const auto s = static_cast<VertexId>(boost::source(e, bg));
      const auto t = static_cast<VertexId>(boost::target(e, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  }
  return rotation;
}

RotationSystem restrict_rotation(const RotationSystem& rotation, const Graph& sub) {
  RotationSystem out(sub.id_bound());
  for (VertexId v = 0; v < sub.id_bound() && v < rotation.size(); ++v) {
    if (!sub.has_vertex(v)) continue;
    out[v].reserve(sub.degree(v));
    for (VertexId u : rotation[v])
      if (sub.has_vertex(u) && sub.has_edge(v, u)) out[v].push_back(u);
  }
  return out;
}

EmbeddedGraph restrict_embedding(const EmbeddedGraph& eg, const Graph& sub) {
  return EmbeddedGraph(sub, restrict_rotation(eg.rotation(), sub));
}

EmbeddedGraph from_oriented_faces(std::size_t vertex_count,
                                  std::span<const std::vector<VertexId>> faces) {
  // succ[v][u] = w for every face passing u -> v -> w.
  std::vector<std::map<VertexId, VertexId>> succ(vertex_count);
  Graph g(vertex_count);
  for (const auto& face : faces) {
    const std::size_t len = face.size();
    if (len < 3) throw FormatError("face with fewer than three vertices");
    for (std::size_t i = 0; i < len; ++i) {
      const VertexId u = face[i];
      const VertexId v = face[(i + 1) % len];
      const VertexId w = face[(i + 2) % len];
      if (u >= vertex_count || v >= vertex_count) throw FormatError("face vertex out of range");
      if (!succ[v].emplace(u, w).second)
        throw FormatError("dart " + std::to_string(u) + "->" + std::to_string(v) +
                          " used by two faces");
      if (u < v && !g.has_edge(u, v)) g.add_edge(u, v);
      if (v < u && !g.has_edge(u, v)) g.add_edge(v, u);
    }
  }
  RotationSystem rotation(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (succ[v].empty()) continue;
    if (succ[v].size() != g.degree(v))
      throw FormatError("faces around vertex " + std::to_string(v) + " do not close up");
    VertexId u = succ[v].begin()->first;
    for (std::size_t k = 0; k < succ[v].size(); ++k) {
      rotation[v].push_back(u);
      auto it = succ[v].find(u);
      if (it == succ[v].end()) throw FormatError("faces around vertex " + std::to_string(v) +
                                                 " do not form a single cycle");
      u = it->second;
    }
    if (u != rotation[v].front())
      throw FormatError("faces around vertex " + std::to_string(v) + " do not form a cycle");
  }
  return EmbeddedGraph(std::move(g), std::move(rotation));
}

EmbeddedGraph dual(const EmbeddedGraph& eg) {
  // The dual face around primal vertex v visits, in rotation order of v, the
  // faces of the angles at v. Reversing that order keeps darts consistent.
  std::vector<std::vector<VertexId>> faces;
  for (VertexId v : eg.graph().vertices()) {
    std::vector<VertexId> cycle;
    for (std::size_t i = eg.rotation(v).size(); i-- > 0;) cycle.push_back(eg.angle_face(v, i));
    faces.push_back(std::move(cycle));
  }
  return from_oriented_faces(eg.faces().size(), faces);
}

std::size_t nontriangular_face_count(const EmbeddedGraph& eg, VertexId v) {
  std::size_t count = 0;
  for (const auto& inc : eg.face_incidence(v))
    if (eg.face(inc.face).length() >= 4) ++count;
  return count;
}

ConsecutiveFives consecutive_five_neighbours(const EmbeddedGraph& eg, VertexId v) {
  ConsecutiveFives out;
  const auto rot = eg.rotation(v);
  const std::size_t d = rot.size();
  std::vector<std::size_t> fives;
  for (std::size_t i = 0; i < d; ++i)
    if (eg.graph().degree(rot[i]) == 5) fives.push_back(i);
  if (fives.size() != 3 || d < 3) return out;
  for (std::size_t s = 0; s < 3; ++s) {
    const std::size_t a = fives[s];
    const std::size_t b = fives[(s + 1) % 3];
    const std::size_t c = fives[(s + 2) % 3];
    if (b == (a + 1) % d && c == (a + 2) % d) {
      out.holds = true;
      out.central = rot[b];
      out.positions = {a, b, c};
      return out;
    }
  }
  return out;
}

}  // namespace degen
