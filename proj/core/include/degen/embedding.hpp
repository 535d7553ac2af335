#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "degen/graph.hpp"

namespace degen {

using FaceId = std::uint32_t;

// Cyclic order of neighbours around each vertex, indexed by vertex id. Dead or
// isolated vertices have an empty rotation.
using RotationSystem = std::vector<std::vector<VertexId>>;

// A face boundary walk. walk[i] -> walk[i+1] (cyclically) are its darts and
// length() counts edge sides, so a bridge contributes 2. An isolated vertex
// bounds a face of length 0 whose walk is just that vertex.
struct Face {
  std::vector<VertexId> walk;

  std::size_t length() const { return walk.size() == 1 ? 0 : walk.size(); }
};

// One appearance of a vertex on a face walk: the walk enters from `pred` and
// leaves towards `succ`.
struct FaceIncidence {
  FaceId face;
  VertexId pred;
  VertexId succ;
};

// Faces are traced with the rule: after dart u->v take v->w where w follows u
// in v's rotation. Consequently the angle at v between rotation[v][i] and
// rotation[v][i+1] belongs to the face containing dart rotation[v][i] -> v.
std::vector<Face> faces_from_rotation(const Graph& g, const RotationSystem& rotation);

class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  // Validates that `rotation` lists exactly each neighbour set and that every
  // connected component satisfies V - E + F = 2. Throws FormatError.
  EmbeddedGraph(Graph graph, RotationSystem rotation);

  const Graph& graph() const noexcept { return graph_; }
  const RotationSystem& rotation() const noexcept { return rotation_; }
  std::span<const VertexId> rotation(VertexId v) const { return rotation_[v]; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  std::span<const FaceIncidence> face_incidence(VertexId v) const { return incidence_[v]; }

  // Face holding the angle between rotation(v)[i] and rotation(v)[i+1].
  FaceId angle_face(VertexId v, std::size_t i) const { return angle_face_[v][i]; }

  // Index of u in rotation(v); throws std::out_of_range if u is not adjacent.
  std::size_t position(VertexId v, VertexId u) const;

 private:
  Graph graph_;
  RotationSystem rotation_;
  std::vector<Face> faces_;
  std::vector<std::vector<FaceIncidence>> incidence_;
  std::vector<std::vector<FaceId>> angle_face_;
};

// Deterministic plane embedding (Boyer-Myrvold). Throws NotPlanarError.
RotationSystem embed(const Graph& g);

inline EmbeddedGraph embed_graph(const Graph& g) { return EmbeddedGraph(g, embed(g)); }

// The embedding induced on a subgraph: rotations filtered to surviving
// neighbours, which is again a plane embedding.
EmbeddedGraph restrict_embedding(const EmbeddedGraph& eg, const Graph& sub);
RotationSystem restrict_rotation(const RotationSystem& rotation, const Graph& sub);

// Builds an embedding from consistently oriented faces (each dart used by
// exactly one face and its reverse by another). Throws FormatError.
EmbeddedGraph from_oriented_faces(std::size_t vertex_count,
                                  std::span<const std::vector<VertexId>> faces);

// Face-vertex dual of a 2-connected plane graph; dual vertex i is face i.
EmbeddedGraph dual(const EmbeddedGraph& eg);

// Incidences of v on faces of length >= 4, counted per appearance.
std::size_t nontriangular_face_count(const EmbeddedGraph& eg, VertexId v);

struct ConsecutiveFives {
  bool holds = false;
  std::optional<VertexId> central;
  std::array<std::size_t, 3> positions{};  // rotation indices, in order
};

// True iff v has exactly three degree-5 neighbours and they sit in three
// consecutive rotation positions; reports the middle one.
ConsecutiveFives consecutive_five_neighbours(const EmbeddedGraph& eg, VertexId v);

// V - E + F = 2 on every component, and sum of face lengths = 2|E|.
bool satisfies_euler(const EmbeddedGraph& eg);

}  // namespace degen
