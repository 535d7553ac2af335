#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "degen/embedding.hpp"
#include "degen/graph.hpp"

namespace degen::detail {

// A triangulation as oriented triangles with a dart index, supporting vertex
// insertion into a face and diagonal flips.
class FlipTriangulation {
 public:
  using Triangle = std::array<VertexId, 3>;

  static FlipTriangulation k4() {
    FlipTriangulation t;
    t.degree_.assign(4, 3);
    for (const Triangle& f : {Triangle{0, 1, 2}, Triangle{0, 2, 3}, Triangle{0, 3, 1},
                              Triangle{1, 3, 2}})
      t.add_face(f);
    return t;
  }

  std::size_t vertex_count() const { return degree_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  const Triangle& face(std::size_t f) const { return faces_[f]; }
  std::size_t degree(VertexId v) const { return degree_[v]; }
  bool has_edge(VertexId a, VertexId b) const { return darts_.count(key(a, b)) != 0; }

  // Splits face f with a new vertex; returns its id.
  VertexId insert(std::size_t f) {
    const Triangle t = faces_[f];
    const auto x = static_cast<VertexId>(degree_.size());
    degree_.push_back(3);
    for (VertexId v : t) ++degree_[v];
    drop_face(f);
    set_face(f, {t[0], t[1], x});
    add_face({t[1], t[2], x});
    add_face({t[2], t[0], x});
    return x;
  }

  // Endpoints (a, b) of side `side` of face f and the two apexes (c, d).
  struct Quad {
    VertexId a, b, c, d;
    std::size_t f, g;
  };

  Quad quad(std::size_t f, int side) const {
    const Triangle& t = faces_[f];
    const VertexId a = t[side];
    const VertexId b = t[(side + 1) % 3];
    const VertexId c = t[(side + 2) % 3];
    const std::size_t g = darts_.at(key(b, a));
    const Triangle& u = faces_[g];
    VertexId d = u[0];
    for (VertexId x : u)
      if (x != a && x != b) d = x;
    return {a, b, c, d, f, g};
  }

  // Replaces edge ab by cd when cd is not an edge yet.
  bool flip(std::size_t f, int side) {
    const Quad q = quad(f, side);
    if (q.c == q.d || has_edge(q.c, q.d)) return false;
    drop_face(q.f);
    drop_face(q.g);
    set_face(q.f, {q.c, q.a, q.d});
    set_face(q.g, {q.b, q.c, q.d});
    --degree_[q.a];
    --degree_[q.b];
    ++degree_[q.c];
    ++degree_[q.d];
    return true;
  }

  Graph graph() const {
    Graph g(degree_.size());
    for (const Triangle& t : faces_)
      for (int i = 0; i < 3; ++i)
        if (t[i] < t[(i + 1) % 3]) g.add_edge(t[i], t[(i + 1) % 3]);
    return g;
  }

  EmbeddedGraph embedded() const {
    std::vector<std::vector<VertexId>> faces;
    faces.reserve(faces_.size());
    for (const Triangle& t : faces_) faces.push_back({t[0], t[1], t[2]});
    return from_oriented_faces(degree_.size(), faces);
  }

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  void add_face(const Triangle& t) {
    faces_.push_back({});
    set_face(faces_.size() - 1, t);
  }

  void set_face(std::size_t f, const Triangle& t) {
    faces_[f] = t;
    for (int i = 0; i < 3; ++i) darts_[key(t[i], t[(i + 1) % 3])] = static_cast<std::uint32_t>(f);
  }

  void drop_face(std::size_t f) {
    const Triangle& t = faces_[f];
    for (int i = 0; i < 3; ++i) darts_.erase(key(t[i], t[(i + 1) % 3]));
  }

  std::vector<Triangle> faces_;
  std::vector<std::size_t> degree_;
  std::unordered_map<std::uint64_t, std::uint32_t> darts_;
};

}  // namespace degen::detail
