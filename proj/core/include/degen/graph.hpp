#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace degen {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph over a fixed id space [0, id_bound()). Removing a
// vertex leaves a tombstone so ids stay stable across deletions; certificates
// and ledgers always refer to the ids of the original input.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t id_bound() const noexcept { return adjacency_.size(); }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return vertex_count_ == 0; }

  bool has_vertex(VertexId v) const noexcept {
    return v < adjacency_.size() && alive_[v] != 0;
  }
  bool has_edge(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  // Sorted ascending.
  std::span<const VertexId> neighbours(VertexId v) const { return adjacency_[v]; }

  // Live vertex ids, ascending.
  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;

  // Throws std::invalid_argument on loops, parallel edges or dead endpoints.
  void add_edge(VertexId u, VertexId v);

  // Throws std::out_of_range for unknown or already removed vertices.
  void remove_vertex(VertexId v);

  Graph without_vertex(VertexId v) const;

  // Subgraph induced by `keep`, in the same id space (others become tombstones).
  Graph induced(std::span<const VertexId> keep) const;

  // Same graph with ids renumbered 0..n-1 in ascending order of old id.
  Graph compacted() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint8_t> alive_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

// Free-function form of Graph::without_vertex.
Graph delete_vertex(const Graph& g, VertexId v);

}  // namespace degen
