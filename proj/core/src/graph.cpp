#include "degen/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace degen {

Graph::Graph(std::size_t vertex_count)
    : adjacency_(vertex_count), alive_(vertex_count, 1), vertex_count_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId other = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (VertexId v = 0; v < adjacency_.size(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("edge endpoint is not a vertex: " + std::to_string(u) + "-" +
                                std::to_string(v));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v)
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_vertex(VertexId v) {
  if (!has_vertex(v)) throw std::out_of_range("unknown vertex " + std::to_string(v));
  for (VertexId u : adjacency_[v]) {
    auto& nu = adjacency_[u];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  }
  edge_count_ -= adjacency_[v].size();
  adjacency_[v].clear();
  adjacency_[v].shrink_to_fit();
  alive_[v] = 0;
  --vertex_count_;
}

Graph Graph::without_vertex(VertexId v) const {
  Graph copy = *this;
  copy.remove_vertex(v);
  return copy;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<std::uint8_t> mark(adjacency_.size(), 0);
  for (VertexId v : keep) {
    if (!has_vertex(v)) throw std::out_of_range("unknown vertex " + std::to_string(v));
    mark[v] = 1;
  }
  Graph out;
  out.adjacency_.resize(adjacency_.size());
  out.alive_ = mark;
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    if (!mark[u]) continue;
    ++out.vertex_count_;
    for (VertexId w : adjacency_[u]) {
      if (!mark[w]) continue;
      out.adjacency_[u].push_back(w);
      if (u < w) ++out.edge_count_;
    }
  }
  return out;
}

Graph Graph::compacted() const {
  std::vector<VertexId> index(adjacency_.size(), 0);
  VertexId next = 0;
  for (VertexId v = 0; v < adjacency_.size(); ++v)
    if (alive_[v]) index[v] = next++;
  Graph out(next);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    if (!alive_[u]) continue;
    auto& row = out.adjacency_[index[u]];
    row.reserve(adjacency_[u].size());
    for (VertexId w : adjacency_[u]) row.push_back(index[w]);
  }
  out.edge_count_ = edge_count_;
  return out;
}

Graph delete_vertex(const Graph& g, VertexId v) { return g.without_vertex(v); }

}  // namespace degen
