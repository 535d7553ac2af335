#include "degen/degeneracy.hpp"

#include <functional>
#include <queue>

namespace degen {

namespace {

using MinHeap = std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;

}  // namespace

std::vector<VertexId> collect_from(Graph& g, const std::vector<VertexId>& seeds, int k) {
  std::vector<std::uint8_t> queued(g.id_bound(), 0);
  MinHeap heap;
  for (VertexId v : seeds) {
    if (g.has_vertex(v) && !queued[v] && g.degree(v) <= static_cast<std::size_t>(k)) {
      queued[v] = 1;
      heap.push(v);
    }
  }
  std::vector<VertexId> order;
  std::vector<VertexId> nbrs;
  while (!heap.empty()) {
    const VertexId v = heap.top();
    heap.pop();
    nbrs.assign(g.neighbours(v).begin(), g.neighbours(v).end());
    g.remove_vertex(v);
    order.push_back(v);
    for (VertexId u : nbrs) {
      if (!queued[u] && g.degree(u) <= static_cast<std::size_t>(k)) {
        queued[u] = 1;
        heap.push(u);
      }
    }
  }
  return order;
}

CollectResult collect_closure(const Graph& g, int k) {
  CollectResult result{{}, g};
  result.order = collect_from(result.remainder, g.vertices(), k);
  return result;
}

bool is_k_degenerate(const Graph& g, int k) { return collect_closure(g, k).remainder.empty(); }

ClosureSimulator::ClosureSimulator(const Graph& g, int k)
    : graph_(g),
      k_(k),
      degree_(g.id_bound(), 0),
      stamp_(g.id_bound(), 0),
      removed_(g.id_bound(), 0) {}

const std::vector<VertexId>& ClosureSimulator::after_deleting(VertexId v) {
  ++epoch_;
  order_.clear();
  internal_edges_ = 0;
  auto touch = [&](VertexId x) {
    if (stamp_[x] != epoch_) {
      stamp_[x] = epoch_;
      degree_[x] = static_cast<std::uint32_t>(graph_.degree(x));
      removed_[x] = 0;
    }
  };
  MinHeap heap;
  auto remove = [&](VertexId x) {
    for (VertexId y : graph_.neighbours(x)) {
      touch(y);
      if (removed_[y] == 2) {
        ++internal_edges_;
        continue;
      }
      if (--degree_[y] <= static_cast<std::uint32_t>(k_) && removed_[y] == 0) {
        removed_[y] = 1;
        heap.push(y);
      }
    }
  };
  touch(v);
  removed_[v] = 2;
  remove(v);
  while (!heap.empty()) {
    const VertexId x = heap.top();
    heap.pop();
    removed_[x] = 2;
    order_.push_back(x);
    remove(x);
  }
  return order_;
}

}  // namespace degen
