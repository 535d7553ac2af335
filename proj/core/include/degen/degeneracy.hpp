#pragma once

#include <cstdint>
#include <vector>

#include "degen/graph.hpp"

namespace degen {

// Collect threshold: a vertex may be collected when its current
// degree is at most 4.
inline constexpr int kCollectThreshold = 4;

struct CollectResult {
  std::vector<VertexId> order;  // collection order, legal when replayed
  Graph remainder;              // the (k+1)-core; empty if everything collected
};

// Greedy collection until stuck. Among collectible vertices the smallest id is
// always taken first, so the order is canonical; the collected set does not
// depend on the order anyway.
CollectResult collect_closure(const Graph& g, int k = kCollectThreshold);

bool is_k_degenerate(const Graph& g, int k);

// Collects in place, starting from `seeds` (plus anything they cascade into).
// When `g` had no collectible vertex outside `seeds`, this is exactly
// collect_closure restricted to the affected region. Returns the order.
std::vector<VertexId> collect_from(Graph& g, const std::vector<VertexId>& seeds,
                                   int k = kCollectThreshold);

// Evaluates "delete v, then collect" on a fixed graph without copying it.
// Scratch buffers are reused between calls, so one instance per thread.
class ClosureSimulator {
 public:
  explicit ClosureSimulator(const Graph& g, int k = kCollectThreshold);

  // Collection order after deleting `v`, assuming the graph itself has no
  // collectible vertex (minimum degree > k).
  const std::vector<VertexId>& after_deleting(VertexId v);

  // Number of edges with both ends in {v} ∪ last collected set.
  std::size_t removed_internal_edges() const { return internal_edges_; }

 private:
  const Graph& graph_;
  int k_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint8_t> removed_;
  std::vector<VertexId> touched_;
  std::vector<VertexId> order_;
  std::uint32_t epoch_ = 0;
  std::size_t internal_edges_ = 0;
};

}  // namespace degen
