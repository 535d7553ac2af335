#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degen/graph.hpp"
#include "degen/rational.hpp"

namespace degen {

inline constexpr std::size_t kOracleMaxOrder = 64;

struct OracleResult {
  std::size_t optimum = 0;
  std::vector<VertexId> witness;
  std::uint64_t explored = 0;
  std::chrono::nanoseconds time{0};
  bool optimal = false;  // false: budget ran out and `optimum` is only an upper bound
};

// Smallest vertex set whose removal leaves a k-degenerate graph, by iterative
// deepening over the (k+1)-core. At most kOracleMaxOrder vertices
// (std::invalid_argument otherwise).
OracleResult min_deletion_exact(const Graph& g, int k = 4,
                                std::optional<std::uint64_t> node_budget = std::nullopt);

struct Theorem2Summary {
  std::size_t graphs = 0;
  std::size_t collect_all = 0;
  std::size_t witness = 0;
  std::size_t skipped_nonplanar = 0;
  std::size_t skipped_small = 0;
};

// Folds one stream element into the summary. Throws CounterexampleFound.
void tally_theorem2(Theorem2Summary& summary, const Graph& g, bool planar);

struct SandwichReport {
  bool pass = false;
  OracleResult oracle;
  std::size_t extracted = 0;
  Rational gamma;
  std::string violation;
};

// optimum <= |S| <= floor(gamma) and optimum <= gamma.
SandwichReport compare_extract_to_oracle(const Graph& g,
                                         std::optional<std::uint64_t> node_budget = std::nullopt);

}  // namespace degen
