#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degen/embedding.hpp"
#include "degen/graph.hpp"
#include "degen/rational.hpp"

namespace degen {

struct ReductionStep {
  VertexId deleted = 0;
  std::vector<VertexId> collected;
  Rational gamma_before;
  Rational gamma_after;

  Rational gain() const { return gamma_before - gamma_after; }
};

// Bookkeeping for one reduction. All deltas are before minus after.
struct ReductionAudit {
  std::array<std::int64_t, 6> b{};  // removed vertices of degree 5, 6, ..., 9, 10+
  std::int64_t low_degree = 0;      // removed vertices of degree < 5
  std::int64_t low_degree_term = 0;  // sum of (2 deg - 5) over those
  std::int64_t sigma_e = 0;         // edges inside the removed set
  std::int64_t delta_vertices = 0;
  std::int64_t delta_phi = 0;
  std::int64_t delta_phi_bound = 0;
  std::int64_t delta_tc = 0;
  Rational delta_gamma;
  std::size_t at_distance_two = 0;
  std::size_t beyond_distance_two = 0;
  bool tc_rule_applies = false;
  bool phi_bound_holds = false;
  bool tc_rule_holds = true;
};

// Replays `step` on `before` (throws std::invalid_argument if illegal) and
// measures it. The tree-component rule is only asserted when at most one
// removed vertex sits at distance 2, none further, the input has minimum
// degree 5 and the deleted vertex lies on no bad cut.
ReductionAudit audit_reduction(const Graph& before, const ReductionStep& step);

struct Theorem2Outcome {
  enum class Kind : std::uint8_t { collect_all, witness };
  Kind kind = Kind::collect_all;
  std::optional<VertexId> deleted;
  std::vector<VertexId> order;  // whole closure, or its first six after the deletion
};

// Throws CounterexampleFound when |V| >= 7 and neither outcome exists, and
// std::domain_error for smaller inputs in the same situation.
Theorem2Outcome theorem2_witness(const Graph& g);

// Best "delete one vertex, collect the closure" move with at least six
// collected and a potential drop of at least 1. Candidates come first from
// the radius-2 balls around `hotspots`, then from every vertex. `g` must have
// minimum degree at least 5.
struct ReductionSearch {
  std::optional<ReductionStep> step;
  bool from_fallback = false;
  std::size_t candidates_tried = 0;
};

ReductionSearch find_reduction(const Graph& g, const std::vector<VertexId>& hotspots);

struct CertificateEvent {
  enum class Op : std::uint8_t { collect, del };
  Op op;
  VertexId v;

  friend bool operator==(const CertificateEvent&, const CertificateEvent&) = default;
};

struct ExtractionCertificate {
  Rational original_gamma;
  std::vector<VertexId> deletions;
  std::vector<CertificateEvent> events;

  friend bool operator==(const ExtractionCertificate&, const ExtractionCertificate&) = default;
};

struct ExtractionAnomaly {
  std::size_t round;
  VertexId deleted;
  std::string what;
};

struct ExtractionResult {
  ExtractionCertificate certificate;
  std::vector<ReductionStep> steps;
  std::vector<ExtractionAnomaly> anomalies;
  std::size_t collected = 0;
};

struct ExtractOptions {
  // Recompute discharging and the good subgraph every this many rounds per
  // component; in between, the previous hotspots (still alive) are reused.
  std::size_t hotspot_refresh = 1;
};

// Throws NotPlanarError, or CounterexampleFound if a minimum-degree-5
// component admits no reduction.
ExtractionResult extract(const Graph& g, const ExtractOptions& options = {});

// Ordinary vertices with positive final charge, and extraordinary vertices
// holding at least 2.
std::vector<VertexId> hotspots(const EmbeddedGraph& eg);

}  // namespace degen
