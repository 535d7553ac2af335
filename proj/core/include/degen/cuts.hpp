#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "degen/discharging.hpp"
#include "degen/embedding.hpp"
#include "degen/graph.hpp"
#include "degen/rational.hpp"

namespace degen {

struct BadCut {
  enum class Kind : std::uint8_t { triangle, chordless_quad };
  Kind kind;
  std::vector<VertexId> vertices;  // cycle order

  friend bool operator==(const BadCut&, const BadCut&) = default;
};

// True when removing `cut` from the component holding it leaves that
// component in two or more pieces.
bool is_cut_set(const Graph& g, const std::vector<VertexId>& cut);

// Every separating triangle and every separating induced 4-cycle, once each.
// Triangles are listed as (a < b < c); quads as (a, b, c, d) where {a, c} is
// the diagonal holding the smallest vertex and b < d.
std::vector<BadCut> find_bad_cuts(const Graph& g);

// The bad cuts that contain v.
std::vector<BadCut> bad_cuts_through(const Graph& g, VertexId v);

struct GoodSubgraph {
  std::optional<BadCut> cut;  // absent iff H = G
  std::vector<VertexId> h_vertices;
  std::vector<VertexId> kernel;  // h_vertices minus the cut
  std::vector<VertexId> ordinary;
  std::vector<VertexId> extraordinary;  // only ever filled for triangle cuts
  // Set when the innermost-cut selection left a kernel vertex on a bad cut
  // and the smallest clean side of some bad cut was taken instead.
  bool from_fallback = false;
  // False when no side of any bad cut avoids all bad cuts.
  bool kernel_avoids_cuts = true;
};

// Innermost triangle cut, then innermost quad cut meeting its interior, with
// "interior" read as the chosen component of G - V(C). If that kernel touches
// a bad cut, falls back as described on GoodSubgraph.
GoodSubgraph good_subgraph(const Graph& g);

// Same, reusing an already computed cut list of g.
GoodSubgraph good_subgraph(const Graph& g, const std::vector<BadCut>& cuts);

// Faces whose boundary lies within H and touches the kernel.
std::vector<FaceId> kernel_faces(const GoodSubgraph& gs, const EmbeddedGraph& eg);

// Final charge on kernel vertices plus kernel faces.
Rational kernel_charge(const GoodSubgraph& gs, const ChargeState& final_state,
                       const EmbeddedGraph& eg);

struct DichotomyReport {
  bool pass = false;
  Rational ordinary_total;
  std::optional<VertexId> rich_extraordinary;  // an extraordinary vertex with charge >= 2
};

// Some extraordinary vertex ends with charge >= 2, or the ordinary vertices
// end with positive total charge.
DichotomyReport check_dichotomy(const GoodSubgraph& gs, const ChargeState& final_state);

}  // namespace degen
