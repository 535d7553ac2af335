#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/embedding.hpp"
#include "degen/rational.hpp"

namespace degen {

// Rows of the type table, in table order. Vertices of degree <= 5 get `none`.
enum class TypeLabel : std::uint8_t {
  t10a, t10b, t9a, t9b, t9c, t9d, t8a, t8b, t8c, t8d, t8e, t7a, t7b, t7c, t7d, t6a, t6b, none
};

std::string_view label_name(TypeLabel label);

struct VertexType {
  TypeLabel label = TypeLabel::none;
  Rational max_charge;              // mc for every 5-neighbour, except...
  std::optional<VertexId> central;  // ...types 9c/8c: 1 for the central one, 9/10 otherwise
};

// mc(sender, receiver) for a 5-vertex `sender` adjacent to a vertex of `type`.
Rational max_charge(const VertexType& type, VertexId sender);

// First matching table row for every vertex of degree >= 6; indexed by id.
std::vector<VertexType> classify_types(const EmbeddedGraph& eg);
VertexType classify_vertex(const EmbeddedGraph& eg, VertexId v);

struct Element {
  enum class Kind : std::uint8_t { vertex, face };
  Kind kind;
  std::uint32_t id;

  static Element vertex(VertexId v) { return {Kind::vertex, v}; }
  static Element face(FaceId f) { return {Kind::face, f}; }
  friend bool operator==(const Element&, const Element&) = default;
};

struct Transfer {
  Element source;
  Element target;
  Rational amount;
  int step;
};

enum class Stage : std::uint8_t { initial, after_step1, after_step2, final_ };

struct ChargeState {
  std::vector<Rational> vertex_charge;  // by vertex id (0 for dead ids)
  std::vector<Rational> face_charge;    // by face id
  std::vector<Transfer> ledger;
  Stage stage = Stage::initial;
  // Step 3: the neighbour a 5-vertex completely discharged into, if any.
  std::vector<std::optional<VertexId>> completely_discharged_into;

  Rational total() const;
  Rational vertex_total() const;
};

struct DischargeOptions {
  // Require the three faces at the receiver spanned by the witness path to be
  // triangles. The relaxed variant only asks for the path edges.
  bool strict_faces = true;
  // Require the sender to be the only 5-neighbour of both middle path
  // vertices.
  bool single_five_middles = true;
  // Drop a window when one of its middle vertices also lies on another
  // qualifying window around the same receiver. Windows may then share only
  // their end vertices.
  bool exclusive_middles = true;
};

struct DistanceDischargeInstance {
  VertexId sender;
  VertexId receiver;
  std::array<VertexId, 4> witness_path;
};

// Every sender/receiver/witness combination, ordered by receiver, rotation
// position, then sender id.
std::vector<DistanceDischargeInstance> distance_instances(const EmbeddedGraph& eg,
                                                          const DischargeOptions& options = {});

ChargeState initial_charges(const EmbeddedGraph& eg);
ChargeState step1_face_discharge(ChargeState state, const EmbeddedGraph& eg);
ChargeState step2_distance_discharge(ChargeState state, const EmbeddedGraph& eg,
                                     const DischargeOptions& options = {});
ChargeState step3_final_discharge(ChargeState state, const EmbeddedGraph& eg,
                                  const std::vector<VertexType>& types);

struct DischargeRun {
  std::vector<VertexType> types;
  ChargeState initial;
  ChargeState final_state;
  // Totals after initial, step 1, step 2, step 3.
  std::array<Rational, 4> stage_totals;
};

DischargeRun run_discharging(const EmbeddedGraph& eg, const DischargeOptions& options = {});

// No face ends positive and vertices hold at least 12 per component, on
// connected inputs of minimum degree 5.
struct FaceLemmaReport {
  bool hypothesis_met = false;
  bool pass = false;
  std::vector<FaceId> positive_faces;
  Rational vertex_total;
};

FaceLemmaReport check_lemma_faces(const ChargeState& final_state, const EmbeddedGraph& eg);

// Distance-discharging inflow of a receiver of degree k with m 5-neighbours is
// at most floor((k-m-1)/3)/5 when m > 0 and floor(k/3)/5 when m = 0.
struct InflowViolation {
  VertexId receiver;
  std::size_t degree;
  std::size_t five_neighbours;
  Rational inflow;
  Rational bound;
};

Rational distance_inflow_bound(std::size_t degree, std::size_t five_neighbours);
std::vector<InflowViolation> check_distance_inflow(const ChargeState& state,
                                                   const EmbeddedGraph& eg);

// final = initial - outgoing + incoming for every element, from the ledger.
bool ledger_consistent(const ChargeState& initial, const ChargeState& final_state);

}  // namespace degen
