#include "degen/discharging.hpp"

#include <algorithm>
#include <limits>

#include "degen/potential.hpp"

namespace degen {

namespace {

constexpr int kThreeConsecutive = -1;
constexpr int kUnbounded = std::numeric_limits<int>::max();

struct TypeRow {
  TypeLabel label;
  int degree;  // 10 stands for 10+
  std::size_t min_nontriangular;
  int max_fives;  // kThreeConsecutive: exactly three, consecutive
  Rational mc;
};

const std::array<TypeRow, 17>& type_table() {
  static const std::array<TypeRow, 17> rows{{
      {TypeLabel::t10a, 10, 0, 3, Rational(1)},
      {TypeLabel::t10b, 10, 0, kUnbounded, Rational(1, 2)},
      {TypeLabel::t9a, 9, 1, 3, Rational(1)},
      {TypeLabel::t9b, 9, 0, 2, Rational(1)},
      {TypeLabel::t9c, 9, 0, kThreeConsecutive, Rational(9, 10)},
      {TypeLabel::t9d, 9, 0, 9, Rational(1, 2)},
      {TypeLabel::t8a, 8, 0, 1, Rational(1)},
      {TypeLabel::t8b, 8, 1, 2, Rational(1)},
      {TypeLabel::t8c, 8, 2, kThreeConsecutive, Rational(9, 10)},
      {TypeLabel::t8d, 8, 0, 2, Rational(9, 10)},
      {TypeLabel::t8e, 8, 0, 8, Rational(1, 2)},
      {TypeLabel::t7a, 7, 0, 1, Rational(4, 5)},
      {TypeLabel::t7b, 7, 1, 2, Rational(13, 20)},
      {TypeLabel::t7c, 7, 0, 2, Rational(2, 5)},
      {TypeLabel::t7d, 7, 0, 7, Rational(1, 3)},
      {TypeLabel::t6a, 6, 1, 1, Rational(2, 5)},
      {TypeLabel::t6b, 6, 0, 6, Rational(0)},
  }};
  return rows;
}

std::size_t five_neighbour_count(const Graph& g, VertexId v) {
  std::size_t m = 0;
  for (VertexId u : g.neighbours(v))
    if (g.degree(u) == 5) ++m;
  return m;
}

}  // namespace

std::string_view label_name(TypeLabel label) {
  static constexpr std::array<std::string_view, 18> names{
      "10a", "10b", "9a", "9b", "9c", "9d", "8a", "8b", "8c",
      "8d",  "8e",  "7a", "7b", "7c", "7d", "6a", "6b", "-"};
  return names[static_cast<std::size_t>(label)];
}

Rational max_charge(const VertexType& type, VertexId sender) {
  if (type.central) return *type.central == sender ? Rational(1) : Rational(9, 10);
  return type.max_charge;
}

VertexType classify_vertex(const EmbeddedGraph& eg, VertexId v) {
  const Graph& g = eg.graph();
  const std::size_t d = g.degree(v);
  if (d < 6) return {};
  const std::size_t nontri = nontriangular_face_count(eg, v);
  const std::size_t fives = five_neighbour_count(g, v);
  std::optional<ConsecutiveFives> consecutive;
  for (const TypeRow& row : type_table()) {
    const bool degree_ok = row.degree == 10 ? d >= 10 : d == static_cast<std::size_t>(row.degree);
    if (!degree_ok || nontri < row.min_nontriangular) continue;
    if (row.max_fives == kThreeConsecutive) {
      if (!consecutive) consecutive = consecutive_five_neighbours(eg, v);
      if (!consecutive->holds) continue;
      return {row.label, row.mc, consecutive->central};
    }
    if (fives <= static_cast<std::size_t>(row.max_fives)) return {row.label, row.mc, std::nullopt};
  }
  return {};  // unreachable: the last row of each degree class accepts everything
}

std::vector<VertexType> classify_types(const EmbeddedGraph& eg) {
  std::vector<VertexType> types(eg.graph().id_bound());
  for (VertexId v : eg.graph().vertices()) types[v] = classify_vertex(eg, v);
  return types;
}

Rational ChargeState::vertex_total() const {
  Rational sum(0);
  for (const auto& c : vertex_charge) sum += c;
  return sum;
}

Rational ChargeState::total() const {
  Rational sum = vertex_total();
  for (const auto& c : face_charge) sum += c;
  return sum;
}

ChargeState initial_charges(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  ChargeState s;
  s.vertex_charge.assign(g.id_bound(), Rational(0));
  for (VertexId v : g.vertices())
    s.vertex_charge[v] = Rational(6 - static_cast<std::int64_t>(g.degree(v)));
  s.face_charge.reserve(eg.faces().size());
  for (const Face& f : eg.faces())
    s.face_charge.emplace_back(2 * (3 - static_cast<std::int64_t>(f.length())));
  s.completely_discharged_into.assign(g.id_bound(), std::nullopt);
  s.stage = Stage::initial;
  return s;
}

namespace {

void move_charge(ChargeState& s, Element from, Element to, const Rational& amount, int step) {
  auto slot = [&](Element e) -> Rational& {
    return e.kind == Element::Kind::vertex ? s.vertex_charge[e.id] : s.face_charge[e.id];
  };
  slot(from) -= amount;
  slot(to) += amount;
  s.ledger.push_back({from, to, amount, step});
}

}  // namespace

ChargeState step1_face_discharge(ChargeState s, const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  for (VertexId v : g.vertices()) {
    for (const auto& inc : eg.face_incidence(v)) {
      if (eg.face(inc.face).length() < 4) continue;
      Rational amount;
      if (g.degree(v) == 6) amount = Rational(2, 5);
      else if (g.degree(inc.pred) == 6 && g.degree(inc.succ) == 6) amount = Rational(3, 5);
      else amount = Rational(1, 2);
      move_charge(s, Element::vertex(v), Element::face(inc.face), amount, 1);
    }
  }
  s.stage = Stage::after_step1;
  return s;
}

std::vector<DistanceDischargeInstance> distance_instances(const EmbeddedGraph& eg,
                                                          const DischargeOptions& options) {
  const Graph& g = eg.graph();
  std::vector<DistanceDischargeInstance> out;
  std::vector<std::array<VertexId, 4>> windows;
  std::vector<std::vector<VertexId>> senders;
  for (VertexId w : g.vertices()) {
    const std::size_t d = g.degree(w);
    if (d < 7) continue;
    const auto rot = eg.rotation(w);
    windows.clear();
    senders.clear();
    for (std::size_t i = 0; i < d; ++i) {
      const std::array<VertexId, 4> p{rot[i], rot[(i + 1) % d], rot[(i + 2) % d],
                                       rot[(i + 3) % d]};
      if (g.degree(p[0]) < 6 || g.degree(p[1]) != 6 || g.degree(p[2]) != 6 || g.degree(p[3]) < 6)
        continue;
      if (!g.has_edge(p[0], p[1]) || !g.has_edge(p[1], p[2]) || !g.has_edge(p[2], p[3])) continue;
      if (options.strict_faces) {
        bool triangles = true;
        for (std::size_t j = 0; j < 3; ++j)
          triangles = triangles && eg.face(eg.angle_face(w, (i + j) % d)).length() == 3;
        if (!triangles) continue;
      }
      if (options.single_five_middles &&
          (five_neighbour_count(g, p[1]) != 1 || five_neighbour_count(g, p[2]) != 1))
        continue;
      const auto a = g.neighbours(p[1]);
      const auto b = g.neighbours(p[2]);
      std::vector<VertexId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      std::vector<VertexId> from;
      for (VertexId s : common)
        if (s != w && s != p[0] && s != p[3] && g.degree(s) == 5) from.push_back(s);
      if (from.empty()) continue;
      windows.push_back(p);
      senders.push_back(std::move(from));
    }
    for (std::size_t i = 0; i < windows.size(); ++i) {
      const auto& p = windows[i];
      bool shared = false;
      if (options.exclusive_middles)
        for (std::size_t j = 0; j < windows.size() && !shared; ++j)
          if (j != i)
            for (VertexId x : windows[j]) shared = shared || x == p[1] || x == p[2];
      if (shared) continue;
      for (VertexId s : senders[i]) out.push_back({s, w, p});
    }
  }
  return out;
}

ChargeState step2_distance_discharge(ChargeState s, const EmbeddedGraph& eg,
                                     const DischargeOptions& options) {
  for (const auto& inst : distance_instances(eg, options))
    move_charge(s, Element::vertex(inst.sender), Element::vertex(inst.receiver), Rational(1, 5), 2);
  s.stage = Stage::after_step2;
  return s;
}

ChargeState step3_final_discharge(ChargeState s, const EmbeddedGraph& eg,
                                  const std::vector<VertexType>& types) {
  const Graph& g = eg.graph();
  std::vector<std::pair<Rational, VertexId>> targets;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 5) continue;
    targets.clear();
    for (VertexId w : g.neighbours(v))
      if (g.degree(w) >= 6) targets.emplace_back(max_charge(types[w], v), w);
    std::stable_sort(targets.begin(), targets.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    for (const auto& [mc, w] : targets) {
      const Rational current = s.vertex_charge[v];
      if (!s.completely_discharged_into[v] && mc >= current) s.completely_discharged_into[v] = w;
      const Rational amount = std::min(mc, std::max(Rational(0), current));
      if (amount > 0) move_charge(s, Element::vertex(v), Element::vertex(w), amount, 3);
    }
  }
  s.stage = Stage::final_;
  return s;
}

DischargeRun run_discharging(const EmbeddedGraph& eg, const DischargeOptions& options) {
  DischargeRun run;
  run.types = classify_types(eg);
  run.initial = initial_charges(eg);
  run.stage_totals[0] = run.initial.total();
  ChargeState s = step1_face_discharge(run.initial, eg);
  run.stage_totals[1] = s.total();
  s = step2_distance_discharge(std::move(s), eg, options);
  run.stage_totals[2] = s.total();
  s = step3_final_discharge(std::move(s), eg, run.types);
  run.stage_totals[3] = s.total();
  run.final_state = std::move(s);
  return run;
}

FaceLemmaReport check_lemma_faces(const ChargeState& final_state, const EmbeddedGraph& eg) {
  FaceLemmaReport report;
  const Graph& g = eg.graph();
  report.vertex_total = final_state.vertex_total();
  bool min_degree_five = !g.empty();
  for (VertexId v : g.vertices()) min_degree_five = min_degree_five && g.degree(v) >= 5;
  report.hypothesis_met = min_degree_five && connected_components(g).size() == 1;
  for (FaceId f = 0; f < final_state.face_charge.size(); ++f)
    if (final_state.face_charge[f] > 0) report.positive_faces.push_back(f);
  report.pass = report.hypothesis_met && report.positive_faces.empty() &&
                report.vertex_total >= Rational(12);
  return report;
}

Rational distance_inflow_bound(std::size_t degree, std::size_t fives) {
  const auto k = static_cast<std::int64_t>(degree);
  const auto m = static_cast<std::int64_t>(fives);
  if (m == 0) return Rational(k / 3, 5);
  // With every neighbour a 5-vertex no witness path fits; the count of paths
  // is never negative.
  const std::int64_t paths = k - m - 1 >= 0 ? (k - m - 1) / 3 : 0;
  return Rational(paths, 5);
}

std::vector<InflowViolation> check_distance_inflow(const ChargeState& state,
                                                   const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  std::vector<Rational> inflow(g.id_bound(), Rational(0));
  for (const auto& t : state.ledger)
    if (t.step == 2) inflow[t.target.id] += t.amount;
  std::vector<InflowViolation> out;
  for (VertexId w : g.vertices()) {
    if (inflow[w] == Rational(0)) continue;
    const std::size_t k = g.degree(w);
    const std::size_t m = five_neighbour_count(g, w);
    const Rational bound = k >= 7 ? distance_inflow_bound(k, m) : Rational(0);
    if (inflow[w] > bound) out.push_back({w, k, m, inflow[w], bound});
  }
  return out;
}

bool ledger_consistent(const ChargeState& initial, const ChargeState& final_state) {
  std::vector<Rational> v = initial.vertex_charge;
  std::vector<Rational> f = initial.face_charge;
  for (const auto& t : final_state.ledger) {
    if (t.amount <= 0 || t.step < 1 || t.step > 3) return false;
    (t.source.kind == Element::Kind::vertex ? v[t.source.id] : f[t.source.id]) -= t.amount;
    (t.target.kind == Element::Kind::vertex ? v[t.target.id] : f[t.target.id]) += t.amount;
  }
  return v == final_state.vertex_charge && f == final_state.face_charge;
}

}  // namespace degen
