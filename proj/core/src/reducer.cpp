#include "degen/reducer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "degen/cuts.hpp"
#include "degen/degeneracy.hpp"
#include "degen/discharging.hpp"
#include "degen/errors.hpp"
#include "degen/graph6.hpp"
#include "degen/potential.hpp"

namespace degen {

namespace {

constexpr std::size_t kMinCollected = 6;

std::int64_t degree_term(std::size_t d) { return 2 * static_cast<std::int64_t>(d) - 5; }

struct Candidate {
  VertexId v;
  std::vector<VertexId> collected;
  Rational gain;
};

// More collected first, then the larger potential drop, then the smaller id.
bool better(std::size_t count, const Rational& gain, VertexId v, const Candidate& than) {
  if (count != than.collected.size()) return count > than.collected.size();
  if (gain != than.gain) return gain > than.gain;
  return v < than.v;
}

// Evaluates each candidate exactly. The input has minimum degree >= 5 and so
// no tree components, and neither has what remains after a full closure.
std::optional<Candidate> best_of(const Graph& g, ClosureSimulator& sim,
                                 const std::vector<VertexId>& candidates) {
  std::optional<Candidate> best;
  for (VertexId v : candidates) {
    const auto& order = sim.after_deleting(v);
    if (order.size() < kMinCollected) continue;
    std::int64_t dphi = degree_term(g.degree(v));
    for (VertexId x : order) dphi += degree_term(g.degree(x));
    dphi -= 2 * static_cast<std::int64_t>(sim.removed_internal_edges());
    const auto removed = static_cast<std::int64_t>(order.size() + 1);
    const Rational gain = Rational(removed, 12) + Rational(dphi, 36);
    if (gain < 1 || (best && !better(order.size(), gain, v, *best))) continue;
    best = Candidate{v, order, gain};
  }
  return best;
}

std::vector<VertexId> ball2(const Graph& g, const std::vector<VertexId>& centres) {
  std::vector<std::uint8_t> mark(g.id_bound(), 0);
  std::vector<VertexId> out;
  auto add = [&](VertexId x) {
    if (!mark[x]) {
      mark[x] = 1;
      out.push_back(x);
    }
  };
  for (VertexId h : centres) {
    if (!g.has_vertex(h)) continue;
    add(h);
    for (VertexId a : g.neighbours(h)) {
      add(a);
      for (VertexId b : g.neighbours(a)) add(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReductionStep to_step(const Graph& g, const Candidate& c) {
  const Rational before = gamma(g);
  return {c.v, c.collected, before, before - c.gain};
}

std::string ledger_dump(const ChargeState& s) {
  std::ostringstream out;
  for (const auto& t : s.ledger) {
    auto name = [](Element e) {
      return (e.kind == Element::Kind::vertex ? "v" : "f") + std::to_string(e.id);
    };
    out << "step" << t.step << ' ' << name(t.source) << " -> " << name(t.target) << ' '
        << to_string(t.amount) << '\n';
  }
  return out.str();
}

}  // namespace

ReductionSearch find_reduction(const Graph& g, const std::vector<VertexId>& hotspots) {
  ReductionSearch result;
  ClosureSimulator sim(g);
  const auto local = ball2(g, hotspots);
  result.candidates_tried = local.size();
  if (auto best = best_of(g, sim, local)) {
    result.step = to_step(g, *best);
    return result;
  }
  std::vector<std::uint8_t> tried(g.id_bound(), 0);
  for (VertexId v : local) tried[v] = 1;
  std::vector<VertexId> rest;
  for (VertexId v : g.vertices())
    if (!tried[v]) rest.push_back(v);
  result.candidates_tried += rest.size();
  if (auto best = best_of(g, sim, rest)) {
    result.step = to_step(g, *best);
    result.from_fallback = true;
  }
  return result;
}

std::vector<VertexId> hotspots(const EmbeddedGraph& eg) {
  const DischargeRun run = run_discharging(eg);
  const GoodSubgraph gs = good_subgraph(eg.graph());
  const auto& charge = run.final_state.vertex_charge;
  std::vector<VertexId> out;
  for (VertexId v : gs.ordinary)
    if (charge[v] > 0) out.push_back(v);
  for (VertexId v : gs.extraordinary)
    if (charge[v] >= 2) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

ExtractionResult extract(const Graph& g, const ExtractOptions& options) {
  const RotationSystem rotation = embed(g);
  ExtractionResult result;
  auto& cert = result.certificate;
  cert.original_gamma = gamma(g);
  Graph current = g;
  auto log_collects = [&](const std::vector<VertexId>& order) {
    for (VertexId v : order) cert.events.push_back({CertificateEvent::Op::collect, v});
    result.collected += order.size();
  };
  log_collects(collect_from(current, current.vertices()));

  std::vector<VertexId> cached;
  std::size_t since_refresh = 0;
  for (std::size_t round = 0; !current.empty(); ++round) {
    const auto comps = connected_components(current);
    const Graph sub = current.induced(comps.front());

    std::optional<ReductionSearch> search;
    if (options.hotspot_refresh > 1 && since_refresh < options.hotspot_refresh) {
      std::vector<VertexId> alive;
      for (VertexId h : cached)
        if (sub.has_vertex(h)) alive.push_back(h);
      if (!alive.empty()) {
        search = find_reduction(sub, alive);
        if (!search->step || search->from_fallback) search.reset();
      }
    }
    if (!search) {
      const EmbeddedGraph eg(sub, restrict_rotation(rotation, sub));
      cached = hotspots(eg);
      since_refresh = 0;
      search = find_reduction(sub, cached);
      if (!search->step) {
        const DischargeRun run = run_discharging(eg);
        throw CounterexampleFound("no reduction on a minimum-degree-5 component of order " +
                                      std::to_string(sub.vertex_count()),
                                  encode_graph6(sub), ledger_dump(run.final_state));
      }
      if (search->from_fallback)
        result.anomalies.push_back(
            {round, search->step->deleted, "reduction found only outside the hotspot balls"});
    }
    ++since_refresh;

    const ReductionStep& step = *search->step;
    current.remove_vertex(step.deleted);
    cert.deletions.push_back(step.deleted);
    cert.events.push_back({CertificateEvent::Op::del, step.deleted});
    for (VertexId v : step.collected) current.remove_vertex(v);
    log_collects(step.collected);
    result.steps.push_back(step);
  }
  return result;
}

Theorem2Outcome theorem2_witness(const Graph& g) {
  const CollectResult all = collect_closure(g);
  if (all.remainder.empty()) return {Theorem2Outcome::Kind::collect_all, std::nullopt, all.order};
  for (VertexId w : g.vertices()) {
    CollectResult after = collect_closure(g.without_vertex(w));
    if (after.order.size() >= kMinCollected) {
      after.order.resize(kMinCollected);
      return {Theorem2Outcome::Kind::witness, w, std::move(after.order)};
    }
  }
  if (g.vertex_count() >= 7)
    throw CounterexampleFound("no vertex deletion frees six collectable vertices",
                              encode_graph6(g), {});
  throw std::domain_error("fewer than 7 vertices and not 4-degenerate");
}

ReductionAudit audit_reduction(const Graph& before, const ReductionStep& step) {
  Graph after = before;
  after.remove_vertex(step.deleted);
  for (VertexId v : step.collected) {
    if (!after.has_vertex(v) || after.degree(v) > static_cast<std::size_t>(kCollectThreshold))
      throw std::invalid_argument("illegal collect of vertex " + std::to_string(v));
    after.remove_vertex(v);
  }

  ReductionAudit a;
  std::vector<VertexId> removed{step.deleted};
  removed.insert(removed.end(), step.collected.begin(), step.collected.end());
  std::vector<std::uint8_t> in_removed(before.id_bound(), 0);
  for (VertexId v : removed) in_removed[v] = 1;

  constexpr std::array<std::int64_t, 6> coefficient{5, 7, 9, 11, 13, 15};
  for (VertexId v : removed) {
    const std::size_t d = before.degree(v);
    if (d < 5) {
      ++a.low_degree;
      a.low_degree_term += degree_term(d);
    } else {
      ++a.b[std::min<std::size_t>(d, 10) - 5];
    }
    for (VertexId u : before.neighbours(v))
      if (u > v && in_removed[u]) ++a.sigma_e;
  }
  a.delta_phi_bound = a.low_degree_term - 2 * a.sigma_e;
  for (std::size_t i = 0; i < 6; ++i) a.delta_phi_bound += coefficient[i] * a.b[i];

  const GammaBreakdown gb = gamma_breakdown(before);
  const GammaBreakdown ga = gamma_breakdown(after);
  a.delta_vertices = gb.vertex_count - ga.vertex_count;
  a.delta_phi = gb.phi - ga.phi;
  a.delta_tc = gb.tree_components - ga.tree_components;
  a.delta_gamma = gb.gamma - ga.gamma;
  a.phi_bound_holds = a.delta_phi >= a.delta_phi_bound;

  std::vector<int> dist(before.id_bound(), -1);
  std::vector<VertexId> frontier{step.deleted};
  dist[step.deleted] = 0;
  for (int depth = 1; depth <= 2; ++depth) {
    std::vector<VertexId> next;
    for (VertexId x : frontier)
      for (VertexId y : before.neighbours(x))
        if (dist[y] < 0) {
          dist[y] = depth;
          next.push_back(y);
        }
    frontier = std::move(next);
  }
  for (VertexId v : step.collected) {
    if (dist[v] == 2) ++a.at_distance_two;
    if (dist[v] < 0) ++a.beyond_distance_two;
  }

  bool min_degree_five = true;
  for (VertexId v : before.vertices()) min_degree_five = min_degree_five && before.degree(v) >= 5;
  a.tc_rule_applies = a.at_distance_two <= 1 && a.beyond_distance_two == 0 && min_degree_five &&
                      bad_cuts_through(before, step.deleted).empty();
  a.tc_rule_holds = !a.tc_rule_applies || a.delta_tc == 0;
  return a;
}

}  // namespace degen
