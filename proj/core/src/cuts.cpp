#include "degen/cuts.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace degen {

namespace {

// Grows one region per outside neighbour of the cut, always extending the
// smallest region, and merges regions as they meet. A region that runs out of
// frontier while another survives is a separate component.
class SplitProbe {
 public:
  explicit SplitProbe(const Graph& g)
      : g_(g), blocked_(g.id_bound(), 0), seen_(g.id_bound(), 0), owner_(g.id_bound(), 0) {}

  bool splits(const std::vector<VertexId>& cut) {
    ++epoch_;
    for (VertexId c : cut) blocked_[c] = epoch_;
    parent_.clear();
    queue_.clear();
    head_.clear();
    size_.clear();
    roots_.clear();
    for (VertexId c : cut) {
      for (VertexId y : g_.neighbours(c)) {
        if (blocked_[y] == epoch_ || seen_[y] == epoch_) continue;
        const auto id = static_cast<std::uint32_t>(parent_.size());
        seen_[y] = epoch_;
        owner_[y] = id;
        parent_.push_back(id);
        queue_.push_back({y});
        head_.push_back(0);
        size_.push_back(1);
        roots_.push_back(id);
      }
    }
    if (roots_.size() < 2) return false;
    while (true) {
      auto smallest = std::min_element(roots_.begin(), roots_.end(),
                                       [&](auto a, auto b) { return size_[a] < size_[b]; });
      std::uint32_t r = *smallest;
      if (head_[r] == queue_[r].size()) return true;
      const VertexId x = queue_[r][head_[r]++];
      for (VertexId y : g_.neighbours(x)) {
        if (blocked_[y] == epoch_) continue;
        r = find(r);
        if (seen_[y] == epoch_) {
          const std::uint32_t other = find(owner_[y]);
          if (other == r) continue;
          unite(r, other);
          if (roots_.size() == 1) return false;
        } else {
          seen_[y] = epoch_;
          owner_[y] = r;
          queue_[r].push_back(y);
          ++size_[r];
        }
      }
    }
  }

 private:
  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    if (queue_[a].size() - head_[a] < queue_[b].size() - head_[b]) std::swap(a, b);
    parent_[b] = a;
    queue_[a].insert(queue_[a].end(), queue_[b].begin() + static_cast<std::ptrdiff_t>(head_[b]),
                     queue_[b].end());
    queue_[b].clear();
    head_[b] = 0;
    size_[a] += size_[b];
    roots_.erase(std::find(roots_.begin(), roots_.end(), b));
  }

  const Graph& g_;
  std::vector<std::uint32_t> blocked_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::uint32_t> owner_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> parent_;
  std::vector<std::vector<VertexId>> queue_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> size_;
  std::vector<std::uint32_t> roots_;
};

std::vector<VertexId> common_neighbours(const Graph& g, VertexId a, VertexId b) {
  std::vector<VertexId> out;
  const auto na = g.neighbours(a);
  const auto nb = g.neighbours(b);
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

BadCut canonical_triangle(VertexId a, VertexId b, VertexId c) {
  std::vector<VertexId> t{a, b, c};
  std::sort(t.begin(), t.end());
  return {BadCut::Kind::triangle, std::move(t)};
}

BadCut canonical_quad(VertexId p0, VertexId p1, VertexId p2, VertexId p3) {
  std::pair<VertexId, VertexId> d1 = std::minmax(p0, p2);
  std::pair<VertexId, VertexId> d2 = std::minmax(p1, p3);
  if (d2.first < d1.first) std::swap(d1, d2);
  return {BadCut::Kind::chordless_quad, {d1.first, d2.first, d1.second, d2.second}};
}

// Components of g minus `removed`, each sorted.
std::vector<std::vector<VertexId>> components_without(const Graph& g,
                                                      const std::vector<VertexId>& removed) {
  std::vector<std::uint8_t> seen(g.id_bound(), 0);
  for (VertexId r : removed) seen[r] = 1;
  std::vector<std::vector<VertexId>> out;
  for (VertexId s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId y : g.neighbours(comp[i]))
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

bool is_cut_set(const Graph& g, const std::vector<VertexId>& cut) {
  SplitProbe probe(g);
  return probe.splits(cut);
}

std::vector<BadCut> find_bad_cuts(const Graph& g) {
  SplitProbe probe(g);
  std::vector<BadCut> out;
  for (VertexId a : g.vertices()) {
    for (VertexId b : g.neighbours(a)) {
      if (b <= a) continue;
      for (VertexId c : common_neighbours(g, a, b)) {
        if (c <= b) continue;
        if (probe.splits({a, b, c})) out.push_back({BadCut::Kind::triangle, {a, b, c}});
      }
    }
  }
  std::vector<std::vector<VertexId>> commons(g.id_bound());
  std::vector<VertexId> touched;
  for (VertexId a : g.vertices()) {
    for (VertexId x : g.neighbours(a)) {
      for (VertexId c : g.neighbours(x)) {
        if (c <= a || g.has_edge(a, c)) continue;
        if (commons[c].empty()) touched.push_back(c);
        commons[c].push_back(x);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (VertexId c : touched) {
      auto& mids = commons[c];
      std::sort(mids.begin(), mids.end());
      for (std::size_t i = 0; i < mids.size(); ++i) {
        if (mids[i] < a) continue;
        for (std::size_t j = i + 1; j < mids.size(); ++j) {
          if (g.has_edge(mids[i], mids[j])) continue;
          std::vector<VertexId> quad{a, mids[i], c, mids[j]};
          if (probe.splits(quad)) out.push_back({BadCut::Kind::chordless_quad, std::move(quad)});
        }
      }
      mids.clear();
    }
    touched.clear();
  }
  return out;
}

std::vector<BadCut> bad_cuts_through(const Graph& g, VertexId v) {
  SplitProbe probe(g);
  std::vector<BadCut> found;
  const auto nv = g.neighbours(v);
  for (VertexId u : nv)
    for (VertexId w : common_neighbours(g, v, u))
      if (u < w && probe.splits({v, u, w})) found.push_back(canonical_triangle(v, u, w));
  // v on the quad: its two cycle neighbours are non-adjacent neighbours of v,
  // closed through a fourth vertex not adjacent to v.
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      const VertexId a = nv[i];
      const VertexId c = nv[j];
      if (g.has_edge(a, c)) continue;
      for (VertexId d : common_neighbours(g, a, c)) {
        if (d == v || g.has_edge(v, d)) continue;
        if (probe.splits({v, a, d, c})) found.push_back(canonical_quad(v, a, d, c));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const BadCut& x, const BadCut& y) {
    return std::tie(x.kind, x.vertices) < std::tie(y.kind, y.vertices);
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

GoodSubgraph good_subgraph(const Graph& g) { return good_subgraph(g, find_bad_cuts(g)); }

GoodSubgraph good_subgraph(const Graph& g, const std::vector<BadCut>& cuts) {
  GoodSubgraph gs;
  const BadCut* cut_a = nullptr;
  std::vector<VertexId> kernel_a;
  for (const BadCut& c : cuts) {
    if (c.kind != BadCut::Kind::triangle) continue;
    for (auto& comp : components_without(g, c.vertices)) {
      if (cut_a == nullptr || comp.size() < kernel_a.size()) {
        cut_a = &c;
        kernel_a = std::move(comp);
      }
    }
  }
  std::vector<std::uint8_t> in_kernel_a(g.id_bound(), cut_a == nullptr ? 1 : 0);
  for (VertexId v : kernel_a) in_kernel_a[v] = 1;

  const BadCut* chosen = cut_a;
  std::vector<VertexId> kernel = kernel_a;
  const BadCut* quad = nullptr;
  for (const BadCut& c : cuts) {
    if (c.kind != BadCut::Kind::chordless_quad) continue;
    if (std::none_of(c.vertices.begin(), c.vertices.end(),
                     [&](VertexId v) { return in_kernel_a[v] != 0; }))
      continue;
    for (auto& comp : components_without(g, c.vertices)) {
      if (cut_a != nullptr &&
          std::any_of(cut_a->vertices.begin(), cut_a->vertices.end(),
                      [&](VertexId v) { return std::binary_search(comp.begin(), comp.end(), v); }))
        continue;
      if (quad == nullptr || comp.size() < kernel.size()) {
        quad = &c;
        kernel = std::move(comp);
      }
    }
  }
  if (quad != nullptr) chosen = quad;

  if (chosen == nullptr) {
    gs.h_vertices = g.vertices();
    gs.kernel = gs.h_vertices;
    gs.ordinary = gs.h_vertices;
    return gs;
  }
  std::vector<std::uint8_t> on_cut(g.id_bound(), 0);
  for (const BadCut& c : cuts)
    for (VertexId v : c.vertices) on_cut[v] = 1;
  auto clean = [&](const std::vector<VertexId>& vs) {
    return std::none_of(vs.begin(), vs.end(), [&](VertexId v) { return on_cut[v] != 0; });
  };

  if (!clean(kernel)) {
    // Ties in the minimisation can leave a kernel vertex on another cut of
    // the same size. Take the smallest clean side of any bad cut instead.
    const BadCut* best = nullptr;
    std::vector<VertexId> best_kernel;
    for (const BadCut& c : cuts)
      for (auto& comp : components_without(g, c.vertices))
        if (clean(comp) && (best == nullptr || comp.size() < best_kernel.size())) {
          best = &c;
          best_kernel = std::move(comp);
        }
    if (best != nullptr) {
      chosen = best;
      kernel = std::move(best_kernel);
      gs.from_fallback = true;
    } else {
      gs.kernel_avoids_cuts = false;
    }
  }

  gs.cut = *chosen;
  gs.kernel = kernel;
  gs.h_vertices = kernel;
  gs.h_vertices.insert(gs.h_vertices.end(), chosen->vertices.begin(), chosen->vertices.end());
  std::sort(gs.h_vertices.begin(), gs.h_vertices.end());

  for (VertexId v : gs.kernel) {
    std::size_t hits = 0;
    if (chosen->kind == BadCut::Kind::triangle)
      for (VertexId c : chosen->vertices) hits += g.has_edge(v, c) ? 1 : 0;
    (hits >= 2 ? gs.extraordinary : gs.ordinary).push_back(v);
  }
  return gs;
}

std::vector<FaceId> kernel_faces(const GoodSubgraph& gs, const EmbeddedGraph& eg) {
  const std::size_t bound = eg.graph().id_bound();
  std::vector<std::uint8_t> in_h(bound, 0);
  std::vector<std::uint8_t> in_kernel(bound, 0);
  for (VertexId v : gs.h_vertices) in_h[v] = 1;
  for (VertexId v : gs.kernel) in_kernel[v] = 1;
  std::vector<FaceId> out;
  for (FaceId f = 0; f < eg.faces().size(); ++f) {
    const auto& walk = eg.face(f).walk;
    if (std::all_of(walk.begin(), walk.end(), [&](VertexId v) { return in_h[v] != 0; }) &&
        std::any_of(walk.begin(), walk.end(), [&](VertexId v) { return in_kernel[v] != 0; }))
      out.push_back(f);
  }
  return out;
}

Rational kernel_charge(const GoodSubgraph& gs, const ChargeState& final_state,
                       const EmbeddedGraph& eg) {
  Rational sum(0);
  for (VertexId v : gs.kernel) sum += final_state.vertex_charge[v];
  for (FaceId f : kernel_faces(gs, eg)) sum += final_state.face_charge[f];
  return sum;
}

DichotomyReport check_dichotomy(const GoodSubgraph& gs, const ChargeState& final_state) {
  DichotomyReport report;
  report.ordinary_total = Rational(0);
  for (VertexId v : gs.ordinary) report.ordinary_total += final_state.vertex_charge[v];
  for (VertexId v : gs.extraordinary)
    if (final_state.vertex_charge[v] >= 2) {
      report.rich_extraordinary = v;
      break;
    }
  report.pass = report.rich_extraordinary.has_value() || report.ordinary_total > 0;
  return report;
}

}  // namespace degen
