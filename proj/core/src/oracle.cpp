#include "degen/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "degen/potential.hpp"
#include "degen/reducer.hpp"

namespace degen {

namespace {

using Mask = std::uint64_t;

class Search {
 public:
  Search(const Graph& g, int k, std::optional<std::uint64_t> budget)
      : k_(k), budget_(budget) {
    const auto ids = g.vertices();
    ids_ = ids;
    std::vector<std::uint32_t> index(g.id_bound(), 0);
    for (std::uint32_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    adj_.assign(ids.size(), 0);
    for (std::uint32_t i = 0; i < ids.size(); ++i)
      for (VertexId u : g.neighbours(ids[i])) adj_[i] |= Mask{1} << index[u];
    all_ = ids.size() == 64 ? ~Mask{0} : (Mask{1} << ids.size()) - 1;
  }

  Mask all() const { return all_; }

  // The (k+1)-core of the vertices in `alive`.
  Mask core(Mask alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask rest = alive; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (std::popcount(adj_[v] & alive) <= k_) {
          alive &= ~(Mask{1} << v);
          changed = true;
        }
      }
    }
    return alive;
  }

  // Deletes a highest-degree core vertex until the core is empty.
  Mask greedy() const {
    Mask chosen = 0;
    for (Mask c = core(all_); c != 0; c = core(c)) {
      int best = -1;
      int best_degree = -1;
      for (Mask rest = c; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(adj_[v] & c);
        if (d > best_degree) {
          best = v;
          best_degree = d;
        }
      }
      chosen |= Mask{1} << best;
      c &= ~(Mask{1} << best);
    }
    return chosen;
  }

  // Is there a set of at most `depth` deletions, avoiding `kept`, emptying
  // the core of `alive`? Sets `found` on success.
  bool descend(Mask alive, Mask kept, int depth, Mask deleted) {
    if (budget_ && explored_ >= *budget_) {
      exhausted_ = true;
      return false;
    }
    ++explored_;
    const Mask c = core(alive);
    if (c == 0) {
      found_ = deleted;
      return true;
    }
    if (depth == 0 || (c & ~kept) == 0) return false;
    // Highest degree first: those are the likeliest members of a solution.
    std::vector<std::pair<int, int>> order;
    for (Mask rest = c & ~kept; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      order.emplace_back(-std::popcount(adj_[v] & c), v);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [neg, v] : order) {
      const Mask bit = Mask{1} << v;
      if (descend(c & ~bit, kept, depth - 1, deleted | bit)) return true;
      if (exhausted_) return false;
      kept |= bit;
    }
    return false;
  }

  std::vector<VertexId> to_ids(Mask m) const {
    std::vector<VertexId> out;
    for (; m != 0; m &= m - 1) out.push_back(ids_[static_cast<std::size_t>(std::countr_zero(m))]);
    return out;
  }

  std::uint64_t explored() const { return explored_; }
  bool exhausted() const { return exhausted_; }
  Mask found() const { return found_; }

 private:
  int k_;
  std::optional<std::uint64_t> budget_;
  std::vector<VertexId> ids_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  std::uint64_t explored_ = 0;
  bool exhausted_ = false;
  Mask found_ = 0;
};

}  // namespace

OracleResult min_deletion_exact(const Graph& g, int k, std::optional<std::uint64_t> node_budget) {
  if (g.vertex_count() > kOracleMaxOrder)
    throw std::invalid_argument("oracle supports at most 64 vertices");
  const auto t0 = std::chrono::steady_clock::now();
  Search search(g, k, node_budget);
  const Mask upper = search.greedy();
  OracleResult r;
  r.optimum = static_cast<std::size_t>(std::popcount(upper));
  r.witness = search.to_ids(upper);
  for (int depth = 0; depth < std::popcount(upper); ++depth) {
    if (search.descend(search.all(), 0, depth, 0)) {
      r.optimum = static_cast<std::size_t>(depth);
      r.witness = search.to_ids(search.found());
      break;
    }
    if (search.exhausted()) break;
  }
  r.optimal = !search.exhausted();
  r.explored = search.explored();
  r.time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
  return r;
}

void tally_theorem2(Theorem2Summary& summary, const Graph& g, bool planar) {
  ++summary.graphs;
  if (!planar) {
    ++summary.skipped_nonplanar;
    return;
  }
  if (g.vertex_count() < 7) {
    ++summary.skipped_small;
    return;
  }
  const Theorem2Outcome out = theorem2_witness(g);
  if (out.kind == Theorem2Outcome::Kind::collect_all) ++summary.collect_all;
  else ++summary.witness;
}

SandwichReport compare_extract_to_oracle(const Graph& g, std::optional<std::uint64_t> node_budget) {
  SandwichReport r;
  r.oracle = min_deletion_exact(g, 4, node_budget);
  r.extracted = extract(g).certificate.deletions.size();
  r.gamma = gamma(g);
  const auto opt = static_cast<std::int64_t>(r.oracle.optimum);
  const auto s = static_cast<std::int64_t>(r.extracted);
  if (!r.oracle.optimal) r.violation = "oracle budget exhausted";
  else if (opt > s) r.violation = "oracle optimum exceeds extracted deletions";
  else if (s > floor(r.gamma)) r.violation = "extracted deletions exceed floor(gamma)";
  else if (Rational(opt) > r.gamma) r.violation = "oracle optimum exceeds gamma";
  r.pass = r.violation.empty();
  return r;
}

}  // namespace degen
