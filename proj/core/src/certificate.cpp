#include "degen/certificate.hpp"

#include "json.hpp"

#include "degen/errors.hpp"

namespace degen {

namespace {

using ordered_json = nlohmann::ordered_json;

// Gamma = |V|/12 + (2|E| - 5|V|)/36 + tc/18, counted here without the
// potential module.
Rational replay_gamma(const Graph& g) {
  std::vector<VertexId> parent(g.id_bound());
  for (VertexId v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::int64_t vertices = 0;
  std::int64_t degree_sum = 0;
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v)) continue;
    ++vertices;
    for (VertexId u : g.neighbours(v)) {
      ++degree_sum;
      parent[find(u)] = find(v);
    }
  }
  // A component is a tree iff its edge count is one less than its order.
  std::vector<std::int64_t> order(g.id_bound(), 0);
  std::vector<std::int64_t> ends(g.id_bound(), 0);
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v)) continue;
    ++order[find(v)];
    ends[find(v)] += static_cast<std::int64_t>(g.neighbours(v).size());
  }
  std::int64_t trees = 0;
  for (VertexId v = 0; v < g.id_bound(); ++v)
    if (g.has_vertex(v) && find(v) == v && ends[v] / 2 == order[v] - 1) ++trees;
  return Rational(3 * vertices + degree_sum - 5 * vertices + 2 * trees, 36);
}

CertificateReport fail(std::string message, std::optional<std::size_t> at = std::nullopt) {
  return {false, at, std::move(message)};
}

}  // namespace

std::string certificate_to_json(const ExtractionCertificate& cert) {
  ordered_json j;
  j["gamma"] = to_string(cert.original_gamma);
  ordered_json events = ordered_json::array();
  for (const auto& e : cert.events)
    events.push_back({{"op", e.op == CertificateEvent::Op::collect ? "collect" : "delete"},
                      {"v", e.v}});
  j["events"] = std::move(events);
  j["deletions"] = cert.deletions;
  return j.dump();
}

ExtractionCertificate certificate_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    ExtractionCertificate cert;
    cert.original_gamma = parse_rational(j.at("gamma").get<std::string>());
    for (const auto& e : j.at("events")) {
      const auto op = e.at("op").get<std::string>();
      if (op != "collect" && op != "delete") throw FormatError("unknown certificate op " + op);
      cert.events.push_back({op == "collect" ? CertificateEvent::Op::collect
                                             : CertificateEvent::Op::del,
                             e.at("v").get<VertexId>()});
    }
    cert.deletions = j.at("deletions").get<std::vector<VertexId>>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("certificate: ") + e.what());
  }
}

std::vector<ExtractionCertificate> read_certificates(std::istream& in) {
  std::vector<ExtractionCertificate> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("{\"header\"", 0) == 0) continue;
    out.push_back(certificate_from_json(line));
  }
  return out;
}

CertificateReport verify_certificate(const Graph& g, const ExtractionCertificate& cert) {
  const Rational gamma = replay_gamma(g);
  if (gamma != cert.original_gamma)
    return fail("gamma mismatch: certificate says " + to_string(cert.original_gamma) +
                ", graph has " + to_string(gamma));
  if (Rational(static_cast<std::int64_t>(cert.deletions.size())) > gamma)
    return fail("budget exceeded: " + std::to_string(cert.deletions.size()) + " deletions > " +
                to_string(gamma));

  const std::size_t bound = g.id_bound();
  std::vector<std::int64_t> degree(bound, 0);
  std::vector<std::uint8_t> gone(bound, 1);
  std::size_t alive = 0;
  for (VertexId v = 0; v < bound; ++v) {
    if (!g.has_vertex(v)) continue;
    gone[v] = 0;
    degree[v] = static_cast<std::int64_t>(g.neighbours(v).size());
    ++alive;
  }
  std::size_t next_deletion = 0;
  for (std::size_t i = 0; i < cert.events.size(); ++i) {
    const auto& e = cert.events[i];
    if (e.v >= bound || !g.has_vertex(e.v)) return fail("unknown vertex " + std::to_string(e.v), i);
    if (gone[e.v]) return fail("vertex " + std::to_string(e.v) + " removed twice", i);
    if (e.op == CertificateEvent::Op::collect) {
      if (degree[e.v] > 4)
        return fail("collect of vertex " + std::to_string(e.v) + " at degree " +
                        std::to_string(degree[e.v]), i);
    } else {
      if (next_deletion >= cert.deletions.size() || cert.deletions[next_deletion] != e.v)
        return fail("delete of vertex " + std::to_string(e.v) + " not in the deletion list", i);
      ++next_deletion;
    }
    gone[e.v] = 1;
    --alive;
    for (VertexId u : g.neighbours(e.v)) --degree[u];
  }
  if (next_deletion != cert.deletions.size())
    return fail("deletion list has entries without a delete event", cert.events.size());
  if (alive != 0)
    return fail(std::to_string(alive) + " vertices left after replay", cert.events.size());

  // Peel the survivors of the deletions on their own.
  std::vector<std::uint8_t> out(bound, 1);
  std::vector<std::int64_t> d(bound, 0);
  for (VertexId v = 0; v < bound; ++v) out[v] = g.has_vertex(v) ? 0 : 1;
  for (VertexId v : cert.deletions) out[v] = 1;
  std::vector<VertexId> stack;
  std::size_t left = 0;
  for (VertexId v = 0; v < bound; ++v) {
    if (out[v]) continue;
    ++left;
    for (VertexId u : g.neighbours(v)) d[v] += out[u] ? 0 : 1;
    if (d[v] <= 4) stack.push_back(v);
  }
  std::vector<std::uint8_t> peeled(bound, 0);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (peeled[v]) continue;
    peeled[v] = 1;
    --left;
    for (VertexId u : g.neighbours(v))
      if (!out[u] && !peeled[u] && --d[u] <= 4) stack.push_back(u);
  }
  if (left != 0) return fail("survivors of the deletions are not 4-degenerate");
  return {true, std::nullopt, "ok"};
}

}  // namespace degen
