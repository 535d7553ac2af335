#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>

#include "cli.hpp"
#include "degen/certificate.hpp"
#include "degen/cuts.hpp"
#include "degen/discharging.hpp"
#include "degen/embedding.hpp"
#include "degen/enumeration.hpp"
#include "degen/errors.hpp"
#include "degen/generators.hpp"
#include "degen/graph6.hpp"
#include "degen/oracle.hpp"
#include "degen/planar_code.hpp"
#include "degen/potential.hpp"
#include "degen/reducer.hpp"

namespace degen::cli {

using nlohmann::json;

namespace {

std::mutex log_mutex;

void log(const RunConfig& c, int level, const std::string& line) {
  if (c.verbosity < level) return;
  std::lock_guard lock(log_mutex);
  std::cerr << line << '\n';
}

// Owns the output file when one was named.
class Sink {
 public:
  explicit Sink(const std::string& path, bool binary = false) {
    if (path.empty() || path == "-") return;
    file_.open(path, binary ? std::ios::binary : std::ios::out);
    if (!file_) throw std::runtime_error("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct GraphResult {
  std::vector<std::vector<json>> rows;
  int code = kPass;
};

std::string str(const Rational& r) { return to_string(r); }

std::size_t min_degree(const Graph& g) {
  std::size_t d = SIZE_MAX;
  for (VertexId v : g.vertices()) d = std::min(d, g.degree(v));
  return d == SIZE_MAX ? 0 : d;
}

bool is_triangulation(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n >= 3 && g.edge_count() == 3 * n - 6;
}

struct ExtractOutcome {
  ExtractionResult result;
  Rational gamma, fraction, avg_degree;
  bool certificate_ok = false;
  std::string certificate_message;
  std::string violation;  // empty when every bound holds
};

ExtractOutcome run_extract(const Graph& g) {
  ExtractOutcome o;
  o.result = extract(g);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto s = static_cast<std::int64_t>(o.result.certificate.deletions.size());
  o.gamma = gamma(g);
  o.avg_degree = n ? average_degree(g) : Rational(0);
  o.fraction = n ? Rational(static_cast<std::int64_t>(o.result.collected), n) : Rational(1);
  const auto report = verify_certificate(g, o.result.certificate);
  o.certificate_ok = report.ok;
  o.certificate_message = report.message;
  if (!report.ok) o.violation = "certificate: " + report.message;
  else if (Rational(s) > o.gamma) o.violation = "|S| > gamma";
  else if (is_triangulation(g) && o.fraction < (Rational(38) - o.avg_degree) / 36)
    o.violation = "collected fraction below (38-d)/36";
  return o;
}

int emit(Table& table, const std::vector<GraphResult>& results) {
  int code = kPass;
  for (const auto& r : results) {
    for (const auto& row : r.rows) table.row(row);
    code = worst(code, r.code);
  }
  return code;
}

}  // namespace

int cmd_extract(const RunConfig& c) {
  const Input in = load_input(c);
  const std::size_t count = in.records.size();
  std::vector<GraphResult> results(count);
  std::vector<std::string> certs(count);

  parallel_for(count, c.jobs, [&](std::size_t i) {
    const StreamRecord& rec = in.records[i];
    const Graph& g = rec.graph;
    GraphResult& out = results[i];
    std::vector<json> row{rec.index, g.vertex_count(), g.edge_count()};
    try {
      if (!rec.planar) throw NotPlanarError();
      const ExtractOutcome o = run_extract(g);
      certs[i] = certificate_to_json(o.result.certificate);
      row.insert(row.end(), {str(o.avg_degree), str(o.gamma), o.result.certificate.deletions.size(),
                             o.result.collected, str(o.fraction), o.certificate_ok ? "ok" : "invalid",
                             o.violation.empty() ? "pass" : "violation: " + o.violation});
      if (!o.violation.empty()) out.code = kViolation;
      for (const auto& a : o.result.anomalies)
        log(c, 1, "graph " + std::to_string(rec.index) + ": round " + std::to_string(a.round) + ": " + a.what);
    } catch (const CounterexampleFound& e) {
      row.insert(row.end(), {"", "", "", "", "", "", std::string("counterexample: ") + e.what()});
      std::lock_guard lock(log_mutex);
      std::cerr << "counterexample at record " << rec.index << ": " << e.graph6() << '\n';
      out.code = kCounterexample;
    } catch (const std::exception& e) {
      row.insert(row.end(), {"", "", "", "", "", "", std::string("error: ") + e.what()});
      out.code = kUsage;
    }
    out.rows.push_back(std::move(row));
    log(c, 1, "extracted record " + std::to_string(rec.index));
  });

  const json header = run_header(c, in.sha256);
  if (!c.certificates_dir.empty()) {
    std::filesystem::create_directories(c.certificates_dir);
    for (std::size_t i = 0; i < count; ++i) {
      if (certs[i].empty()) continue;
      const auto path = std::filesystem::path(c.certificates_dir) /
                        ("certificate_" + std::to_string(in.records[i].index) + ".json");
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot write " + path.string());
      f << json{{"header", header}}.dump() << '\n' << certs[i] << '\n';
    }
  }
  if (!c.certificates.empty()) {
    Sink sink(c.certificates);
    sink.stream() << json{{"header", header}}.dump() << '\n';
    for (const auto& cert : certs)
      if (!cert.empty()) sink.stream() << cert << '\n';
  }

  Sink sink(c.output);
  Table table(sink.stream(), c.output_format == "json",
              {"index", "n", "edges", "avg_degree", "gamma", "deleted", "collected", "fraction",
               "certificate", "status"});
  table.header(header);
  return emit(table, results);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma7",   "lemma9",   "lemma12",
                                              "theorem1", "theorem2", "certificate"};
  return names;
}

namespace {

struct SuiteVerdict {
  std::string result;  // pass | fail | skip | error
  std::string detail;
  int code = kPass;
};

SuiteVerdict pass(std::string detail = "") { return {"pass", std::move(detail), kPass}; }
SuiteVerdict fail(std::string detail) { return {"fail", std::move(detail), kViolation}; }
SuiteVerdict skip(std::string detail) { return {"skip", std::move(detail), kPass}; }

SuiteVerdict run_suite(const std::string& suite, const StreamRecord& rec,
                       const std::optional<DischargeRun>& run,
                       const std::vector<ExtractionCertificate>& certs, std::size_t position) {
  const Graph& g = rec.graph;
  if (suite == "certificate") {
    if (position >= certs.size()) return skip("no certificate for this record");
    const auto report = verify_certificate(g, certs[position]);
    return report.ok ? pass() : fail(report.message);
  }
  if (!rec.planar) return skip("not planar");
  if (suite == "theorem2") {
    if (g.vertex_count() < 7) return skip("fewer than 7 vertices");
    try {
      const auto outcome = theorem2_witness(g);
      if (outcome.kind == Theorem2Outcome::Kind::collect_all) return pass("collect-all");
      return pass("delete " + std::to_string(*outcome.deleted));
    } catch (const CounterexampleFound& e) {
      return {"fail", std::string("counterexample ") + e.graph6(), kCounterexample};
    }
  }
  if (suite == "theorem1") {
    const ExtractOutcome o = run_extract(g);
    const std::string detail = "|S|=" + std::to_string(o.result.certificate.deletions.size()) +
                               " gamma=" + str(o.gamma);
    return o.violation.empty() ? pass(detail) : fail(o.violation + " (" + detail + ")");
  }

  const EmbeddedGraph& eg = *rec.embedding;
  if (suite == "lemma12") {
    const auto violations = check_distance_inflow(run->final_state, eg);
    if (violations.empty()) return pass();
    const auto& v = violations.front();
    return fail("receiver " + std::to_string(v.receiver) + " inflow " + str(v.inflow) + " > " +
                str(v.bound));
  }
  if (suite == "lemma7") {
    for (const Rational& t : run->stage_totals)
      if (t != Rational(12)) return fail("total charge " + str(t));
    const auto faces = check_lemma_faces(run->final_state, eg);
    if (!faces.hypothesis_met) return skip("needs connected, minimum degree 5");
    if (!faces.positive_faces.empty())
      return fail("face " + std::to_string(faces.positive_faces.front()) + " positive");
    return faces.pass ? pass("vertex total " + str(faces.vertex_total))
                      : fail("vertex total " + str(faces.vertex_total));
  }
  if (suite == "lemma9") {
    if (min_degree(g) < 5) return skip("needs minimum degree 5");
    const GoodSubgraph gs = good_subgraph(g);
    if (!gs.kernel_avoids_cuts) return fail("kernel meets a bad cut");
    const DichotomyReport d = check_dichotomy(gs, run->final_state);
    if (!d.pass) return fail("ordinary total " + str(d.ordinary_total));
    return pass(d.rich_extraordinary ? "rich extraordinary vertex " + std::to_string(*d.rich_extraordinary)
                                     : "ordinary total " + str(d.ordinary_total));
  }
  throw std::invalid_argument("unknown suite " + suite);
}

}  // namespace

int cmd_verify(const RunConfig& c) {
  std::vector<std::string> suites = c.suites;
  if (suites.empty()) {
    suites = {"lemma7", "lemma9", "lemma12", "theorem1", "theorem2"};
    if (!c.certificates.empty()) suites.push_back("certificate");
  }
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      std::cerr << "unknown suite " << s << '\n';
      return kUsage;
    }
  std::vector<ExtractionCertificate> certs;
  if (!c.certificates.empty()) {
    std::ifstream f(c.certificates);
    if (!f) throw std::runtime_error("cannot open " + c.certificates);
    certs = read_certificates(f);
  }
  const Input in = load_input(c);
  std::vector<GraphResult> results(in.records.size());
  const bool needs_run = std::any_of(suites.begin(), suites.end(), [](const std::string& s) {
    return s == "lemma7" || s == "lemma9" || s == "lemma12";
  });

  parallel_for(in.records.size(), c.jobs, [&](std::size_t i) {
    const StreamRecord& rec = in.records[i];
    GraphResult& out = results[i];
    std::optional<DischargeRun> run;
    for (const auto& suite : suites) {
      SuiteVerdict v;
      try {
        if (needs_run && rec.planar && !run) run = run_discharging(*rec.embedding);
        v = run_suite(suite, rec, run, certs, i);
      } catch (const std::exception& e) {
        v = {"error", e.what(), kUsage};
      }
      out.code = worst(out.code, v.code);
      out.rows.push_back({rec.index, rec.graph.vertex_count(), suite, v.result, v.detail});
      log(c, 2, "record " + std::to_string(rec.index) + " " + suite + ": " + v.result);
    }
  });

  Sink sink(c.output);
  Table table(sink.stream(), c.output_format == "json", {"index", "n", "suite", "result", "detail"});
  table.header(run_header(c, in.sha256));
  return emit(table, results);
}

int cmd_discharge(const RunConfig& c) {
  const Input in = load_input(c);
  std::vector<GraphResult> results(in.records.size());
  std::vector<std::vector<Transfer>> ledgers(in.records.size());

  parallel_for(in.records.size(), c.jobs, [&](std::size_t i) {
    const StreamRecord& rec = in.records[i];
    GraphResult& out = results[i];
    if (!rec.planar) {
      out.rows.push_back({rec.index, "error", "", "", "", "", "", "", "", "not planar"});
      out.code = kUsage;
      return;
    }
    const EmbeddedGraph& eg = *rec.embedding;
    const Graph& g = eg.graph();
    const auto types = classify_types(eg);
    const ChargeState s0 = initial_charges(eg);
    const ChargeState s1 = step1_face_discharge(s0, eg);
    const ChargeState s2 = step2_distance_discharge(s1, eg);
    const ChargeState s3 = step3_final_discharge(s2, eg, types);
    for (VertexId v : g.vertices())
      out.rows.push_back({rec.index, "vertex", v, g.degree(v), std::string(label_name(types[v].label)),
                          str(s0.vertex_charge[v]), str(s1.vertex_charge[v] - s0.vertex_charge[v]),
                          str(s2.vertex_charge[v] - s1.vertex_charge[v]),
                          str(s3.vertex_charge[v] - s2.vertex_charge[v]), str(s3.vertex_charge[v])});
    for (FaceId f = 0; f < eg.faces().size(); ++f)
      out.rows.push_back({rec.index, "face", f, eg.face(f).length(), "", str(s0.face_charge[f]),
                          str(s1.face_charge[f] - s0.face_charge[f]),
                          str(s2.face_charge[f] - s1.face_charge[f]),
                          str(s3.face_charge[f] - s2.face_charge[f]), str(s3.face_charge[f])});
    out.rows.push_back({rec.index, "total", "", "", "", str(s0.total()), str(s1.total() - s0.total()),
                        str(s2.total() - s1.total()), str(s3.total() - s2.total()), str(s3.total())});
    if (s3.total() != Rational(12)) out.code = kViolation;
    if (c.verbosity >= 2) ledgers[i] = s3.ledger;
  });

  if (c.verbosity >= 2) {
    std::cerr << "index,step,source,target,amount\n";
    auto name = [](const Element& e) { return (e.kind == Element::Kind::vertex ? "v" : "f") + std::to_string(e.id); };
    for (std::size_t i = 0; i < ledgers.size(); ++i)
      for (const Transfer& t : ledgers[i])
        std::cerr << in.records[i].index << ',' << t.step << ',' << name(t.source) << ','
                  << name(t.target) << ',' << str(t.amount) << '\n';
  }

  Sink sink(c.output);
  Table table(sink.stream(), c.output_format == "json",
              {"index", "kind", "id", "size", "type", "initial", "step1", "step2", "step3", "final"});
  table.header(run_header(c, in.sha256));
  return emit(table, results);
}

int cmd_gen(const RunConfig& c) {
  std::vector<EmbeddedGraph> embedded;
  std::vector<Graph> plain;
  if (c.gen_kind == "named") {
    embedded.push_back(named_graph(c.named));
  } else if (c.gen_kind == "random") {
    for (std::size_t i = 0; i < c.count; ++i) {
      try {
        embedded.push_back(random_triangulation(c.n, c.seed + i, c.min_degree));
      } catch (const GenerationFailure& e) {
        std::cerr << "seed " << c.seed + i << ": " << e.what() << '\n';
        return kUsage;
      }
    }
  } else if (c.gen_kind == "triangulations") {
    embedded = all_triangulations(c.n);
  } else if (c.gen_kind == "planar") {
    plain = all_connected_planar(c.n);
  } else {
    std::cerr << "unknown kind " << c.gen_kind << '\n';
    return kUsage;
  }
  log(c, 1, "# " + run_header(c, "").dump());

  const std::string format = c.format.empty() ? "planar_code" : c.format;
  Sink sink(c.output, true);
  std::ostream& out = sink.stream();
  if (format == "graph6") {
    for (const auto& eg : embedded) out << encode_graph6(eg.graph()) << '\n';
    for (const auto& g : plain) out << encode_graph6(g) << '\n';
  } else if (format == "planar_code") {
    for (const auto& g : plain) embedded.push_back(embed_graph(g));
    const auto bytes = encode_planar_code_stream(embedded, true);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  } else {
    std::cerr << "unknown format " << format << '\n';
    return kUsage;
  }
  log(c, 1, "wrote " + std::to_string(embedded.size() + (format == "graph6" ? plain.size() : 0)) + " graphs");
  return kPass;
}

int cmd_oracle(const RunConfig& c) {
  RunConfig limited = c;
  if (!limited.max_n) limited.max_n = 20;
  const Input in = load_input(limited);
  std::vector<GraphResult> results(in.records.size());

  parallel_for(in.records.size(), c.jobs, [&](std::size_t i) {
    const StreamRecord& rec = in.records[i];
    const Graph& g = rec.graph;
    GraphResult& out = results[i];
    std::vector<json> row{rec.index, g.vertex_count()};
    try {
      if (!rec.planar) throw NotPlanarError();
      const SandwichReport r = compare_extract_to_oracle(g, c.budget);
      const double ms = std::chrono::duration<double, std::milli>(r.oracle.time).count();
      row.insert(row.end(), {r.oracle.optimum, r.oracle.optimal, r.extracted, floor(r.gamma),
                             r.oracle.explored, ms, r.pass ? "pass" : "violation: " + r.violation});
      if (!r.pass) out.code = kViolation;
    } catch (const std::exception& e) {
      row.insert(row.end(), {"", "", "", "", "", "", std::string("error: ") + e.what()});
      out.code = kUsage;
    }
    out.rows.push_back(std::move(row));
  });

  Sink sink(c.output);
  Table table(sink.stream(), c.output_format == "json",
              {"index", "n", "optimum", "optimal", "extract_S", "floor_gamma", "explored", "time_ms",
               "status"});
  table.header(run_header(limited, in.sha256));
  return emit(table, results);
}

}  // namespace degen::cli
