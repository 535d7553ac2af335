#include <openssl/evp.h>

#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <thread>

#include "cli.hpp"
#include "degen/generators.hpp"
#include "degen/graph6.hpp"
#include "degen/planar_code.hpp"

#ifndef DEGEN_VERSION
#define DEGEN_VERSION "unknown"
#endif

namespace degen::cli {

using nlohmann::json;

json to_json(const RunConfig& c) {
  json j{{"subcommand", c.subcommand}, {"output_format", c.output_format},
         {"seed", c.seed},             {"max_n", c.max_n},
         {"jobs", c.jobs},             {"verbosity", c.verbosity}};
  if (!c.input.empty()) j["input"] = c.input;
  if (!c.named.empty()) j["named"] = c.named;
  if (!c.format.empty()) j["format"] = c.format;
  if (!c.output.empty()) j["output"] = c.output;
  if (!c.suites.empty()) j["suites"] = c.suites;
  if (c.budget) j["budget"] = *c.budget;
  if (!c.certificates.empty()) j["certificates"] = c.certificates;
  if (!c.certificates_dir.empty()) j["certificates_dir"] = c.certificates_dir;
  if (c.subcommand == "gen") {
    j["kind"] = c.gen_kind;
    j["n"] = c.n;
    j["count"] = c.count;
    j["min_degree"] = c.min_degree;
  }
  return j;
}

std::string sha256_hex(const std::vector<std::uint8_t>& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

namespace {

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  if (path == "-") {
    std::cin >> std::noskipws;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

StreamFormat pick_format(const RunConfig& c, const std::vector<std::uint8_t>& bytes) {
  if (!c.format.empty()) {
    const auto f = parse_stream_format(c.format);
    if (!f) throw std::invalid_argument("unknown format " + c.format);
    return *f;
  }
  const std::string_view head(reinterpret_cast<const char*>(bytes.data()),
                              std::min<std::size_t>(bytes.size(), kPlanarCodeHeader.size()));
  if (head == kPlanarCodeHeader) return StreamFormat::planar_code;
  // graph6 is printable; a planar_code record starts with a small order byte.
  if (!bytes.empty() && bytes[0] < 63 && bytes[0] != '\n') return StreamFormat::planar_code;
  return StreamFormat::graph6;
}

}  // namespace

Input load_input(const RunConfig& c) {
  Input in;
  if (!c.named.empty()) {
    EmbeddedGraph eg = named_graph(c.named);
    const std::string code = encode_graph6(eg.graph());
    in.sha256 = sha256_hex({code.begin(), code.end()});
    StreamRecord r;
    r.graph = eg.graph();
    r.planar = true;
    r.embedding = std::move(eg);
    in.records.push_back(std::move(r));
    return in;
  }
  if (c.input.empty()) throw std::invalid_argument("no input: pass --input or --named");
  auto bytes = read_bytes(c.input);
  in.sha256 = sha256_hex(bytes);
  const StreamFormat format = pick_format(c, bytes);
  GraphStream stream(std::move(bytes), format);
  while (auto r = stream.next()) {
    if (c.max_n && r->graph.vertex_count() > c.max_n) continue;
    in.records.push_back(std::move(*r));
  }
  return in;
}

json run_header(const RunConfig& config, const std::string& input_digest) {
  json h{{"tool", "degen"}, {"version", DEGEN_VERSION}, {"config", to_json(config)}};
  if (!input_digest.empty()) h["input_sha256"] = input_digest;
  return h;
}

Table::Table(std::ostream& out, bool json, std::vector<std::string> columns)
    : out_(out), json_(json), columns_(std::move(columns)) {}

void Table::header(const json& meta) {
  if (json_) {
    out_ << json{{"header", meta}}.dump() << '\n';
    return;
  }
  out_ << "# " << meta.value("tool", "") << ' ' << meta.value("version", "") << '\n';
  out_ << "# config " << meta["config"].dump() << '\n';
  if (meta.contains("input_sha256"))
    out_ << "# input sha256 " << meta["input_sha256"].get<std::string>() << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
  out_ << '\n';
}

namespace {

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + '"';
}

}  // namespace

void Table::row(const std::vector<json>& cells) {
  if (json_) {
    json obj = json::object();
    for (std::size_t i = 0; i < columns_.size() && i < cells.size(); ++i) obj[columns_[i]] = cells[i];
    out_ << obj.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_cell(cells[i]);
  out_ << '\n';
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace degen::cli
