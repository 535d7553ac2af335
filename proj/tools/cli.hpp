#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "degen/stream.hpp"
#include "json.hpp"

namespace degen::cli {

enum ExitCode : int { kPass = 0, kUsage = 1, kViolation = 2, kCounterexample = 3 };

// Keeps the most severe code: counterexample, then violation, then usage.
inline int worst(int a, int b) {
  auto rank = [](int c) { return c == kCounterexample ? 3 : c == kViolation ? 2 : c == kUsage ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

struct RunConfig {
  std::string subcommand;
  std::string input;   // path, "-" for stdin
  std::string named;   // alternative to input
  std::string format;  // graph6 | planar_code | "" to sniff
  std::string output;  // "" or "-" for stdout
  std::string output_format = "csv";
  std::uint64_t seed = 0;
  std::size_t max_n = 0;  // 0: unlimited
  unsigned jobs = 1;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> budget;
  int verbosity = 0;

  std::string certificates;
  std::string certificates_dir;

  std::string gen_kind = "random";
  std::size_t n = 0;
  std::size_t count = 1;
  int min_degree = 3;
};

nlohmann::json to_json(const RunConfig& config);

struct Input {
  std::vector<StreamRecord> records;
  std::string sha256;
};

// Throws FormatError on malformed data and std::runtime_error on IO trouble.
Input load_input(const RunConfig& config);

std::string sha256_hex(const std::vector<std::uint8_t>& bytes);

nlohmann::json run_header(const RunConfig& config, const std::string& input_digest);

// Rows go out as CSV (with "#" header lines) or as JSON lines whose first
// line is {"header": ...}.
class Table {
 public:
  Table(std::ostream& out, bool json, std::vector<std::string> columns);
  void header(const nlohmann::json& meta);
  void row(const std::vector<nlohmann::json>& cells);

 private:
  std::ostream& out_;
  bool json_;
  std::vector<std::string> columns_;
};

// Runs body(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

int cmd_extract(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_discharge(const RunConfig& config);
int cmd_gen(const RunConfig& config);
int cmd_oracle(const RunConfig& config);

const std::vector<std::string>& suite_names();

}  // namespace degen::cli
