#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "degen/errors.hpp"

using degen::cli::RunConfig;

namespace {

void add_common(CLI::App& sub, RunConfig& c) {
  sub.add_option("-i,--input", c.input, "Input stream path, - for stdin");
  sub.add_option("--named", c.named, "Use a built-in named graph as input");
  sub.add_option("-f,--format", c.format, "Stream format")->check(CLI::IsMember({"graph6", "planar_code"}));
  sub.add_option("-o,--output", c.output, "Output path (default stdout)");
  sub.add_option("--output-format", c.output_format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--seed", c.seed, "Seed (gen: first random seed)");
  sub.add_option("--max-n", c.max_n, "Skip graphs with more vertices");
  sub.add_option("-j,--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub.add_flag("-v,--verbose", "More logging on stderr (-vv for ledgers)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced 4-degenerate subgraphs of planar graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DEGEN_VERSION);
  RunConfig c;

  auto* extract = app.add_subcommand("extract", "Extract a large induced 4-degenerate subgraph with a certificate");
  add_common(*extract, c);
  extract->add_option("--certificates", c.certificates, "Write certificates as JSON lines");
  extract->add_option("--certificates-dir", c.certificates_dir, "Write one certificate file per graph");

  auto* verify = app.add_subcommand("verify", "Run invariant suites over a stream");
  add_common(*verify, c);
  verify->add_option("-s,--suite", c.suites, "lemma7, lemma9, lemma12, theorem1, theorem2, certificate");
  verify->add_option("--certificates", c.certificates, "Certificates to check, in stream order");

  auto* discharge = app.add_subcommand("discharge", "Per-element charge report");
  add_common(*discharge, c);

  auto* gen = app.add_subcommand("gen", "Write generated graphs");
  add_common(*gen, c);
  gen->add_option("--kind", c.gen_kind, "named, random, triangulations or planar")
      ->check(CLI::IsMember({"named", "random", "triangulations", "planar"}));
  gen->add_option("-n", c.n, "Order of generated graphs");
  gen->add_option("--count", c.count, "Number of random graphs (seeds seed, seed+1, ...)");
  gen->add_option("--min-degree", c.min_degree, "Minimum degree target")->check(CLI::IsMember({3, 5}));

  auto* oracle = app.add_subcommand("oracle", "Exact minimum deletion compared with extraction");
  add_common(*oracle, c);
  oracle->add_option("--budget", c.budget, "Search node budget per graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : degen::cli::kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  c.subcommand = sub->get_name();
  c.verbosity = static_cast<int>(sub->count("--verbose"));
  try {
    if (c.subcommand == "extract") return degen::cli::cmd_extract(c);
    if (c.subcommand == "verify") return degen::cli::cmd_verify(c);
    if (c.subcommand == "discharge") return degen::cli::cmd_discharge(c);
    if (c.subcommand == "gen") return degen::cli::cmd_gen(c);
    return degen::cli::cmd_oracle(c);
  } catch (const degen::FormatError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return degen::cli::kUsage;
}
