#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "locoh/cli/commands.hpp"

namespace {

using locoh::cli::Command;
using locoh::cli::RunConfig;

int emit(const RunConfig& cfg, const std::string& body) {
  if (cfg.output.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << cfg.output << " for writing\n";
    return locoh::cli::kExitUsage;
  }
  out << body;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification runs for the local cohomology construction"};
  app.set_version_flag("--version", locoh::cli::kToolVersion);
  app.require_subcommand(1);

  std::string field_spec = "q", format = "json", output, index_expr;
  std::uint64_t seed = 0;
  RunConfig cfg;

  app.add_option("--output", output, "Write the report to PATH instead of stdout");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized equal-degree splitting");

  auto field_option = [&](CLI::App* sub) { sub->add_option("--field", field_spec, "q or fp:P"); };

  auto* lemma = app.add_subcommand("verify-lemma1", "Check det B_i = tau_i and the first-row recurrence");
  lemma->add_option("--max-i", cfg.max_i, "Largest index i")->required();
  field_option(lemma);

  auto* factors = app.add_subcommand("factors", "Factor tau_i over an index set and count distinct factors");
  factors->add_option("--set", index_expr, "Index set, e.g. 1..20 or 1,7,25")->required();
  field_option(factors);

  auto* coh = app.add_subcommand("cohomology", "Torsion certificates and prime witnesses per degree d");
  coh->add_option("--d-min", cfg.d_min, "Smallest d")->required();
  coh->add_option("--d-max", cfg.d_max, "Largest d")->required();
  field_option(coh);

  auto* frob = app.add_subcommand("frobenius", "Collapse checks and witness growth for the Frobenius variant");
  frob->add_option("--n-set", index_expr, "Set of n values, e.g. 6..12")->required();
  field_option(frob);

  for (auto* sub : {lemma, factors, coh, frob}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : locoh::cli::kExitUsage;
  }

  try {
    if (lemma->parsed()) cfg.command = Command::VerifyLemma1;
    if (factors->parsed()) cfg.command = Command::Factors;
    if (coh->parsed()) cfg.command = Command::Cohomology;
    if (frob->parsed()) cfg.command = Command::Frobenius;
    cfg.field = locoh::cli::parse_field(field_spec);
    cfg.format = locoh::cli::parse_format(format);
    cfg.output = output;
    if (*seed_opt) cfg.seed = seed;
    if (cfg.command == Command::Factors || cfg.command == Command::Frobenius)
      cfg.index_set = locoh::cli::parse_index_set(index_expr);

    const locoh::cli::RunResult res = locoh::cli::run(cfg);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    if (int rc = emit(cfg, locoh::cli::render(cfg, res)); rc != 0) return rc;
    return res.exit_code();
  } catch (const locoh::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return locoh::cli::kExitUsage;
  } catch (const locoh::Error& e) {
    std::cerr << "error [" << locoh::to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == locoh::ErrorCode::VerificationFailed ? locoh::cli::kExitCheckFailed : locoh::cli::kExitUsage;
  }
}
