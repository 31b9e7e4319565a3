#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vbrick/cli.hpp"

namespace {

using vbrick::cli::RunConfig;

struct RawOptions {
  std::string genus = "1";
  std::string level = "1";
  int epsilon = 1;
  std::string format = "table";
  bool check_oracle = false;
  unsigned precision_bits = 0;
  std::uint64_t seed = 20240814;
  std::string suite = "all";
  std::string mode = "auto";
};

void add_common_options(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--genus", raw.genus, "genus A or range A..B")->capture_default_str();
  cmd->add_option("--level", raw.level, "level A or range A..B")->capture_default_str();
  cmd->add_option("--epsilon", raw.epsilon, "sign convention, +1 or -1")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  cmd->add_option("--format", raw.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--precision-bits", raw.precision_bits,
                  "oracle working precision (0 = automatic, else >= 64)")
      ->envname("VBRICK_PRECISION_BITS");
  cmd->add_option("--seed", raw.seed, "seed for randomized property checks")
      ->capture_default_str();
}

RunConfig to_config(const RawOptions& raw) {
  RunConfig cfg;
  std::tie(cfg.genus_lo, cfg.genus_hi) = vbrick::cli::parse_range(raw.genus);
  std::tie(cfg.level_lo, cfg.level_hi) = vbrick::cli::parse_range(raw.level);
  cfg.sign = vbrick::SignConvention(raw.epsilon);
  cfg.format = raw.format == "csv"    ? vbrick::cli::Format::csv
               : raw.format == "json" ? vbrick::cli::Format::json
                                      : vbrick::cli::Format::table;
  cfg.check_oracle = raw.check_oracle;
  cfg.precision_bits = raw.precision_bits;
  cfg.seed = raw.seed;
  cfg.suite = raw.suite;
  cfg.brick_mode = vbrick::cli::parse_brick_mode(raw.mode);
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Verlinde dimensions and their Heisenberg-equivariant brick refinements"};
  app.set_version_flag("--version", vbrick::cli::kVersion);
  app.require_subcommand(1);

  RawOptions raw_dims, raw_bricks, raw_verify;

  CLI::App* dims = app.add_subcommand("dims", "tabulate dim and twisted dim per (genus, level)");
  add_common_options(dims, raw_dims);
  dims->add_flag("--check-oracle", raw_dims.check_oracle,
                 "cross-check every entry against the trigonometric oracle");

  CLI::App* bricks = app.add_subcommand("bricks", "brick dimension tables per (genus, level)");
  add_common_options(bricks, raw_bricks);
  bricks->add_option("--mode", raw_bricks.mode,
                     "force a decomposition mode instead of selecting by level mod 4")
      ->check(CLI::IsMember({"auto", "mod4-zero", "mod4-two", "odd"}));

  CLI::App* verify = app.add_subcommand("verify", "run invariant suites and report pass/fail");
  add_common_options(verify, raw_verify);
  verify->add_option("--suite", raw_verify.suite,
                     "group | pairing | quadforms | verlinde | characters | all")
      ->capture_default_str();
  verify->add_flag("--check-oracle", raw_verify.check_oracle,
                   "accepted for symmetry; the verlinde suite always cross-checks the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? vbrick::cli::kExitOk : vbrick::cli::kExitUsage;
  }

  try {
    if (dims->parsed()) return vbrick::cli::cmd_dims(to_config(raw_dims), std::cout, std::cerr);
    if (bricks->parsed())
      return vbrick::cli::cmd_bricks(to_config(raw_bricks), std::cout, std::cerr);
    return vbrick::cli::cmd_verify(to_config(raw_verify), std::cout, std::cerr);
  } catch (const vbrick::inconsistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vbrick::cli::kExitInconsistent;
  } catch (const vbrick::precision_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vbrick::cli::kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vbrick::cli::kExitUsage;
  }
}
