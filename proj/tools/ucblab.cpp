// ucblab: Gaussian-bandit UCB experiments, regret-bound evaluation, and
// Monte Carlo verification of the boundary-crossing caps behind the bounds.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ucb/config.hpp"
#include "ucb/report.hpp"
#include "ucb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::optional<std::int64_t> replications;
  std::optional<std::int64_t> seed;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_config = true) {
  if (needs_config) {
    cmd->add_option("--config", args.config_path, "experiment config (JSON)")->required();
  }
  cmd->add_option("--out", args.out_dir, "output directory (overrides config)");
  cmd->add_option("--replications", args.replications, "replication count (overrides config)");
  cmd->add_option("--seed", args.seed, "master seed (overrides config)");
  cmd->add_option("--threads", args.threads, "worker threads (0 = hardware)");
}

ucb::cli::ExperimentConfig load_config(const CommonArgs& args) {
  ucb::cli::ExperimentConfig config = ucb::cli::parse_config(args.config_path);
  if (!args.out_dir.empty()) config.output_dir = args.out_dir;
  if (args.replications) {
    if (*args.replications < 1) {
      throw ucb::cli::ConfigError("replications", "must be >= 1");
    }
    config.replications = *args.replications;
    if (config.crossing) config.crossing->replications = *args.replications;
  }
  if (args.seed) {
    config.master_seed = static_cast<std::uint64_t>(*args.seed);
    if (config.crossing) config.crossing->seed = static_cast<std::uint64_t>(*args.seed);
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian-bandit UCB policies, regret bounds, and crossing-probability checks"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  bool summary_only = false;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "run episodes and write traces.csv + summary.json");
  add_common(sim_cmd, sim_args);
  sim_cmd->add_flag("--summary-only", summary_only, "keep only each replication's final row");

  CommonArgs bounds_args;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate every regret bound, write bounds.csv");
  add_common(bounds_cmd, bounds_args);

  CommonArgs crossing_args;
  bool crossing_fast = false;
  CLI::App* crossing_cmd =
      app.add_subcommand("crossing", "Monte Carlo boundary-crossing checks, write crossing.csv");
  add_common(crossing_cmd, crossing_args);
  crossing_cmd->add_flag("--fast", crossing_fast, "divide replication counts by 10");

  CommonArgs report_args;
  CLI::App* report_cmd =
      app.add_subcommand("report", "simulate + bounds with pass/fail comparisons in summary.json");
  add_common(report_cmd, report_args);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  bool verify_fast = false;
  int verify_threads = 0;
  std::optional<std::int64_t> verify_seed;
  verify_cmd->add_flag("--fast", verify_fast, "reduced replication counts (criteria marked [reduced])");
  verify_cmd->add_option("--threads", verify_threads, "worker threads (0 = hardware)");
  verify_cmd->add_option("--seed", verify_seed, "Monte Carlo master seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim_cmd->parsed()) {
      ucb::cli::cmd_simulate(load_config(sim_args), summary_only, sim_args.threads);
    } else if (bounds_cmd->parsed()) {
      ucb::cli::cmd_bounds(load_config(bounds_args));
    } else if (crossing_cmd->parsed()) {
      ucb::cli::cmd_crossing(load_config(crossing_args), crossing_fast, crossing_args.threads);
    } else if (report_cmd->parsed()) {
      ucb::cli::cmd_report(load_config(report_args), report_args.threads);
    } else if (verify_cmd->parsed()) {
      ucb::verify::Options options;
      options.fast = verify_fast;
      options.num_threads = verify_threads;
      if (verify_seed) options.seed = static_cast<std::uint64_t>(*verify_seed);
      const auto results = ucb::verify::run_all(options, [](const auto& r) {
        std::cout << ucb::verify::format_result_line(r) << "\n" << std::flush;
      });
      const bool ok = ucb::verify::all_gating_pass(results);
      std::cout << (ok ? "verification suite: all criteria passed"
                       : "verification suite: FAILURES present")
                << "\n";
      return ok ? kExitOk : kExitVerifyFailure;
    }
  } catch (const ucb::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ucb::cli::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}
