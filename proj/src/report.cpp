#include "ucb/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ucb/gauss.hpp"
#include "ucb/rng.hpp"

namespace ucb::cli {

namespace {

using nlohmann::json;

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: keep \n line ends everywhere
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void ensure_output_dir(const ExperimentConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) throw IoError("cannot create output directory " + config.output_dir.string());
}

std::string hash_hex(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json aggregate_json(const PolicyEntry& policy, const sim::AggregateResult& agg) {
  json j;
  j["name"] = policy.name;
  j["replications"] = agg.replications;
  j["mean_post_init_regret"] = agg.mean_post_init_regret;
  j["std_error"] = agg.std_error;
  j["mean_full_regret"] = agg.mean_full_regret;
  j["mean_pulls"] = agg.mean_pulls;
  return j;
}

std::string crossing_verdict(double estimate, double bound, double margin) {
  return estimate <= bound + margin ? "pass" : "fail";
}

std::vector<std::pair<std::string, bounds::BoundReport>> all_bounds(
    const ExperimentConfig& config) {
  std::vector<std::pair<std::string, bounds::BoundReport>> reports;
  const sim::BanditInstance& inst = config.instance;
  const std::int64_t t_prime = inst.t_prime();
  // theorem1 is evaluated at the first constant-level policy's level if the
  // config has one, otherwise at sqrt(2 log T').
  const exploration::ExplorationLevel* level = nullptr;
  for (const PolicyEntry& p : config.policies) {
    if (const auto* c = std::get_if<policies::ConstantUcb>(&p.spec.rule)) {
      level = &c->level;
      break;
    }
  }
  if (level != nullptr) {
    reports.emplace_back("theorem1", bounds::theorem1_bound(inst, *level));
  } else if (t_prime >= 2) {
    reports.emplace_back("theorem1",
                         bounds::theorem1_bound(inst, exploration::sqrt_two_log_level(t_prime)));
  }
  if (t_prime >= 2) reports.emplace_back("corollary1", bounds::corollary1_bound(inst));
  if (t_prime >= 3) reports.emplace_back("corollary2", bounds::corollary2_bound(inst, t_prime));
  reports.emplace_back("theorem2", bounds::theorem2_bound(inst));
  reports.emplace_back("lai_robbins_lower", bounds::lai_robbins_lower(inst, inst.horizon));
  reports.emplace_back("auer_upper", bounds::auer_bound(inst, inst.horizon));
  return reports;
}

void write_bounds_csv(const ExperimentConfig& config,
                      const std::vector<std::pair<std::string, bounds::BoundReport>>& reports) {
  auto out = open_output(config.output_dir / "bounds.csv");
  out << "bound_kind,arm,delta,leading_term,correction_term,per_arm_total,grand_total\n";
  for (const auto& [name, report] : reports) {
    if (report.per_arm.empty()) {
      out << name << ",,0,0,0,0," << csv_double(report.grand_total) << "\n";
      continue;
    }
    for (const bounds::PerArmBound& e : report.per_arm) {
      out << name << "," << (e.arm + 1) << "," << csv_double(e.delta) << ","
          << csv_double(e.leading_term) << "," << csv_double(e.correction_term) << ","
          << csv_double(e.total) << "," << csv_double(report.grand_total) << "\n";
    }
  }
  if (!out) throw IoError("failed while writing bounds.csv");
}

json bounds_json(const std::vector<std::pair<std::string, bounds::BoundReport>>& reports) {
  json arr = json::array();
  for (const auto& [name, report] : reports) {
    json j;
    j["kind"] = name;
    j["grand_total"] = report.grand_total;
    if (report.expansion_numerator) j["expansion_numerator"] = *report.expansion_numerator;
    json per_arm = json::array();
    for (const bounds::PerArmBound& e : report.per_arm) {
      per_arm.push_back({{"arm", e.arm + 1},
                         {"delta", e.delta},
                         {"leading_term", e.leading_term},
                         {"correction_term", e.correction_term},
                         {"total", e.total}});
    }
    j["per_arm"] = per_arm;
    arr.push_back(j);
  }
  return arr;
}

void write_json(const ExperimentConfig& config, const json& j) {
  auto out = open_output(config.output_dir / "summary.json");
  out << j.dump(2) << "\n";
  if (!out) throw IoError("failed while writing summary.json");
}

}  // namespace

std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void cmd_simulate(const ExperimentConfig& config, bool summary_only, int num_threads) {
  ensure_output_dir(config);
  json summary;
  summary["config_hash"] = hash_hex(config.config_hash);
  json policies_json = json::array();
  for (std::size_t p = 0; p < config.policies.size(); ++p) {
    const PolicyEntry& policy = config.policies[p];
    std::string file_name = "traces.csv";
    if (config.policies.size() > 1) {
      file_name = "traces_" + std::to_string(p) + "_" + policy.name + ".csv";
    }
    auto out = open_output(config.output_dir / file_name);
    out << "replication,t,arm,reward,cum_pseudo_regret\n";
    for (std::int64_t r = 0; r < config.replications; ++r) {
      const sim::RegretTrace trace = sim::run_episode(
          config.instance, policy.spec, stream_seed(config.master_seed, static_cast<std::uint64_t>(r)), r);
      const std::size_t t_total = trace.arms.size();
      for (std::size_t t = 0; t < t_total; ++t) {
        if (summary_only && t + 1 < t_total) continue;
        out << r << "," << (t + 1) << "," << (trace.arms[t] + 1) << ","
            << csv_double(trace.rewards[t]) << "," << csv_double(trace.cum_pseudo_regret[t])
            << "\n";
      }
    }
    if (!out) throw IoError("failed while writing " + file_name);
    const sim::AggregateResult agg = sim::run_replications(
        config.instance, policy.spec, config.replications, config.master_seed, num_threads);
    policies_json.push_back(aggregate_json(policy, agg));
  }
  summary["policies"] = policies_json;
  write_json(config, summary);
}

void cmd_bounds(const ExperimentConfig& config) {
  ensure_output_dir(config);
  write_bounds_csv(config, all_bounds(config));
}

void cmd_crossing(const ExperimentConfig& config, bool fast, int num_threads) {
  ensure_output_dir(config);
  CrossingSection section = config.crossing ? *config.crossing : default_crossing_section();
  std::int64_t reps = section.replications;
  if (fast) reps = std::max<std::int64_t>(1, reps / 10);

  auto out = open_output(config.output_dir / "crossing.csv");
  out << "quantity,params,estimate,std_error,bound,verdict\n";
  for (const MaxWalkCase& c : section.max_walk) {
    const auto est = crossing::mc_max_normalized_walk(c.b, c.horizon, reps, section.seed, num_threads);
    const double bound =
        bounds::phi_star_upper(c.b, c.horizon, bounds::PhiStarMethod::kNumericIntegral);
    std::ostringstream params;
    params << "b=" << c.b << ";T'=" << c.horizon << ";R=" << reps;
    out << "max_normalized_walk," << params.str() << "," << csv_double(est.estimate) << ","
        << csv_double(est.std_error) << "," << csv_double(bound) << ","
        << crossing_verdict(est.estimate, bound, 3.0 * est.std_error) << "\n";
  }
  for (const DriftedCase& c : section.drifted) {
    const auto est =
        crossing::mc_drifted_crossing(c.b, c.gamma, c.horizon, reps, section.seed, num_threads);
    const double bound = std::min(1.0, gauss::phi2(-c.b) / (c.gamma * c.gamma));
    std::ostringstream params;
    params << "b=" << c.b << ";gamma=" << c.gamma << ";T'=" << c.horizon << ";R=" << reps;
    out << "drifted_sqrt_crossing," << params.str() << "," << csv_double(est.estimate) << ","
        << csv_double(est.std_error) << "," << csv_double(bound) << ","
        << crossing_verdict(est.estimate, bound, 3.0 * est.std_error) << "\n";
  }
  for (const LaiBoundaryCase& c : section.lai_boundary) {
    const auto est =
        crossing::mc_lai_boundary(c.n, c.gamma, c.points_per_decade, reps, section.seed, num_threads);
    const double ng2 = c.n * c.gamma * c.gamma;
    const double bound = bounds::kC0Cap / ng2;  // cap expressed on the probability scale
    std::ostringstream params;
    params << "n=" << c.n << ";gamma=" << c.gamma << ";ppd=" << c.points_per_decade
           << ";R=" << reps;
    out << "lai_boundary," << params.str() << "," << csv_double(est.prob.estimate) << ","
        << csv_double(est.prob.std_error) << "," << csv_double(bound) << ","
        << crossing_verdict(est.prob.estimate, bound, 3.0 * est.prob.std_error) << "\n";
  }
  if (!out) throw IoError("failed while writing crossing.csv");
}

void cmd_report(const ExperimentConfig& config, int num_threads) {
  ensure_output_dir(config);
  const auto reports = all_bounds(config);
  write_bounds_csv(config, reports);

  json summary;
  summary["config_hash"] = hash_hex(config.config_hash);
  json policies_json = json::array();
  json comparisons = json::array();
  for (const PolicyEntry& policy : config.policies) {
    const sim::AggregateResult agg = sim::run_replications(
        config.instance, policy.spec, config.replications, config.master_seed, num_threads);
    policies_json.push_back(aggregate_json(policy, agg));

    // Pair each policy with the bound that covers it.
    std::string bound_kind;
    double bound_value = 0.0;
    if (const auto* c = std::get_if<policies::ConstantUcb>(&policy.spec.rule)) {
      bound_kind = "theorem1";
      bound_value = bounds::theorem1_bound(config.instance, c->level).grand_total;
    } else if (std::holds_alternative<policies::LaiUcb>(policy.spec.rule)) {
      bound_kind = "theorem2";
      bound_value = bounds::theorem2_bound(config.instance).grand_total;
    } else {
      continue;
    }
    const double margin = 3.0 * agg.std_error;
    json cmp;
    cmp["policy"] = policy.name;
    cmp["bound"] = bound_kind;
    cmp["estimate"] = agg.mean_post_init_regret;
    cmp["margin"] = margin;
    cmp["bound_value"] = bound_value;
    cmp["verdict"] = agg.mean_post_init_regret + margin <= bound_value ? "pass" : "fail";
    comparisons.push_back(cmp);
  }
  summary["policies"] = policies_json;
  summary["bounds"] = bounds_json(reports);
  summary["comparisons"] = comparisons;
  write_json(config, summary);
}

}  // namespace ucb::cli
