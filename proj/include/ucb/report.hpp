#pragma once

#include <stdexcept>
#include <string>

#include "ucb/bounds.hpp"
#include "ucb/config.hpp"
#include "ucb/crossing.hpp"

namespace ucb::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formats a double with 17 significant digits, locale-independent.
std::string csv_double(double v);

// Writes traces*.csv (columns: replication,t,arm,reward,cum_pseudo_regret;
// arms 1-based) plus summary.json. With summary_only, only each replication's
// final row is kept.
void cmd_simulate(const ExperimentConfig& config, bool summary_only, int num_threads);

// Writes bounds.csv (columns: bound_kind,arm,delta,leading_term,
// correction_term,per_arm_total,grand_total).
void cmd_bounds(const ExperimentConfig& config);

// Writes crossing.csv (columns: quantity,params,estimate,std_error,bound,
// verdict) over the config's section or the default verification grids.
// fast divides replication counts by 10.
void cmd_crossing(const ExperimentConfig& config, bool fast, int num_threads);

// Runs the per-policy simulations and every bound, then writes summary.json
// with estimate-vs-bound verdicts and bounds.csv.
void cmd_report(const ExperimentConfig& config, int num_threads);

}  // namespace ucb::cli
