#include "ucb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "ucb/bounds.hpp"
#include "ucb/crossing.hpp"
#include "ucb/exploration.hpp"
#include "ucb/gauss.hpp"
#include "ucb/policies.hpp"
#include "ucb/quadrature.hpp"
#include "ucb/rng.hpp"
#include "ucb/simulator.hpp"

namespace ucb::verify {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Quadrature oracle for the defining integral of phi2: adaptive Simpson on
// [max(-x, -40), 40] to 1e-12. The Gaussian factor concentrates the mass in
// [-8, 8], so that region is seeded with explicit breakpoints; otherwise the
// first Simpson samples of a wide interval can all miss the bump.
double phi2_oracle(double x) {
  auto f = [x](double z) {
    const double s = z + x;
    return s * s * gauss::pdf(z);
  };
  const double lo = std::max(-x, -40.0);
  std::vector<double> pts{lo};
  for (double p : {-8.0, -4.0, -2.0, 0.0, 2.0, 4.0, 8.0}) {
    if (p > lo) pts.push_back(p);
  }
  pts.push_back(40.0);
  return integrate_segments(f, pts, 1e-12);
}

CriterionResult criterion_special_functions() {
  CriterionResult r{1, "special-function fidelity", true, false, false, ""};
  double worst_phi2 = 0.0;
  double worst_sym = 0.0;
  for (int i = -100; i <= 100; ++i) {
    const double x = static_cast<double>(i) / 10.0;
    worst_phi2 = std::max(worst_phi2, std::abs(gauss::phi2(x) - phi2_oracle(x)));
    worst_sym = std::max(worst_sym, std::abs(gauss::cdf(x) + gauss::cdf(-x) - 1.0));
  }
  r.pass = worst_phi2 <= 1e-10 && worst_sym <= 1e-14;
  r.details = "max |phi2 - quadrature| = " + fmt(worst_phi2) +
              ", max |Phi(x)+Phi(-x)-1| = " + fmt(worst_sym);
  return r;
}

CriterionResult criterion_c1_table() {
  CriterionResult r{2, "c1 threshold table", true, false, false, ""};
  const std::pair<std::int64_t, double> table[] = {
      {2, 10.1}, {20, 7.0}, {40, 5.5}, {100, 4.0}, {200, 3.0}};
  std::ostringstream details;
  for (const auto& [t_prime, cap] : table) {
    const double c1 = bounds::c1_of(t_prime);
    if (!(c1 <= cap)) r.pass = false;
    details << "c1(" << t_prime << ")=" << fmt(c1) << "<=" << cap << " ";
  }
  r.details = details.str();
  return r;
}

CriterionResult criterion_argmin_gap() {
  CriterionResult r{3, "tuned-level expansion gap", true, false, false, ""};
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  std::ostringstream details;
  for (int e = 3; e <= 8; ++e) {
    std::int64_t t_prime = 1;
    for (int i = 0; i < e; ++i) t_prime *= 10;
    const double b = exploration::argmin_eta_level(t_prime).b;
    const double tp = static_cast<double>(t_prime);
    const double expansion = 2.0 * std::log(tp) - 3.0 * std::log(std::log(tp)) - std::log(kPi);
    const double gap = std::abs(b * b - expansion);
    if (gap > prev + 1e-12) r.pass = false;
    prev = gap;
    last = gap;
    details << "gap(1e" << e << ")=" << fmt(gap) << " ";
  }
  if (!(last <= 0.5)) r.pass = false;
  details << "(requires nonincreasing and gap(1e8) <= 0.5)";
  r.details = details.str();
  return r;
}

CriterionResult criterion_drifted_crossing(const Options& opt, std::int64_t reps) {
  CriterionResult r{4, "drifted square-root crossing bound", true, false, opt.fast, ""};
  std::ostringstream details;
  for (double b : {1.0, 2.0}) {
    for (double gamma : {0.2, 0.5, 1.0}) {
      const auto est = crossing::mc_drifted_crossing(b, gamma, 10000, reps, opt.seed, opt.num_threads);
      const double bound = std::min(1.0, gauss::phi2(-b) / (gamma * gamma));
      const bool ok = est.estimate <= bound + 3.0 * est.std_error;
      if (!ok) r.pass = false;
      details << "(b=" << b << ",g=" << gamma << "): " << fmt(est.estimate) << "<=" << fmt(bound)
              << (ok ? " " : " VIOLATED ");
    }
  }
  r.details = details.str();
  return r;
}

CriterionResult criterion_walk_max(const Options& opt, std::int64_t reps) {
  CriterionResult r{5, "normalized-walk max size bound", true, false, opt.fast, ""};
  std::ostringstream details;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (double b : {2.0, 2.5, 3.0, 3.5}) {
    for (std::int64_t t_prime : {100, 1000, 10000}) {
      const auto est = crossing::mc_max_normalized_walk(b, t_prime, reps, opt.seed, opt.num_threads);
      const double ni = bounds::phi_star_upper(b, t_prime, bounds::PhiStarMethod::kNumericIntegral);
      const double cf = bounds::phi_star_upper(b, t_prime, bounds::PhiStarMethod::kClosedForm);
      if (!(ni <= cf)) r.pass = false;
      const double margin = 3.0 * est.std_error;
      if (!(est.estimate <= ni + margin) || !(est.estimate <= cf + margin)) {
        r.pass = false;
        details << "VIOLATED at (b=" << b << ",T'=" << t_prime << ") est=" << fmt(est.estimate)
                << " ni=" << fmt(ni) << " ";
      }
      worst_margin = std::min(worst_margin, ni + margin - est.estimate);
    }
  }
  details << "min slack over grid = " << fmt(worst_margin);
  r.details = details.str();
  return r;
}

CriterionResult criterion_lai_boundary(const Options& opt, std::int64_t reps) {
  CriterionResult r{6, "slowly-changing boundary c0 cap", true, false, opt.fast, ""};
  std::ostringstream details;
  double c0_at_100 = 0.0;
  double c0_at_10000 = 0.0;
  for (double x : {10.0, 100.0, 1000.0, 10000.0}) {
    const auto est = crossing::mc_lai_boundary(x, 1.0, 200, reps, opt.seed, opt.num_threads);
    const bool ok = est.implied_c0 <= bounds::kC0Cap + 3.0 * est.c0_std_error;
    if (!ok) r.pass = false;
    if (x == 100.0) c0_at_100 = est.implied_c0;
    if (x == 10000.0) c0_at_10000 = est.implied_c0;
    details << "c0(" << x << ")=" << fmt(est.implied_c0) << (ok ? " " : " ABOVE-CAP ");
  }
  if (!(c0_at_10000 < c0_at_100)) {
    r.pass = false;
    details << "decay violated ";
  }
  r.details = details.str();
  return r;
}

sim::BanditInstance two_arm_instance() {
  sim::BanditInstance inst;
  inst.means = {0.0, -1.0};
  inst.stds = {1.0, 1.0};
  inst.sigma = 1.0;
  inst.horizon = 1000;
  return inst;
}

CriterionResult criterion_theorem1_end_to_end(const Options& opt, std::int64_t reps) {
  CriterionResult r{7, "constant-level regret bound end-to-end", true, false, opt.fast, ""};
  const sim::BanditInstance inst = two_arm_instance();
  const auto level = exploration::fixed_level(std::sqrt(2.0 * std::log(951.0)), inst.t_prime());
  policies::PolicySpec spec{policies::ConstantUcb{level}, inst.sigma, inst.horizon};
  const auto agg = sim::run_replications(inst, spec, reps, opt.seed, opt.num_threads);
  const double bound = bounds::theorem1_bound(inst, level).grand_total;
  const double lhs = agg.mean_post_init_regret + 3.0 * agg.std_error;
  r.pass = lhs <= bound;
  r.details = "mean=" + fmt(agg.mean_post_init_regret) + " +3se=" + fmt(lhs) +
              " <= bound=" + fmt(bound);
  return r;
}

CriterionResult criterion_theorem2_end_to_end(const Options& opt, std::int64_t reps) {
  CriterionResult r{8, "sample-size-dependent regret bound end-to-end", true, false, opt.fast, ""};
  const sim::BanditInstance inst = two_arm_instance();
  policies::PolicySpec spec{policies::LaiUcb{}, inst.sigma, inst.horizon};
  const auto agg = sim::run_replications(inst, spec, reps, opt.seed, opt.num_threads);
  const double bound = bounds::theorem2_bound(inst).grand_total;
  const double lhs = agg.mean_post_init_regret + 3.0 * agg.std_error;
  r.pass = lhs <= bound;
  r.details = "mean=" + fmt(agg.mean_post_init_regret) + " +3se=" + fmt(lhs) +
              " <= bound=" + fmt(bound);
  return r;
}

CriterionResult criterion_policy_ordering(const Options& opt, std::int64_t reps) {
  CriterionResult r{9, "policy regret ordering (informational)", true, true, opt.fast, ""};
  const sim::BanditInstance inst = two_arm_instance();
  policies::PolicySpec lai{policies::LaiUcb{}, inst.sigma, inst.horizon};
  policies::PolicySpec constant{
      policies::ConstantUcb{exploration::sqrt_two_log_level(inst.t_prime())}, inst.sigma,
      inst.horizon};
  const auto lai_agg = sim::run_replications(inst, lai, reps, opt.seed, opt.num_threads);
  const auto const_agg = sim::run_replications(inst, constant, reps, opt.seed + 1, opt.num_threads);
  const double margin =
      3.0 * std::sqrt(lai_agg.std_error * lai_agg.std_error +
                      const_agg.std_error * const_agg.std_error);
  r.pass = lai_agg.mean_post_init_regret <= const_agg.mean_post_init_regret + margin;
  r.details = "lai=" + fmt(lai_agg.mean_post_init_regret) +
              " vs constant=" + fmt(const_agg.mean_post_init_regret) + " (margin " + fmt(margin) +
              "); observational check, not a guarantee";
  return r;
}

bool traces_identical(const sim::RegretTrace& a, const sim::RegretTrace& b) {
  return a.arms == b.arms && a.pulls_per_arm == b.pulls_per_arm &&
         a.rewards.size() == b.rewards.size() &&
         std::memcmp(a.rewards.data(), b.rewards.data(), a.rewards.size() * sizeof(double)) == 0 &&
         std::memcmp(a.cum_pseudo_regret.data(), b.cum_pseudo_regret.data(),
                     a.cum_pseudo_regret.size() * sizeof(double)) == 0;
}

bool check_affine_invariance(const policies::Rule& rule_base, const policies::Rule& rule_scaled,
                             double c, double d) {
  constexpr std::size_t kArms = 3;
  constexpr std::int64_t kHorizon = 300;
  policies::PolicySpec base{rule_base, 1.0, kHorizon};
  policies::PolicySpec scaled{rule_scaled, c * 1.0, kHorizon};
  policies::PolicyState sa(base, kArms);
  policies::PolicyState sb(scaled, kArms);
  SplitMix64 rng(987654321u);
  const double arm_shift[kArms] = {0.0, -0.4, -0.9};
  for (std::int64_t t = 0; t < kHorizon; ++t) {
    const std::size_t pick_a = sa.select_arm();
    const std::size_t pick_b = sb.select_arm();
    if (pick_a != pick_b) return false;
    const double reward = arm_shift[pick_a] + rng.next_normal();
    sa.update(pick_a, reward);
    sb.update(pick_b, c * reward + d);
  }
  return true;
}

CriterionResult criterion_property_suite(const Options& opt) {
  CriterionResult r{10, "property suite", true, false, false, ""};
  std::ostringstream details;

  // Determinism: bit-identical reruns, thread count immaterial.
  {
    const sim::BanditInstance inst = two_arm_instance();
    policies::PolicySpec spec{policies::LaiUcb{}, inst.sigma, inst.horizon};
    const auto t1 = sim::run_episode(inst, spec, opt.seed);
    const auto t2 = sim::run_episode(inst, spec, opt.seed);
    const auto a1 = sim::run_replications(inst, spec, 64, opt.seed, 1);
    const auto a2 = sim::run_replications(inst, spec, 64, opt.seed, 2);
    const bool ok = traces_identical(t1, t2) &&
                    a1.mean_post_init_regret == a2.mean_post_init_regret &&
                    a1.std_error == a2.std_error &&
                    a1.mean_regret_curve == a2.mean_regret_curve;
    if (!ok) r.pass = false;
    details << "determinism=" << (ok ? "ok" : "FAIL") << " ";
  }

  // Null instance: every policy accrues exactly zero pseudo-regret.
  {
    sim::BanditInstance null_inst;
    null_inst.means = {0.4, 0.4, 0.4};
    null_inst.stds = {1.0, 1.0, 1.0};
    null_inst.sigma = 1.0;
    null_inst.horizon = 200;
    bool ok = true;
    const std::vector<policies::Rule> rules = {
        policies::ConstantUcb{exploration::sqrt_two_log_level(null_inst.t_prime())},
        policies::LaiUcb{}, policies::Ucb1{2.0}, policies::KlUcbGauss{},
        policies::FollowTheLeader{}};
    for (const auto& rule : rules) {
      policies::PolicySpec spec{rule, null_inst.sigma, null_inst.horizon};
      for (std::uint64_t s = 0; s < 8; ++s) {
        const auto trace = sim::run_episode(null_inst, spec, opt.seed + s);
        if (sim::post_init_regret(trace, null_inst) != 0.0 ||
            trace.cum_pseudo_regret.back() != 0.0) {
          ok = false;
        }
      }
    }
    if (!ok) r.pass = false;
    details << "null-instance=" << (ok ? "ok" : "FAIL") << " ";
  }

  // Pull-count conservation across a batch of episodes.
  {
    const sim::BanditInstance inst = two_arm_instance();
    bool ok = true;
    for (const auto& rule : std::vector<policies::Rule>{
             policies::Ucb1{2.0}, policies::KlUcbGauss{}, policies::FollowTheLeader{}}) {
      policies::PolicySpec spec{rule, inst.sigma, inst.horizon};
      const auto trace = sim::run_episode(inst, spec, opt.seed + 17);
      std::int64_t total = 0;
      for (std::int64_t p : trace.pulls_per_arm) total += p;
      if (total != inst.horizon) ok = false;
    }
    if (!ok) r.pass = false;
    details << "pull-conservation=" << (ok ? "ok" : "FAIL") << " ";
  }

  // Argmax invariance of the scale-aware rules under reward maps r -> c r + d.
  {
    const double c = 2.5;
    const double d = -3.0;
    const auto level = exploration::sqrt_two_log_level(297);
    const bool ok =
        check_affine_invariance(policies::ConstantUcb{level}, policies::ConstantUcb{level}, c, d) &&
        check_affine_invariance(policies::LaiUcb{}, policies::LaiUcb{}, c, d) &&
        check_affine_invariance(policies::KlUcbGauss{}, policies::KlUcbGauss{}, c, d);
    if (!ok) r.pass = false;
    details << "affine-invariance=" << (ok ? "ok" : "FAIL") << " ";
  }

  // cbar stays below its cap on the documented grid.
  {
    double max_val = -1.0;
    for (double b = gauss::kSqrt2; b <= 20.0; b += 1e-3) {
      max_val = std::max(max_val, bounds::cbar(b));
    }
    const bool ok = max_val < 0.3487;
    if (!ok) r.pass = false;
    details << "cbar-max=" << fmt(max_val) << (ok ? "<0.3487 " : " ABOVE ");
  }

  // Stopping-bound algebra: theta t^2 = b t + g_b(theta).
  {
    double worst = 0.0;
    for (double b : {0.5, 1.0, 2.0, 3.0, 5.0}) {
      for (double theta : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double g = crossing::g_b_theta(b, theta);
        const double t = crossing::stopping_sqrt_bound(b, theta);
        worst = std::max(worst, std::abs(theta * t * t - b * t - g));
      }
    }
    const bool ok = worst <= 1e-12;
    if (!ok) r.pass = false;
    details << "stopping-identity-residual=" << fmt(worst);
  }

  r.details = details.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& options, const ResultCallback& on_result) {
  const std::int64_t mc_reps = options.fast ? 10000 : 100000;
  const std::int64_t sim_reps = options.fast ? 1000 : 10000;

  std::vector<CriterionResult> results;
  auto push = [&](CriterionResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };

  push(criterion_special_functions());
  push(criterion_c1_table());
  push(criterion_argmin_gap());
  push(criterion_drifted_crossing(options, mc_reps));
  push(criterion_walk_max(options, mc_reps));
  push(criterion_lai_boundary(options, mc_reps));
  push(criterion_theorem1_end_to_end(options, sim_reps));
  push(criterion_theorem2_end_to_end(options, sim_reps));
  push(criterion_policy_ordering(options, sim_reps));
  push(criterion_property_suite(options));
  return results;
}

bool all_gating_pass(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.informational && !r.pass) return false;
  }
  return true;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "[ ok ]" : "[FAIL]") << " (" << r.id << "/10) " << r.name;
  if (r.informational) os << " [informational]";
  if (r.reduced) os << " [reduced]";
  os << ": " << r.details;
  return os.str();
}

}  // namespace ucb::verify
