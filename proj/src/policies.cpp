#include "ucb/policies.hpp"

#include <cmath>
#include <stdexcept>

namespace ucb::policies {

namespace {

void require_pulls(std::int64_t pulls) {
  if (pulls < 1) throw std::invalid_argument("policies: index undefined before the arm is pulled");
}

}  // namespace

double index_constant(double mean, std::int64_t pulls, double sigma, double b) {
  require_pulls(pulls);
  if (!(sigma > 0.0)) throw std::invalid_argument("policies::index_constant: sigma must be positive");
  if (!(b >= 0.0)) throw std::invalid_argument("policies::index_constant: b must be nonnegative");
  return mean + sigma * b / std::sqrt(static_cast<double>(pulls));
}

double index_lai(double mean, std::int64_t pulls, double sigma, std::int64_t t_prime) {
  require_pulls(pulls);
  if (!(sigma > 0.0)) throw std::invalid_argument("policies::index_lai: sigma must be positive");
  if (t_prime < 1) throw std::invalid_argument("policies::index_lai: requires T' >= 1");
  const double n = static_cast<double>(pulls);
  return mean + sigma * std::sqrt(2.0 * exploration::log_plus(static_cast<double>(t_prime) / n) / n);
}

double index_ucb1(double mean, std::int64_t pulls, double t, double alpha) {
  require_pulls(pulls);
  if (!(t >= 2.0)) throw std::invalid_argument("policies::index_ucb1: requires t >= 2");
  if (!(alpha > 0.0)) throw std::invalid_argument("policies::index_ucb1: alpha must be positive");
  return mean + std::sqrt(alpha * std::log(t) / static_cast<double>(pulls));
}

double index_klucb_gauss(double mean, std::int64_t pulls, double t, double sigma) {
  require_pulls(pulls);
  if (!(t >= 3.0)) throw std::invalid_argument("policies::index_klucb_gauss: requires t >= 3");
  if (!(sigma > 0.0)) throw std::invalid_argument("policies::index_klucb_gauss: sigma must be positive");
  // sup of the KL ball of radius f(t)/n around the sample mean, f(t) = log t + 3 log log t.
  const double f = std::log(t) + 3.0 * std::log(std::log(t));
  return mean + sigma * std::sqrt(2.0 * f / static_cast<double>(pulls));
}

PolicyState::PolicyState(PolicySpec spec, std::size_t num_arms)
    : spec_(std::move(spec)), arms_(num_arms) {
  if (num_arms < 2) throw std::invalid_argument("PolicyState: requires at least 2 arms");
  if (!(spec_.sigma > 0.0) || !std::isfinite(spec_.sigma)) {
    throw std::invalid_argument("PolicyState: sigma must be positive");
  }
  if (spec_.horizon < static_cast<std::int64_t>(num_arms)) {
    throw std::invalid_argument("PolicyState: horizon must cover the initialization round");
  }
  if (const auto* c = std::get_if<ConstantUcb>(&spec_.rule)) {
    if (c->level.horizon_after_init != t_prime()) {
      throw std::invalid_argument("PolicyState: exploration level was built for a different T'");
    }
  }
}

double PolicyState::index_of(std::size_t arm, double t_next) const {
  const ArmStatistics& s = arms_[arm];
  const double sigma = spec_.sigma;
  return std::visit(
      [&](const auto& rule) -> double {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, ConstantUcb>) {
          return index_constant(s.mean, s.pulls, sigma, rule.level.b);
        } else if constexpr (std::is_same_v<R, LaiUcb>) {
          return index_lai(s.mean, s.pulls, sigma, t_prime());
        } else if constexpr (std::is_same_v<R, Ucb1>) {
          return index_ucb1(s.mean, s.pulls, t_next, rule.alpha);
        } else if constexpr (std::is_same_v<R, KlUcbGauss>) {
          return index_klucb_gauss(s.mean, s.pulls, t_next, sigma);
        } else {
          return s.mean;
        }
      },
      spec_.rule);
}

std::size_t PolicyState::select_arm() const {
  if (time_ >= spec_.horizon) throw std::logic_error("PolicyState::select_arm: horizon exhausted");
  const auto k = static_cast<std::int64_t>(arms_.size());
  if (time_ < k) return static_cast<std::size_t>(time_);
  const double t_next = static_cast<double>(time_ + 1);
  std::size_t best = 0;
  double best_index = index_of(0, t_next);
  for (std::size_t a = 1; a < arms_.size(); ++a) {
    const double idx = index_of(a, t_next);
    if (idx > best_index) {
      best = a;
      best_index = idx;
    }
  }
  return best;
}

void PolicyState::update(std::size_t arm, double reward) {
  if (arm >= arms_.size()) throw std::invalid_argument("PolicyState::update: arm out of range");
  if (time_ >= spec_.horizon) throw std::logic_error("PolicyState::update: horizon exhausted");
  ArmStatistics& s = arms_[arm];
  s.pulls += 1;
  s.sum += reward;
  s.mean += (reward - s.mean) / static_cast<double>(s.pulls);
  time_ += 1;
}

}  // namespace ucb::policies
