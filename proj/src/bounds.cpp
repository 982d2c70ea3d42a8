// Copyright 2026 The Bandit Attack Lab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bandit_lab/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bandit_lab/errors.hpp"

namespace bandit_lab {

namespace {

void validate(const BoundConfig& cfg) {
  if (cfg.num_arms < 2) throw ConfigError("num_arms: need at least 2 arms");
  if (!(cfg.sigma > 0.0)) throw ConfigError("sigma: must be positive");
  if (!(cfg.delta0 >= 0.0)) throw ConfigError("delta0: must be >= 0");
  if (!(cfg.delta > 0.0 && cfg.delta <= 0.5)) {
    throw ConfigError("delta: must lie in (0, 1/2]");
  }
  if (!(cfg.bai_beta > 0.0)) throw ConfigError("bai_beta: must be positive");
}

double log_coefficient(const BoundConfig& cfg) {
  if (cfg.delta0 == 0.0) {
    throw UndefinedBound("delta0 = 0: bounds dividing by delta0^2 are undefined");
  }
  return 9.0 * cfg.sigma * cfg.sigma / (cfg.delta0 * cfg.delta0);
}

void require_horizon(std::uint64_t horizon, const BoundConfig& cfg) {
  if (horizon < 2 * cfg.num_arms) {
    throw ConfigError("horizon: bounds require T >= 2K (T = " +
                      std::to_string(horizon) +
                      ", K = " + std::to_string(cfg.num_arms) + ")");
  }
}

}  // namespace

BoundConfig BoundConfig::make(std::size_t num_arms, double sigma, double delta0,
                              double delta, double bai_beta,
                              std::vector<double> gaps,
                              std::optional<double> stop_ratio_override) {
  BoundConfig cfg;
  cfg.num_arms = num_arms;
  cfg.sigma = sigma;
  cfg.delta0 = delta0;
  cfg.delta = delta;
  cfg.bai_beta = bai_beta;
  cfg.gaps = std::move(gaps);
  validate(cfg);
  cfg.stop_ratio = stop_ratio_override.value_or(bandit_lab::stop_ratio(bai_beta));
  if (!(cfg.stop_ratio > 0.0)) throw ConfigError("stop_ratio: must be positive");
  if (!cfg.gaps.empty() && cfg.gaps.size() != num_arms) {
    throw ConfigError("gaps: expected one entry per arm");
  }
  return cfg;
}

BoundConfig BoundConfig::from_instance(const BanditInstance& instance,
                                       double delta0, double delta,
                                       double bai_beta,
                                       std::optional<double> stop_ratio_override) {
  return make(instance.num_arms(), instance.sigma(), delta0, delta, bai_beta,
              bandit_lab::gaps(instance), stop_ratio_override);
}

double stop_ratio(double bai_beta) {
  if (!(bai_beta > 0.0)) throw ConfigError("bai_beta: must be positive");
  const double r = (2.0 + bai_beta) / bai_beta;
  return r * r;
}

double lemma1_cap(std::uint64_t horizon, const BoundConfig& cfg) {
  require_horizon(horizon, cfg);
  return 2.0 + log_coefficient(cfg) * std::log(static_cast<double>(horizon));
}

double thm1_target_pulls_lb(std::uint64_t horizon, const BoundConfig& cfg) {
  return static_cast<double>(horizon) -
         static_cast<double>(cfg.num_arms - 1) * lemma1_cap(horizon, cfg);
}

double thm1_cost_ub(std::uint64_t horizon, const BoundConfig& cfg) {
  if (cfg.gaps.size() != cfg.num_arms) {
    throw ConfigError("thm1_cost_ub: per-arm gaps are required");
  }
  const double c = lemma1_cap(horizon, cfg);
  // The target's gap is zero, so summing delta0 over K - 1 arms suffices.
  double gap_sum = 0.0;
  for (double g : cfg.gaps) gap_sum += g;
  const double km1 = static_cast<double>(cfg.num_arms - 1);
  const double k = static_cast<double>(cfg.num_arms);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return c * (gap_sum + km1 * cfg.delta0) +
         cfg.sigma * km1 *
             std::sqrt(32.0 * c * std::log(pi2 * k * c * c / (3.0 * cfg.delta)));
}

double cost_order_report(double horizon, const BoundConfig& cfg) {
  double gap_sum = 0.0;
  for (double g : cfg.gaps) gap_sum += g;
  const double log_t = std::log(horizon);
  return gap_sum * log_t +
         cfg.sigma * static_cast<double>(cfg.num_arms) * log_t;
}

double delta0_threshold(const BoundConfig& cfg) {
  return 3.0 * cfg.sigma *
         std::sqrt(static_cast<double>(cfg.num_arms - 1) * (1.0 + cfg.stop_ratio));
}

double f_of_t(std::uint64_t t, const BoundConfig& cfg) {
  require(t >= 1, "f_of_t: t must be >= 1");
  const double coeff =
      (cfg.stop_ratio + 1.0) * static_cast<double>(cfg.num_arms - 1) *
      log_coefficient(cfg);
  return static_cast<double>(t) - coeff * std::log(static_cast<double>(t));
}

double sample_complexity_rhs(const BoundConfig& cfg) {
  return 2.0 * (cfg.stop_ratio + 1.0) * static_cast<double>(cfg.num_arms - 1);
}

std::uint64_t sample_complexity_round(const BoundConfig& cfg) {
  const double threshold = delta0_threshold(cfg);
  if (!(cfg.delta0 > threshold)) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "delta0 = " << cfg.delta0
        << " does not exceed the monotonicity threshold "
           "3*sigma*sqrt((K-1)*(1+stop_ratio)) = "
        << threshold << "; the round condition t - (stop_ratio+1)(K-1)"
           "*9*sigma^2*ln(t)/delta0^2 >= 2(stop_ratio+1)(K-1) has no "
           "guaranteed monotone solution";
    throw ThresholdRefusal(msg.str());
  }
  const double rhs = sample_complexity_rhs(cfg);
  auto meets = [&](std::uint64_t t) { return f_of_t(t, cfg) >= rhs; };

  std::uint64_t hi = 1;
  while (!meets(hi)) {
    require(hi < (std::uint64_t{1} << 62), "sample_complexity_round: overflow");
    hi *= 2;
  }
  if (hi == 1) return 1;
  // Invariant: !meets(lo) && meets(hi).
  std::uint64_t lo = hi / 2;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (meets(mid) ? hi : lo) = mid;
  }
  require(meets(hi) && !meets(hi - 1),
          "sample_complexity_round: postcondition failed");
  return hi;
}

BoundReport make_bound_report(std::uint64_t horizon, const BoundConfig& cfg,
                              bool with_f_table) {
  BoundReport r;
  r.horizon = horizon;
  r.stop_ratio = cfg.stop_ratio;
  r.lemma1_cap = lemma1_cap(horizon, cfg);
  r.thm1_target_pulls_lb = thm1_target_pulls_lb(horizon, cfg);
  r.thm1_cost_ub = thm1_cost_ub(horizon, cfg);
  r.cost_order = cost_order_report(static_cast<double>(horizon), cfg);
  r.delta0_threshold = delta0_threshold(cfg);
  if (cfg.delta0 > r.delta0_threshold) {
    r.sample_complexity_round = sample_complexity_round(cfg);
  }
  if (with_f_table && r.sample_complexity_round) {
    const std::uint64_t t_star = *r.sample_complexity_round;
    for (std::uint64_t t = 1; t < t_star - 1; t *= 2) {
      r.f_values.emplace_back(t, f_of_t(t, cfg));
    }
    if (t_star > 1) r.f_values.emplace_back(t_star - 1, f_of_t(t_star - 1, cfg));
    r.f_values.emplace_back(t_star, f_of_t(t_star, cfg));
  }
  return r;
}

}  // namespace bandit_lab
