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

#ifndef BANDIT_LAB_BOUNDS_HPP_
#define BANDIT_LAB_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bandit_lab/core_model.hpp"

namespace bandit_lab {

/// Parameters shared by the closed-form bounds of the attack analysis.
///
/// `gaps` holds max(mu_i - mu_target, 0) for every arm (the target's entry is
/// 0) and is only needed by the attack-cost bound. `stop_ratio` is derived
/// from `bai_beta` unless explicitly overridden.
struct BoundConfig {
  std::size_t num_arms = 2;
  double sigma = 1.0;
  double delta0 = 0.0;
  double delta = 0.05;
  double bai_beta = 2.0;
  double stop_ratio = 4.0;
  std::vector<double> gaps;

  static BoundConfig make(std::size_t num_arms, double sigma, double delta0,
                          double delta, double bai_beta,
                          std::vector<double> gaps = {},
                          std::optional<double> stop_ratio_override = {});
  static BoundConfig from_instance(const BanditInstance& instance,
                                   double delta0, double delta, double bai_beta,
                                   std::optional<double> stop_ratio_override = {});
};

struct BoundReport {
  std::uint64_t horizon = 0;
  double stop_ratio = 0.0;
  double lemma1_cap = 0.0;
  double thm1_target_pulls_lb = 0.0;
  double thm1_cost_ub = 0.0;
  double cost_order = 0.0;
  double delta0_threshold = 0.0;
  // Empty when delta0 does not exceed the threshold.
  std::optional<std::uint64_t> sample_complexity_round;
  std::vector<std::pair<std::uint64_t, double>> f_values;
};

// ((2 + beta) / beta)^2; always > 1.
double stop_ratio(double bai_beta);

// Per-arm pull cap for non-target arms: 2 + (9 sigma^2 / delta0^2) ln T.
// Requires T >= 2K; throws UndefinedBound for delta0 == 0.
double lemma1_cap(std::uint64_t horizon, const BoundConfig& cfg);

// Rounds on which the target is guaranteed to be pulled:
// T - (K - 1) * lemma1_cap(T).
double thm1_target_pulls_lb(std::uint64_t horizon, const BoundConfig& cfg);

// Cumulative attack cost bound with c = lemma1_cap(T):
//   c * sum_{i != target}(gap_i + delta0)
//   + sigma (K - 1) sqrt(32 c ln(pi^2 K c^2 / (3 delta))).
double thm1_cost_ub(std::uint64_t horizon, const BoundConfig& cfg);

// Dominant-order attack cost, sum gap_i ln T + sigma K ln T. Display only.
double cost_order_report(double horizon, const BoundConfig& cfg);

// Smallest delta0 for which f is increasing on t >= 1:
// 3 sigma sqrt((K - 1)(1 + stop_ratio)).
double delta0_threshold(const BoundConfig& cfg);

// f(t) = t - (stop_ratio + 1)(K - 1) * 9 sigma^2 ln t / delta0^2.
double f_of_t(std::uint64_t t, const BoundConfig& cfg);

// Right-hand side of the round condition: 2 (stop_ratio + 1)(K - 1).
double sample_complexity_rhs(const BoundConfig& cfg);

// Smallest integer t with f(t) >= sample_complexity_rhs(cfg), by doubling then
// bisection. Throws ThresholdRefusal unless delta0 > delta0_threshold(cfg).
std::uint64_t sample_complexity_round(const BoundConfig& cfg);

// Every bound evaluated at `horizon`. Pull and cost bounds require
// horizon >= 2K and delta0 > 0; sample_complexity_round is left empty below
// the threshold. With `with_f_table`, f is tabulated at powers of two up to
// t* (plus t* - 1 and t*).
BoundReport make_bound_report(std::uint64_t horizon, const BoundConfig& cfg,
                              bool with_f_table = false);

}  // namespace bandit_lab

#endif  // BANDIT_LAB_BOUNDS_HPP_
