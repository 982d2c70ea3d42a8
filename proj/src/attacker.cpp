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

#include "bandit_lab/attacker.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bandit_lab/errors.hpp"

namespace bandit_lab {

double beta_width(std::uint64_t count, std::size_t num_arms, double sigma,
                  double delta) {
  if (!(delta > 0.0 && delta <= 0.5)) {
    throw ConfigError("delta: must lie in (0, 1/2]");
  }
  require(count >= 1, "beta_width: count must be >= 1");
  require(num_arms >= 2, "beta_width: need at least 2 arms");
  require(sigma > 0.0, "beta_width: sigma must be positive");
  const double n = static_cast<double>(count);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return std::sqrt(2.0 * sigma * sigma / n *
                   std::log(pi2 * static_cast<double>(num_arms) * n * n /
                            (3.0 * delta)));
}

AttackerState::AttackerState(std::size_t num_arms, Arm target_arm,
                             double sigma_, double delta0_, double delta_)
    : pre_sums(num_arms, 0.0),
      post_sums(num_arms, 0.0),
      cum_attack(num_arms, 0.0),
      counts(num_arms, 0),
      delta0(delta0_),
      delta(delta_),
      sigma(sigma_),
      target(target_arm) {
  if (num_arms < 2) throw ConfigError("attacker: need at least 2 arms");
  if (target >= num_arms) throw ConfigError("attacker: target out of range");
  if (!(delta0 >= 0.0)) throw ConfigError("delta0: must be >= 0");
  if (!(delta > 0.0 && delta <= 0.5)) {
    throw ConfigError("delta: must lie in (0, 1/2]");
  }
}

double AttackerState::pre_mean(Arm arm) const {
  require(counts.at(arm) > 0, "pre_mean: arm has not been pulled");
  return pre_sums[arm] / static_cast<double>(counts[arm]);
}

double AttackerState::post_mean(Arm arm) const {
  require(counts.at(arm) > 0, "post_mean: arm has not been pulled");
  return post_sums[arm] / static_cast<double>(counts[arm]);
}

double AttackerState::attack_threshold() const {
  require(counts[target] > 0, "attack_threshold: target arm has no pulls");
  return post_mean(target) -
         2.0 * beta_width(counts[target], num_arms(), sigma, delta) - delta0;
}

void record_pull(AttackerState& state, Arm arm, double pre_reward) {
  require(arm < state.num_arms(), "record_pull: arm out of range");
  state.pre_sums[arm] += pre_reward;
  ++state.counts[arm];
}

AttackOutcome compute_attack(const AttackerState& state, Arm arm,
                             std::uint64_t round) {
  require(arm < state.num_arms(), "compute_attack: arm out of range");
  if (arm == state.target || round <= state.num_arms()) return {};
  require(state.counts[arm] > 0, "compute_attack: current pull not recorded");
  const double n = static_cast<double>(state.counts[arm]);
  const double alpha = state.pre_sums[arm] - state.cum_attack[arm] -
                       n * state.attack_threshold();
  if (alpha > 0.0) return {alpha, true};
  return {};
}

void record_attack(AttackerState& state, Arm arm, double pre_reward,
                   double alpha) {
  require(arm < state.num_arms(), "record_attack: arm out of range");
  require(alpha >= 0.0, "record_attack: negative perturbation");
  state.cum_attack[arm] += alpha;
  state.post_sums[arm] += pre_reward - alpha;
}

AttackOutcome attack_round(AttackerState& state, Arm arm, double pre_reward,
                           std::uint64_t round) {
  record_pull(state, arm, pre_reward);
  const AttackOutcome out = compute_attack(state, arm, round);
  record_attack(state, arm, pre_reward, out.alpha);
  return out;
}

}  // namespace bandit_lab
