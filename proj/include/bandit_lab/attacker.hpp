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

#ifndef BANDIT_LAB_ATTACKER_HPP_
#define BANDIT_LAB_ATTACKER_HPP_

#include <cstdint>
#include <vector>

#include "bandit_lab/core_model.hpp"

namespace bandit_lab {

// High-probability width used by the attacker:
//   sqrt((2 sigma^2 / N) ln(pi^2 K N^2 / (3 delta))).
// Requires N >= 1, K >= 2, sigma > 0; delta outside (0, 1/2] is a ConfigError.
double beta_width(std::uint64_t count, std::size_t num_arms, double sigma,
                  double delta);

/// Attacker-side bookkeeping. The attacker never sees true means; it only
/// tracks pre-attack reward sums, its own cumulative perturbation per arm
/// and pull counts.
///
/// `post_sums` mirrors the learner's accumulation of r0 - alpha, in the same
/// order, so it is bit-identical to the learner's sums. Mathematically
/// post_sums == pre_sums - cum_attack; in floating point the two routes
/// agree to rounding.
struct AttackerState {
  std::vector<double> pre_sums;
  std::vector<double> post_sums;
  std::vector<double> cum_attack;
  std::vector<std::uint64_t> counts;
  double delta0 = 0.0;
  double delta = 0.05;
  double sigma = 1.0;
  Arm target = 0;

  AttackerState(std::size_t num_arms, Arm target, double sigma, double delta0,
                double delta);

  std::size_t num_arms() const { return counts.size(); }
  double pre_mean(Arm arm) const;
  // Post-attack mean as the learner sees it.
  double post_mean(Arm arm) const;
  // Right-hand side of the attack condition:
  // post_mean(target) - 2 beta(N_target) - delta0.
  double attack_threshold() const;
};

struct AttackOutcome {
  double alpha = 0.0;
  bool attacked = false;
};

// Adds this round's pull to the pre-attack statistics.
void record_pull(AttackerState& state, Arm arm, double pre_reward);

// Smallest nonnegative alpha with post_mean(arm) <= attack_threshold():
//   [N_i mu0_i - sum_prev alpha_i - N_i (mu_target - 2 beta(N_target) - delta0)]_+
// `state` must already include this round's pull (record_pull first).
// Zero for the target arm and for rounds t <= K.
AttackOutcome compute_attack(const AttackerState& state, Arm arm,
                             std::uint64_t round);

// Books the perturbation; the learner then receives pre_reward - alpha.
void record_attack(AttackerState& state, Arm arm, double pre_reward,
                   double alpha);

// record_pull, compute_attack, record_attack for one round.
AttackOutcome attack_round(AttackerState& state, Arm arm, double pre_reward,
                           std::uint64_t round);

}  // namespace bandit_lab

#endif  // BANDIT_LAB_ATTACKER_HPP_
