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

#ifndef BANDIT_LAB_LEARNERS_HPP_
#define BANDIT_LAB_LEARNERS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bandit_lab/core_model.hpp"

namespace bandit_lab {

enum class LearnerVariant { kUcbRegret, kUcbBai };

std::string_view to_string(LearnerVariant variant);
LearnerVariant learner_variant_from_string(std::string_view name);

/// Everything a learner is allowed to see: its own pull counts and the sums
/// of the (post-attack) rewards it observed, plus its hyperparameters.
///
/// Invariant: sum(counts) == round.
struct LearnerState {
  std::uint64_t round = 0;
  std::vector<std::uint64_t> counts;
  std::vector<double> post_sums;
  LearnerVariant variant = LearnerVariant::kUcbRegret;
  double sigma = 1.0;
  double bai_beta = 0.0;
  double stop_ratio = 0.0;

  static LearnerState ucb_regret(std::size_t num_arms, double sigma);
  // stop_ratio defaults to ((2 + beta) / beta)^2.
  static LearnerState ucb_bai(std::size_t num_arms, double sigma, double beta,
                              std::optional<double> stop_ratio_override = {});

  std::size_t num_arms() const { return counts.size(); }
  double empirical_mean(Arm arm) const;
};

struct StopDecision {
  bool stopped = false;
  std::optional<Arm> winner;
};

// sigma * sqrt(2 * alpha * ln(t) / count). Requires count >= 1 and t >= 2.
double confidence_radius(std::uint64_t count, std::uint64_t t, double alpha,
                         double sigma);

// Arm for round t+1 under the regret UCB rule: round-robin for the first K
// rounds, then argmax of mean + 3 sigma sqrt(ln(t+1) / N_i).
Arm ucb_select(const LearnerState& state);

// Arm for round t+1 under the best-arm-identification UCB rule: round-robin
// for the first K rounds, then argmax of
// mean + (1 + beta) * confidence_radius(N_i, t+1, stop_ratio, sigma).
Arm bai_select(const LearnerState& state);

// Dispatch on state.variant.
Arm select_arm(const LearnerState& state);

// Fires when some arm has T_i >= stop_ratio * sum_{j != i} T_j. The winner is
// the arm with the most pulls. Requires round >= K.
StopDecision bai_stop_check(const LearnerState& state);

void observe(LearnerState& state, Arm arm, double reward);

}  // namespace bandit_lab

#endif  // BANDIT_LAB_LEARNERS_HPP_
