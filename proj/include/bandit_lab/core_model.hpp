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

#ifndef BANDIT_LAB_CORE_MODEL_HPP_
#define BANDIT_LAB_CORE_MODEL_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "bandit_lab/rng.hpp"

namespace bandit_lab {

// Arms are 0-based inside the library. File formats and the CLI use the
// 1-based numbering (arm K is the last arm).
using Arm = std::size_t;

enum class RewardFamily { kGaussian, kBernoulli };

std::string_view to_string(RewardFamily family);
RewardFamily reward_family_from_string(std::string_view name);

/// A stochastic K-armed bandit with sigma^2-sub-Gaussian rewards.
///
/// Immutable after construction; safe to share between concurrent trials.
/// The target arm defaults to the last arm. Bernoulli instances require
/// means in [0, 1] and sigma = 1/2.
class BanditInstance {
 public:
  BanditInstance(std::vector<double> means, double sigma,
                 RewardFamily family = RewardFamily::kGaussian);
  BanditInstance(std::vector<double> means, double sigma, Arm target,
                 RewardFamily family);

  std::size_t num_arms() const { return means_.size(); }
  const std::vector<double>& means() const { return means_; }
  double mean(Arm arm) const { return means_.at(arm); }
  double sigma() const { return sigma_; }
  Arm target_arm() const { return target_; }
  RewardFamily reward_family() const { return family_; }

  // Highest-mean arm, lowest index on ties.
  Arm best_arm() const;
  bool has_unique_best_arm() const;

 private:
  std::vector<double> means_;
  double sigma_;
  Arm target_;
  RewardFamily family_;
};

// Pre-attack reward r0_t for one pull of `arm`.
double sample_reward(const BanditInstance& instance, Arm arm, Rng& rng);

// Per-arm gaps max(mu_i - mu_target, 0); the target's own gap is 0.
std::vector<double> gaps(const BanditInstance& instance);

}  // namespace bandit_lab

#endif  // BANDIT_LAB_CORE_MODEL_HPP_
