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

#include "bandit_lab/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bandit_lab/errors.hpp"

namespace bandit_lab {

std::string_view to_string(RewardFamily family) {
  switch (family) {
    case RewardFamily::kGaussian:
      return "gaussian";
    case RewardFamily::kBernoulli:
      return "bernoulli";
  }
  return "unknown";
}

RewardFamily reward_family_from_string(std::string_view name) {
  if (name == "gaussian") return RewardFamily::kGaussian;
  if (name == "bernoulli") return RewardFamily::kBernoulli;
  throw ConfigError("reward_family must be \"gaussian\" or \"bernoulli\", got \"" +
                    std::string(name) + "\"");
}

BanditInstance::BanditInstance(std::vector<double> means, double sigma,
                               RewardFamily family)
    : BanditInstance(means, sigma, means.empty() ? 0 : means.size() - 1,
                     family) {}

BanditInstance::BanditInstance(std::vector<double> means, double sigma,
                               Arm target, RewardFamily family)
    : means_(std::move(means)), sigma_(sigma), target_(target), family_(family) {
  if (means_.size() < 2) {
    throw ConfigError("instance.means: need at least 2 arms, got " +
                      std::to_string(means_.size()));
  }
  for (double m : means_) {
    if (!std::isfinite(m)) throw ConfigError("instance.means: non-finite mean");
  }
  if (!(sigma_ > 0.0) || !std::isfinite(sigma_)) {
    throw ConfigError("instance.sigma: must be a positive finite number");
  }
  if (target_ >= means_.size()) {
    throw ConfigError("instance.target_arm: out of range");
  }
  if (family_ == RewardFamily::kBernoulli) {
    if (sigma_ != 0.5) {
      throw ConfigError("instance.sigma: bernoulli rewards require sigma = 0.5");
    }
    for (double m : means_) {
      if (m < 0.0 || m > 1.0) {
        throw ConfigError("instance.means: bernoulli means must lie in [0, 1]");
      }
    }
  }
}

Arm BanditInstance::best_arm() const {
  return static_cast<Arm>(std::max_element(means_.begin(), means_.end()) -
                          means_.begin());
}

bool BanditInstance::has_unique_best_arm() const {
  const double top = means_[best_arm()];
  return std::count(means_.begin(), means_.end(), top) == 1;
}

double sample_reward(const BanditInstance& instance, Arm arm, Rng& rng) {
  require(arm < instance.num_arms(), "sample_reward: arm out of range");
  switch (instance.reward_family()) {
    case RewardFamily::kGaussian:
      return instance.mean(arm) + instance.sigma() * rng.normal();
    case RewardFamily::kBernoulli:
      return rng.uniform() < instance.mean(arm) ? 1.0 : 0.0;
  }
  return 0.0;
}

std::vector<double> gaps(const BanditInstance& instance) {
  const double target_mean = instance.mean(instance.target_arm());
  std::vector<double> out(instance.num_arms());
  for (Arm i = 0; i < out.size(); ++i) {
    out[i] = std::max(instance.mean(i) - target_mean, 0.0);
  }
  out[instance.target_arm()] = 0.0;
  return out;
}

}  // namespace bandit_lab
