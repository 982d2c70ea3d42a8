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

#include <cmath>
#include <numeric>

#include "doctest.h"

#include "bandit_lab/core_model.hpp"
#include "bandit_lab/errors.hpp"

using namespace bandit_lab;

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(BanditInstance({0.5}, 0.1), ConfigError);
  CHECK_THROWS_AS(BanditInstance({0.5, 0.4}, 0.0), ConfigError);
  CHECK_THROWS_AS(BanditInstance({0.5, 0.4}, -1.0), ConfigError);
  CHECK_THROWS_AS(BanditInstance({0.5, 0.4}, 0.1, 2, RewardFamily::kGaussian),
                  ConfigError);
  CHECK_THROWS_AS(BanditInstance({0.5, 0.4}, 0.1, RewardFamily::kBernoulli),
                  ConfigError);
  CHECK_THROWS_AS(BanditInstance({1.5, 0.4}, 0.5, RewardFamily::kBernoulli),
                  ConfigError);
  CHECK_NOTHROW(BanditInstance({1.0, 0.0}, 0.5, RewardFamily::kBernoulli));

  const BanditInstance inst({0.9, 0.8, 0.7}, 0.1);
  CHECK(inst.num_arms() == 3);
  CHECK(inst.target_arm() == 2);
  CHECK(inst.best_arm() == 0);
  CHECK(inst.has_unique_best_arm());
  CHECK_FALSE(BanditInstance({0.9, 0.9, 0.1}, 0.1).has_unique_best_arm());
}

TEST_CASE("reward family names") {
  CHECK(reward_family_from_string("gaussian") == RewardFamily::kGaussian);
  CHECK(reward_family_from_string("bernoulli") == RewardFamily::kBernoulli);
  CHECK_THROWS_AS(reward_family_from_string("cauchy"), ConfigError);
}

TEST_CASE("sample_reward is deterministic per seed") {
  const BanditInstance inst({0.5, 0.2}, 0.1);
  Rng a(Seed{42}), b(Seed{42}), c(Seed{43});
  const double ra = sample_reward(inst, 0, a);
  CHECK(ra == sample_reward(inst, 0, b));
  CHECK(ra != sample_reward(inst, 0, c));
  CHECK_THROWS_AS(sample_reward(inst, 2, a), ContractViolation);
}

TEST_CASE("degenerate bernoulli arms") {
  const BanditInstance inst({1.0, 0.0}, 0.5, RewardFamily::kBernoulli);
  Rng rng(Seed{7});
  for (int i = 0; i < 1000; ++i) {
    CHECK(sample_reward(inst, 0, rng) == 1.0);
    CHECK(sample_reward(inst, 1, rng) == 0.0);
  }
}

TEST_CASE("bernoulli frequency") {
  const BanditInstance inst({0.3, 0.7}, 0.5, RewardFamily::kBernoulli);
  Rng rng(Seed{11});
  double sum = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) sum += sample_reward(inst, 0, rng);
  // 5 standard errors of a Bernoulli(0.3) mean.
  CHECK(std::abs(sum / n - 0.3) < 5 * std::sqrt(0.21 / n));
}

TEST_CASE("gaussian law of large numbers") {
  const BanditInstance inst({0.9, 0.5, -2.0}, 0.1);
  for (Arm arm = 0; arm < inst.num_arms(); ++arm) {
    Rng rng(Seed{2024 + arm});
    double sum = 0;
    const int n = 1'000'000;
    for (int i = 0; i < n; ++i) sum += sample_reward(inst, arm, rng);
    CHECK(std::abs(sum / n - inst.mean(arm)) <= 5 * inst.sigma() / 1000);
  }
}

TEST_CASE("normal variates have unit variance") {
  Rng rng(Seed{5});
  double s = 0, s2 = 0;
  const int n = 400000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  const double mean = s / n;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(s2 / n - mean * mean - 1.0) < 0.01);
}

TEST_CASE("gaps") {
  auto g = gaps(BanditInstance({0.9, 0.5}, 0.1));
  CHECK(g == std::vector<double>{0.9 - 0.5, 0.0});
  g = gaps(BanditInstance({0.2, 0.5}, 0.1));
  CHECK(g == std::vector<double>{0.0, 0.0});
  g = gaps(BanditInstance({1.0, 0.7, 0.4}, 0.1));
  CHECK(g[0] == doctest::Approx(0.6));
  CHECK(g[1] == doctest::Approx(0.3));
  CHECK(g[2] == 0.0);
  // Non-last target.
  g = gaps(BanditInstance({0.1, 0.7, 0.4}, 0.1, 0, RewardFamily::kGaussian));
  CHECK(g[0] == 0.0);
  CHECK(g[1] == doctest::Approx(0.6));
}

TEST_CASE("gaps are shift invariant") {
  Rng rng(Seed{99});
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> means(2 + rep % 6);
    for (double& m : means) m = std::round(rng.uniform() * 64) / 64;
    const double shift = std::round((rng.uniform() - 0.5) * 16) / 4;
    std::vector<double> shifted = means;
    for (double& m : shifted) m += shift;
    const auto a = gaps(BanditInstance(means, 0.1));
    const auto b = gaps(BanditInstance(shifted, 0.1));
    // Dyadic values keep the subtraction exact.
    CHECK(a == b);
  }
}

TEST_CASE("trial seeds are distinct and reproducible") {
  CHECK(trial_seed(Seed{1}, 0) == trial_seed(Seed{1}, 0));
  CHECK_FALSE(trial_seed(Seed{1}, 0) == trial_seed(Seed{1}, 1));
  CHECK_FALSE(trial_seed(Seed{1}, 0) == trial_seed(Seed{2}, 0));
  // SplitMix64 reference value for input 0.
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
}
