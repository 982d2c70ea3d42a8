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

#include "bandit_lab/learners.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bandit_lab/bounds.hpp"
#include "bandit_lab/errors.hpp"

namespace bandit_lab {

std::string_view to_string(LearnerVariant variant) {
  switch (variant) {
    case LearnerVariant::kUcbRegret:
      return "ucb_regret";
    case LearnerVariant::kUcbBai:
      return "ucb_bai";
  }
  return "unknown";
}

LearnerVariant learner_variant_from_string(std::string_view name) {
  if (name == "ucb_regret") return LearnerVariant::kUcbRegret;
  if (name == "ucb_bai") return LearnerVariant::kUcbBai;
  throw ConfigError("victim must be \"ucb_regret\" or \"ucb_bai\", got \"" +
                    std::string(name) + "\"");
}

LearnerState LearnerState::ucb_regret(std::size_t num_arms, double sigma) {
  LearnerState s;
  s.counts.assign(num_arms, 0);
  s.post_sums.assign(num_arms, 0.0);
  s.variant = LearnerVariant::kUcbRegret;
  s.sigma = sigma;
  return s;
}

LearnerState LearnerState::ucb_bai(std::size_t num_arms, double sigma,
                                   double beta,
                                   std::optional<double> stop_ratio_override) {
  LearnerState s;
  s.counts.assign(num_arms, 0);
  s.post_sums.assign(num_arms, 0.0);
  s.variant = LearnerVariant::kUcbBai;
  s.sigma = sigma;
  s.bai_beta = beta;
  s.stop_ratio = bandit_lab::stop_ratio(beta);
  if (stop_ratio_override) {
    if (!(*stop_ratio_override > 0.0)) {
      throw ConfigError("stop_ratio: override must be positive");
    }
    s.stop_ratio = *stop_ratio_override;
  }
  return s;
}

double LearnerState::empirical_mean(Arm arm) const {
  require(counts.at(arm) > 0, "empirical_mean: arm has not been pulled");
  return post_sums[arm] / static_cast<double>(counts[arm]);
}

double confidence_radius(std::uint64_t count, std::uint64_t t, double alpha,
                         double sigma) {
  require(count >= 1, "confidence_radius: count must be >= 1");
  require(t >= 2, "confidence_radius: t must be >= 2");
  return sigma * std::sqrt(2.0 * alpha * std::log(static_cast<double>(t)) /
                           static_cast<double>(count));
}

namespace {

// Strict '>' keeps the lowest index on ties.
template <typename Index>
Arm argmax_index(const LearnerState& state, Index index) {
  Arm best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (Arm i = 0; i < state.num_arms(); ++i) {
    const double v = index(i);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  return best;
}

}  // namespace

Arm ucb_select(const LearnerState& state) {
  require(state.variant == LearnerVariant::kUcbRegret,
          "ucb_select: learner is not ucb_regret");
  if (state.round < state.num_arms()) return static_cast<Arm>(state.round);
  const double log_t = std::log(static_cast<double>(state.round + 1));
  const double scale = 3.0 * state.sigma;
  return argmax_index(state, [&](Arm i) {
    const double n = static_cast<double>(state.counts[i]);
    return state.post_sums[i] / n + scale * std::sqrt(log_t / n);
  });
}

Arm bai_select(const LearnerState& state) {
  require(state.variant == LearnerVariant::kUcbBai,
          "bai_select: learner is not ucb_bai");
  if (state.round < state.num_arms()) return static_cast<Arm>(state.round);
  const double inflation = 1.0 + state.bai_beta;
  const std::uint64_t t = state.round + 1;
  return argmax_index(state, [&](Arm i) {
    return state.post_sums[i] / static_cast<double>(state.counts[i]) +
           inflation *
               confidence_radius(state.counts[i], t, state.stop_ratio,
                                 state.sigma);
  });
}

Arm select_arm(const LearnerState& state) {
  return state.variant == LearnerVariant::kUcbRegret ? ucb_select(state)
                                                     : bai_select(state);
}

StopDecision bai_stop_check(const LearnerState& state) {
  require(state.variant == LearnerVariant::kUcbBai,
          "bai_stop_check: learner is not ucb_bai");
  require(state.round >= state.num_arms(),
          "bai_stop_check: arms not yet initialized");
  const std::uint64_t total =
      std::accumulate(state.counts.begin(), state.counts.end(),
                      std::uint64_t{0});
  StopDecision decision;
  std::size_t satisfied = 0;
  for (Arm i = 0; i < state.num_arms(); ++i) {
    const double own = static_cast<double>(state.counts[i]);
    const double rest = static_cast<double>(total - state.counts[i]);
    if (own >= state.stop_ratio * rest) {
      ++satisfied;
      if (!decision.winner || state.counts[i] > state.counts[*decision.winner]) {
        decision.winner = i;
      }
    }
  }
  // With ratio exactly 1 and K = 2, equal counts satisfy the rule for both
  // arms; any ratio above 1 admits at most one.
  if (state.stop_ratio > 1.0) {
    require(satisfied <= 1, "bai_stop_check: more than one arm satisfies the rule");
  }
  decision.stopped = decision.winner.has_value();
  return decision;
}

void observe(LearnerState& state, Arm arm, double reward) {
  require(arm < state.num_arms(), "observe: arm out of range");
  ++state.counts[arm];
  state.post_sums[arm] += reward;
  ++state.round;
}

}  // namespace bandit_lab
