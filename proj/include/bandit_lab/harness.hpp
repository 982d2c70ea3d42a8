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

#ifndef BANDIT_LAB_HARNESS_HPP_
#define BANDIT_LAB_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "bandit_lab/attacker.hpp"
#include "bandit_lab/bounds.hpp"
#include "bandit_lab/core_model.hpp"
#include "bandit_lab/learners.hpp"
#include "bandit_lab/rng.hpp"

namespace bandit_lab {

inline constexpr std::uint64_t kFallbackMaxRounds = 1'000'000;

/// One seeded episode: environment, victim learner, optional attacker.
///
/// `horizon` is T for the regret learner (required) and the max-rounds cap
/// for the best-arm-identification learner; leaving it empty for the latter
/// selects 4 * t* when t* is defined and kFallbackMaxRounds otherwise.
/// With `bai_stopping` off the BAI learner runs the full horizon.
struct EpisodeConfig {
  BanditInstance instance;
  LearnerVariant victim = LearnerVariant::kUcbRegret;
  bool attack_enabled = true;
  double delta0 = 0.0;
  double delta = 0.05;
  double bai_beta = 2.0;
  std::optional<double> stop_ratio_override{};
  bool bai_stopping = true;
  std::optional<std::uint64_t> horizon{};
  Seed seed{};

  // Throws ConfigError with the offending field name.
  void validate() const;
  std::uint64_t resolved_horizon() const;
  double resolved_stop_ratio() const;
  BoundConfig bound_config() const;
};

struct RoundRecord {
  std::uint64_t t = 0;  // 1-based round
  Arm arm = 0;
  double pre_reward = 0.0;
  double alpha = 0.0;
  double post_reward = 0.0;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct EpisodeSnapshot {
  std::uint64_t rounds = 0;
  std::vector<std::uint64_t> counts;
  std::vector<double> pre_sums;
  std::vector<double> post_sums;
  std::vector<double> cum_attack;
  double total_cost = 0.0;
  std::optional<std::uint64_t> stop_round;
  std::optional<Arm> winner;

  std::vector<double> pre_means() const;
  std::vector<double> post_means() const;

  friend bool operator==(const EpisodeSnapshot&, const EpisodeSnapshot&) = default;
};

struct EpisodeLog {
  std::vector<RoundRecord> rounds;
  EpisodeSnapshot terminal;
};

/// Steps one episode in the fixed order
///   select -> sample r0 -> attacker update and alpha -> learner observes r0 - alpha.
/// Ends at the horizon or, for a stopping BAI learner, at the first round
/// where the stopping rule fires.
class EpisodeRunner {
 public:
  explicit EpisodeRunner(EpisodeConfig cfg);

  std::optional<RoundRecord> step();
  bool done() const { return done_; }
  EpisodeSnapshot snapshot() const;

  const EpisodeConfig& config() const { return cfg_; }
  const LearnerState& learner() const { return learner_; }
  const AttackerState& attacker() const { return attacker_; }

 private:
  EpisodeConfig cfg_;
  std::uint64_t horizon_;
  Rng rng_;
  LearnerState learner_;
  AttackerState attacker_;
  double total_cost_ = 0.0;
  std::optional<std::uint64_t> stop_round_;
  std::optional<Arm> winner_;
  bool done_ = false;
};

// Tracks the concentration event
//   for all i and all t > K: |mu0_i(t) - mu_i| < beta(N_i(t))
// online from round records. All arms are checked at t = K + 1; after that
// only the pulled arm can change.
class EventEMonitor {
 public:
  EventEMonitor(const BanditInstance& instance, double delta);
  void update(const RoundRecord& rec);
  bool held() const { return !first_violation_; }
  std::optional<std::uint64_t> first_violation() const { return first_violation_; }

 private:
  bool violates(Arm arm) const;

  const BanditInstance* instance_;
  double delta_;
  std::vector<std::uint64_t> counts_;
  std::vector<double> pre_sums_;
  std::optional<std::uint64_t> first_violation_;
};

// Counts (i, t) pairs, i != target and t >= 2K, with
// N_i(t) > min(N_target(t), cap). The cap is 2 + (9 sigma^2/delta0^2) ln T
// for the regret learner and uses the running round t for the BAI learner.
// With delta0 = 0 the cap is infinite and only N_i <= N_target is checked.
class Lemma1Monitor {
 public:
  explicit Lemma1Monitor(const EpisodeConfig& cfg);
  void update(const RoundRecord& rec);
  std::uint64_t violations() const { return violations_; }

 private:
  double cap_at(std::uint64_t t) const;

  Arm target_;
  bool running_cap_;
  double log_coefficient_;
  double fixed_cap_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t violations_ = 0;
};

bool check_event_E(const EpisodeLog& log, const BanditInstance& instance,
                   double delta);
std::uint64_t check_lemma1(const EpisodeLog& log, const EpisodeConfig& cfg);

// Every suboptimal arm has T_i <= stop_ratio * T_best. Empty when the
// instance has no unique best arm.
std::optional<bool> ratio_bound_holds(const std::vector<std::uint64_t>& counts,
                                      const BanditInstance& instance,
                                      double stop_ratio);

struct TrialSummary {
  Seed seed{};
  std::uint64_t rounds = 0;
  std::uint64_t target_pulls = 0;
  std::uint64_t max_nontarget_pulls = 0;
  double total_cost = 0.0;
  bool event_e_held = false;
  std::uint64_t lemma1_violations = 0;
  std::optional<std::uint64_t> stop_round;
  std::optional<Arm> winner;
  std::optional<bool> winner_is_target;
  std::optional<bool> ratio_bound_held;

  friend bool operator==(const TrialSummary&, const TrialSummary&) = default;
};

struct EpisodeOutcome {
  EpisodeSnapshot snapshot;
  TrialSummary summary;
};

using RoundCallback = std::function<void(const RoundRecord&)>;

// Runs to completion, feeding each record to `on_round` (if set) and to the
// event/lemma monitors. Memory use is O(K) regardless of horizon.
EpisodeOutcome run_streaming(const EpisodeConfig& cfg,
                             const RoundCallback& on_round = {});

EpisodeLog run_episode(const EpisodeConfig& cfg);

TrialSummary run_trial(const EpisodeConfig& cfg);

// Rebuilds the terminal snapshot from per-round records alone (the stop
// decision is re-evaluated on the replayed counts).
EpisodeSnapshot replay_snapshot(const EpisodeLog& log, const EpisodeConfig& cfg);

}  // namespace bandit_lab

#endif  // BANDIT_LAB_HARNESS_HPP_
