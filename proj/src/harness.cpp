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

#include "bandit_lab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bandit_lab/errors.hpp"

namespace bandit_lab {

void EpisodeConfig::validate() const {
  const std::size_t k = instance.num_arms();
  if (!(delta0 >= 0.0) || !std::isfinite(delta0)) {
    throw ConfigError("delta0: must be a finite number >= 0");
  }
  if (!(delta > 0.0 && delta <= 0.5)) {
    throw ConfigError("delta: must lie in (0, 1/2]");
  }
  if (!(bai_beta > 0.0) || !std::isfinite(bai_beta)) {
    throw ConfigError("bai_beta: must be a positive finite number");
  }
  if (stop_ratio_override && !(*stop_ratio_override > 0.0)) {
    throw ConfigError("stop_ratio: must be positive");
  }
  if (victim == LearnerVariant::kUcbRegret && !horizon) {
    throw ConfigError("horizon: required for the ucb_regret victim");
  }
  if (horizon && *horizon < 1) throw ConfigError("horizon: must be >= 1");
  if (victim == LearnerVariant::kUcbRegret && attack_enabled &&
      *horizon < 2 * k) {
    throw ConfigError("horizon: attacked ucb_regret runs need T >= 2K (T = " +
                      std::to_string(*horizon) + ", K = " + std::to_string(k) +
                      ")");
  }
}

double EpisodeConfig::resolved_stop_ratio() const {
  return stop_ratio_override.value_or(stop_ratio(bai_beta));
}

BoundConfig EpisodeConfig::bound_config() const {
  return BoundConfig::from_instance(instance, delta0, delta, bai_beta,
                                    stop_ratio_override);
}

std::uint64_t EpisodeConfig::resolved_horizon() const {
  if (horizon) return *horizon;
  const BoundConfig bc = bound_config();
  if (delta0 > delta0_threshold(bc)) return 4 * sample_complexity_round(bc);
  return kFallbackMaxRounds;
}

std::vector<double> EpisodeSnapshot::pre_means() const {
  std::vector<double> out(counts.size(), 0.0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) out[i] = pre_sums[i] / static_cast<double>(counts[i]);
  }
  return out;
}

std::vector<double> EpisodeSnapshot::post_means() const {
  std::vector<double> out(counts.size(), 0.0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) out[i] = post_sums[i] / static_cast<double>(counts[i]);
  }
  return out;
}

namespace {

LearnerState make_learner(const EpisodeConfig& cfg) {
  const auto& inst = cfg.instance;
  if (cfg.victim == LearnerVariant::kUcbRegret) {
    return LearnerState::ucb_regret(inst.num_arms(), inst.sigma());
  }
  return LearnerState::ucb_bai(inst.num_arms(), inst.sigma(), cfg.bai_beta,
                               cfg.stop_ratio_override);
}

EpisodeConfig validated(EpisodeConfig cfg) {
  cfg.validate();
  return cfg;
}

}  // namespace

EpisodeRunner::EpisodeRunner(EpisodeConfig cfg)
    : cfg_(validated(std::move(cfg))),
      horizon_(cfg_.resolved_horizon()),
      rng_(cfg_.seed),
      learner_(make_learner(cfg_)),
      attacker_(cfg_.instance.num_arms(), cfg_.instance.target_arm(),
                cfg_.instance.sigma(), cfg_.delta0, cfg_.delta) {}

std::optional<RoundRecord> EpisodeRunner::step() {
  if (done_) return std::nullopt;
  RoundRecord rec;
  rec.t = learner_.round + 1;
  rec.arm = select_arm(learner_);
  rec.pre_reward = sample_reward(cfg_.instance, rec.arm, rng_);

  record_pull(attacker_, rec.arm, rec.pre_reward);
  if (cfg_.attack_enabled) {
    rec.alpha = compute_attack(attacker_, rec.arm, rec.t).alpha;
  }
  record_attack(attacker_, rec.arm, rec.pre_reward, rec.alpha);
  rec.post_reward = rec.pre_reward - rec.alpha;
  total_cost_ += rec.alpha;

  observe(learner_, rec.arm, rec.post_reward);

  if (cfg_.victim == LearnerVariant::kUcbBai && cfg_.bai_stopping &&
      learner_.round >= learner_.num_arms()) {
    const StopDecision d = bai_stop_check(learner_);
    if (d.stopped) {
      stop_round_ = rec.t;
      winner_ = d.winner;
      done_ = true;
    }
  }
  if (rec.t >= horizon_) done_ = true;
  return rec;
}

EpisodeSnapshot EpisodeRunner::snapshot() const {
  EpisodeSnapshot s;
  s.rounds = learner_.round;
  s.counts = learner_.counts;
  s.pre_sums = attacker_.pre_sums;
  s.post_sums = learner_.post_sums;
  s.cum_attack = attacker_.cum_attack;
  s.total_cost = total_cost_;
  s.stop_round = stop_round_;
  s.winner = winner_;
  return s;
}

EventEMonitor::EventEMonitor(const BanditInstance& instance, double delta)
    : instance_(&instance),
      delta_(delta),
      counts_(instance.num_arms(), 0),
      pre_sums_(instance.num_arms(), 0.0) {}

bool EventEMonitor::violates(Arm arm) const {
  const double mean = pre_sums_[arm] / static_cast<double>(counts_[arm]);
  const double width =
      beta_width(counts_[arm], instance_->num_arms(), instance_->sigma(), delta_);
  return !(std::abs(mean - instance_->mean(arm)) < width);
}

void EventEMonitor::update(const RoundRecord& rec) {
  ++counts_[rec.arm];
  pre_sums_[rec.arm] += rec.pre_reward;
  if (first_violation_) return;
  const std::size_t k = counts_.size();
  if (rec.t <= k) return;
  bool bad = false;
  if (rec.t == k + 1) {
    for (Arm i = 0; i < k && !bad; ++i) bad = counts_[i] > 0 && violates(i);
  } else {
    bad = violates(rec.arm);
  }
  if (bad) first_violation_ = rec.t;
}

Lemma1Monitor::Lemma1Monitor(const EpisodeConfig& cfg)
    : target_(cfg.instance.target_arm()),
      running_cap_(cfg.victim == LearnerVariant::kUcbBai),
      log_coefficient_(cfg.delta0 > 0.0
                           ? 9.0 * cfg.instance.sigma() * cfg.instance.sigma() /
                                 (cfg.delta0 * cfg.delta0)
                           : 0.0),
      fixed_cap_(0.0),
      counts_(cfg.instance.num_arms(), 0) {
  if (!running_cap_) {
    fixed_cap_ = cap_at(cfg.resolved_horizon());
  }
}

double Lemma1Monitor::cap_at(std::uint64_t t) const {
  if (log_coefficient_ == 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 + log_coefficient_ * std::log(static_cast<double>(t));
}

void Lemma1Monitor::update(const RoundRecord& rec) {
  ++counts_[rec.arm];
  if (rec.t < 2 * counts_.size()) return;
  const double cap = running_cap_ ? cap_at(rec.t) : fixed_cap_;
  const double limit = std::min(static_cast<double>(counts_[target_]), cap);
  for (Arm i = 0; i < counts_.size(); ++i) {
    if (i != target_ && static_cast<double>(counts_[i]) > limit) ++violations_;
  }
}

bool check_event_E(const EpisodeLog& log, const BanditInstance& instance,
                   double delta) {
  EventEMonitor monitor(instance, delta);
  for (const RoundRecord& rec : log.rounds) monitor.update(rec);
  return monitor.held();
}

std::uint64_t check_lemma1(const EpisodeLog& log, const EpisodeConfig& cfg) {
  Lemma1Monitor monitor(cfg);
  for (const RoundRecord& rec : log.rounds) monitor.update(rec);
  return monitor.violations();
}

std::optional<bool> ratio_bound_holds(const std::vector<std::uint64_t>& counts,
                                      const BanditInstance& instance,
                                      double stop_ratio) {
  if (!instance.has_unique_best_arm()) return std::nullopt;
  const Arm best = instance.best_arm();
  const double allowed = stop_ratio * static_cast<double>(counts[best]);
  for (Arm i = 0; i < counts.size(); ++i) {
    if (i != best && static_cast<double>(counts[i]) > allowed) return false;
  }
  return true;
}

namespace {

TrialSummary summarize(const EpisodeConfig& cfg, const EpisodeSnapshot& snap,
                       const EventEMonitor& event_e,
                       const Lemma1Monitor& lemma1) {
  const Arm target = cfg.instance.target_arm();
  TrialSummary s;
  s.seed = cfg.seed;
  s.rounds = snap.rounds;
  s.target_pulls = snap.counts[target];
  for (Arm i = 0; i < snap.counts.size(); ++i) {
    if (i != target) s.max_nontarget_pulls = std::max(s.max_nontarget_pulls, snap.counts[i]);
  }
  s.total_cost = snap.total_cost;
  s.event_e_held = event_e.held();
  s.lemma1_violations = lemma1.violations();
  s.stop_round = snap.stop_round;
  s.winner = snap.winner;
  if (snap.winner) s.winner_is_target = *snap.winner == target;
  if (cfg.victim == LearnerVariant::kUcbBai) {
    s.ratio_bound_held =
        ratio_bound_holds(snap.counts, cfg.instance, cfg.resolved_stop_ratio());
  }
  return s;
}

}  // namespace

EpisodeOutcome run_streaming(const EpisodeConfig& cfg,
                             const RoundCallback& on_round) {
  EpisodeRunner runner(cfg);
  const EpisodeConfig& c = runner.config();
  EventEMonitor event_e(c.instance, c.delta);
  Lemma1Monitor lemma1(c);
  while (auto rec = runner.step()) {
    event_e.update(*rec);
    lemma1.update(*rec);
    if (on_round) on_round(*rec);
  }
  EpisodeOutcome out;
  out.snapshot = runner.snapshot();
  out.summary = summarize(c, out.snapshot, event_e, lemma1);
  return out;
}

EpisodeLog run_episode(const EpisodeConfig& cfg) {
  EpisodeLog log;
  log.terminal =
      run_streaming(cfg, [&](const RoundRecord& r) { log.rounds.push_back(r); })
          .snapshot;
  return log;
}

TrialSummary run_trial(const EpisodeConfig& cfg) {
  return run_streaming(cfg).summary;
}

EpisodeSnapshot replay_snapshot(const EpisodeLog& log, const EpisodeConfig& cfg) {
  const std::size_t k = cfg.instance.num_arms();
  EpisodeSnapshot s;
  s.counts.assign(k, 0);
  s.pre_sums.assign(k, 0.0);
  s.post_sums.assign(k, 0.0);
  s.cum_attack.assign(k, 0.0);
  for (const RoundRecord& r : log.rounds) {
    ++s.counts[r.arm];
    s.pre_sums[r.arm] += r.pre_reward;
    s.post_sums[r.arm] += r.post_reward;
    s.cum_attack[r.arm] += r.alpha;
    s.total_cost += r.alpha;
    ++s.rounds;
  }
  if (cfg.victim == LearnerVariant::kUcbBai && cfg.bai_stopping && s.rounds >= k) {
    LearnerState probe = LearnerState::ucb_bai(k, cfg.instance.sigma(),
                                               cfg.bai_beta, cfg.stop_ratio_override);
    probe.counts = s.counts;
    probe.round = s.rounds;
    const StopDecision d = bai_stop_check(probe);
    if (d.stopped) {
      s.stop_round = s.rounds;
      s.winner = d.winner;
    }
  }
  return s;
}

}  // namespace bandit_lab
