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

#include "bandit_lab/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>

#include "bandit_lab/errors.hpp"

namespace bandit_lab {

int resolve_thread_count() {
  const int cores = std::max(1, omp_get_num_procs());
  if (const char* env = std::getenv("BANDIT_LAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) {
      return static_cast<int>(std::min<long>(n, cores));
    }
  }
  return cores;
}

namespace {

EpisodeConfig with_seed(const EpisodeConfig& cfg, Seed seed) {
  EpisodeConfig c = cfg;
  c.seed = seed;
  return c;
}

double fraction(std::size_t hits, std::size_t n) {
  return n == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(n);
}

template <typename Get>
BoundComparison compare(std::string quantity, bool at_least, double bound,
                        const std::vector<TrialSummary>& trials, Get get) {
  BoundComparison c;
  c.quantity = std::move(quantity);
  c.relation = at_least ? "empirical >= bound" : "empirical <= bound";
  c.bound = bound;
  c.empirical_min = std::numeric_limits<double>::infinity();
  c.empirical_max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::size_t hits = 0;
  std::size_t n = 0;
  for (const TrialSummary& t : trials) {
    const std::optional<double> v = get(t);
    if (!v) continue;
    ++n;
    sum += *v;
    c.empirical_min = std::min(c.empirical_min, *v);
    c.empirical_max = std::max(c.empirical_max, *v);
    if (at_least ? *v >= bound : *v <= bound) ++hits;
  }
  if (n == 0) {
    c.empirical_min = c.empirical_max = 0.0;
  } else {
    c.empirical_mean = sum / static_cast<double>(n);
  }
  c.fraction_satisfied = fraction(hits, trials.size());
  return c;
}

}  // namespace

CampaignResult aggregate(const EpisodeConfig& cfg, Seed campaign_seed,
                         std::vector<TrialSummary> trials) {
  CampaignResult r;
  r.num_trials = trials.size();
  r.campaign_seed = campaign_seed;
  r.trials = std::move(trials);
  const auto& ts = r.trials;
  const std::size_t n = ts.size();

  const std::uint64_t horizon = cfg.resolved_horizon();
  const BoundConfig bc = cfg.bound_config();
  if (cfg.delta0 > 0.0 && horizon >= 2 * cfg.instance.num_arms()) {
    r.bounds = make_bound_report(horizon, bc);
  }

  std::size_t e_hits = 0;
  std::uint64_t e_with_violations = 0;
  for (const TrialSummary& t : ts) {
    if (t.event_e_held) {
      ++e_hits;
      if (t.lemma1_violations > 0) ++e_with_violations;
    }
  }
  if (cfg.attack_enabled) {
    r.rates.event_e_trials_with_lemma1_violations = e_with_violations;
  }
  r.rates.event_e = fraction(e_hits, n);

  if (cfg.victim == LearnerVariant::kUcbRegret && r.bounds) {
    const double lb = r.bounds->thm1_target_pulls_lb;
    const double ub = r.bounds->thm1_cost_ub;
    std::size_t pulls_ok = 0, cost_ok = 0;
    for (const TrialSummary& t : ts) {
      if (static_cast<double>(t.target_pulls) >= lb) ++pulls_ok;
      if (t.total_cost <= ub) ++cost_ok;
    }
    r.rates.target_pulls_at_least_lb = fraction(pulls_ok, n);
    r.rates.cost_within_ub = fraction(cost_ok, n);
    r.comparisons.push_back(compare(
        "target_pulls", true, lb, ts,
        [](const TrialSummary& t) -> std::optional<double> {
          return static_cast<double>(t.target_pulls);
        }));
    r.comparisons.push_back(compare(
        "total_cost", false, ub, ts,
        [](const TrialSummary& t) -> std::optional<double> { return t.total_cost; }));
    r.comparisons.push_back(compare(
        "max_nontarget_pulls", false, r.bounds->lemma1_cap, ts,
        [](const TrialSummary& t) -> std::optional<double> {
          return static_cast<double>(t.max_nontarget_pulls);
        }));
  }

  if (cfg.victim == LearnerVariant::kUcbBai) {
    std::size_t stopped = 0, to_target = 0, to_best = 0, ratio_ok = 0,
                ratio_n = 0;
    const Arm best = cfg.instance.best_arm();
    for (const TrialSummary& t : ts) {
      if (t.stop_round) ++stopped;
      if (t.winner_is_target.value_or(false)) ++to_target;
      if (t.winner && *t.winner == best) ++to_best;
      if (t.ratio_bound_held) {
        ++ratio_n;
        if (*t.ratio_bound_held) ++ratio_ok;
      }
    }
    r.rates.stopped = fraction(stopped, n);
    r.rates.winner_is_target = fraction(to_target, n);
    if (cfg.instance.has_unique_best_arm()) {
      r.rates.winner_is_best = fraction(to_best, n);
    }
    if (ratio_n > 0) r.rates.ratio_bound = fraction(ratio_ok, n);

    if (r.bounds && r.bounds->sample_complexity_round) {
      const std::uint64_t t_star = *r.bounds->sample_complexity_round;
      std::size_t by_t_star = 0;
      for (const TrialSummary& t : ts) {
        if (t.winner_is_target.value_or(false) && *t.stop_round <= t_star) {
          ++by_t_star;
        }
      }
      r.rates.target_stop_by_t_star = fraction(by_t_star, n);
      r.comparisons.push_back(compare(
          "stop_round_with_target_winner", false, static_cast<double>(t_star), ts,
          [](const TrialSummary& t) -> std::optional<double> {
            if (!t.winner_is_target.value_or(false)) return std::nullopt;
            return static_cast<double>(*t.stop_round);
          }));
    }
  }
  return r;
}

CampaignResult run_campaign(const EpisodeConfig& cfg, std::size_t num_trials,
                            Seed campaign_seed, int threads) {
  if (num_trials < 1) throw ConfigError("trials: must be >= 1");
  cfg.validate();
  const int workers = threads > 0 ? threads : resolve_thread_count();
  std::vector<TrialSummary> trials(num_trials);
  const auto n = static_cast<std::int64_t>(num_trials);

  std::exception_ptr failure;

#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    try {
      trials[idx] = run_trial(with_seed(cfg, trial_seed(campaign_seed, idx)));
    } catch (...) {
#pragma omp critical(bandit_lab_campaign_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return aggregate(cfg, campaign_seed, std::move(trials));
}

CampaignResult run_campaign_serial(const EpisodeConfig& cfg,
                                   std::size_t num_trials, Seed campaign_seed) {
  if (num_trials < 1) throw ConfigError("trials: must be >= 1");
  cfg.validate();
  std::vector<TrialSummary> trials;
  trials.reserve(num_trials);
  for (std::uint64_t i = 0; i < num_trials; ++i) {
    trials.push_back(run_trial(with_seed(cfg, trial_seed(campaign_seed, i))));
  }
  return aggregate(cfg, campaign_seed, std::move(trials));
}

}  // namespace bandit_lab
