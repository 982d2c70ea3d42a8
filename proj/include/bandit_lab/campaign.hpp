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

#ifndef BANDIT_LAB_CAMPAIGN_HPP_
#define BANDIT_LAB_CAMPAIGN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bandit_lab/bounds.hpp"
#include "bandit_lab/harness.hpp"
#include "bandit_lab/rng.hpp"

namespace bandit_lab {

// Empirical frequencies over the trials of a campaign. Entries that do not
// apply to the configuration (wrong victim, undefined bound, no unique best
// arm) are left empty.
struct CampaignRates {
  double event_e = 0.0;
  // Trials where event E held but the pull cap was still violated; must be 0.
  // Only tracked for attacked campaigns.
  std::optional<std::uint64_t> event_e_trials_with_lemma1_violations;
  std::optional<double> target_pulls_at_least_lb;
  std::optional<double> cost_within_ub;
  std::optional<double> stopped;
  std::optional<double> winner_is_target;
  std::optional<double> winner_is_best;
  std::optional<double> target_stop_by_t_star;
  std::optional<double> ratio_bound;

  friend bool operator==(const CampaignRates&, const CampaignRates&) = default;
};

// One row of the bound-vs-empirical table.
struct BoundComparison {
  std::string quantity;
  std::string relation;  // "empirical >= bound" or "empirical <= bound"
  double bound = 0.0;
  double empirical_min = 0.0;
  double empirical_mean = 0.0;
  double empirical_max = 0.0;
  double fraction_satisfied = 0.0;

  friend bool operator==(const BoundComparison&, const BoundComparison&) = default;
};

struct CampaignResult {
  std::size_t num_trials = 0;
  Seed campaign_seed;
  std::vector<TrialSummary> trials;  // trial i used trial_seed(campaign_seed, i)
  std::optional<BoundReport> bounds;
  CampaignRates rates;
  std::vector<BoundComparison> comparisons;
};

// Worker count: BANDIT_LAB_THREADS if set to a positive integer (capped at
// the available cores), otherwise every available core.
int resolve_thread_count();

// Trials run concurrently under OpenMP; each owns its whole state. The
// reduction happens afterwards in trial order, so the result does not depend
// on the thread count or scheduling. `threads` <= 0 means
// resolve_thread_count().
CampaignResult run_campaign(const EpisodeConfig& cfg, std::size_t num_trials,
                            Seed campaign_seed, int threads = 0);

// Single-threaded reference for run_campaign.
CampaignResult run_campaign_serial(const EpisodeConfig& cfg,
                                   std::size_t num_trials, Seed campaign_seed);

// Deterministic reduction of per-trial summaries (exposed for tests).
CampaignResult aggregate(const EpisodeConfig& cfg, Seed campaign_seed,
                         std::vector<TrialSummary> trials);

}  // namespace bandit_lab

#endif  // BANDIT_LAB_CAMPAIGN_HPP_
