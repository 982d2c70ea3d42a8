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

#include <cstdio>
#include <ostream>
#include <sstream>

#include "bandit_lab/cli.hpp"
#include "bandit_lab/errors.hpp"

namespace bandit_lab::cli {

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json optional_arm(const std::optional<Arm>& arm) {
  return arm ? json(*arm + 1) : json(nullptr);
}

}  // namespace

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_round_csv(std::ostream& os, const RoundRecord& rec) {
  os << rec.t << ',' << rec.arm + 1 << ',' << format_real(rec.pre_reward) << ','
     << format_real(rec.alpha) << ',' << format_real(rec.post_reward) << '\n';
}

json bound_report_to_json(const BoundReport& r) {
  json f = json::array();
  for (const auto& [t, v] : r.f_values) f.push_back({{"t", t}, {"f", v}});
  return json{
      {"horizon", r.horizon},
      {"stop_ratio", r.stop_ratio},
      {"lemma1_cap", r.lemma1_cap},
      {"thm1_target_pulls_lb", r.thm1_target_pulls_lb},
      {"thm1_cost_ub", r.thm1_cost_ub},
      {"cost_order", r.cost_order},
      {"delta0_threshold", r.delta0_threshold},
      {"sample_complexity_round", optional_json(r.sample_complexity_round)},
      {"f_values", std::move(f)},
  };
}

json snapshot_to_json(const EpisodeSnapshot& s) {
  return json{
      {"rounds", s.rounds},
      {"counts", s.counts},
      {"pre_means", s.pre_means()},
      {"post_means", s.post_means()},
      {"cum_attack", s.cum_attack},
      {"total_cost", s.total_cost},
      {"stop_round", optional_json(s.stop_round)},
      {"winner", optional_arm(s.winner)},
  };
}

json trial_summary_to_json(const TrialSummary& t) {
  return json{
      {"seed", t.seed.value},
      {"rounds", t.rounds},
      {"target_pulls", t.target_pulls},
      {"max_nontarget_pulls", t.max_nontarget_pulls},
      {"total_cost", t.total_cost},
      {"event_e_held", t.event_e_held},
      {"lemma1_violations", t.lemma1_violations},
      {"stop_round", optional_json(t.stop_round)},
      {"winner", optional_arm(t.winner)},
      {"winner_is_target", optional_json(t.winner_is_target)},
      {"ratio_bound_held", optional_json(t.ratio_bound_held)},
  };
}

json campaign_to_json(const CliConfig& cfg, const CampaignResult& result) {
  json trials = json::array();
  json seeds = json::array();
  for (const TrialSummary& t : result.trials) {
    trials.push_back(trial_summary_to_json(t));
    seeds.push_back(t.seed.value);
  }
  const CampaignRates& r = result.rates;
  json rates{
      {"event_e", r.event_e},
      {"event_e_trials_with_lemma1_violations",
       optional_json(r.event_e_trials_with_lemma1_violations)},
      {"target_pulls_at_least_lb", optional_json(r.target_pulls_at_least_lb)},
      {"cost_within_ub", optional_json(r.cost_within_ub)},
      {"stopped", optional_json(r.stopped)},
      {"winner_is_target", optional_json(r.winner_is_target)},
      {"winner_is_best", optional_json(r.winner_is_best)},
      {"target_stop_by_t_star", optional_json(r.target_stop_by_t_star)},
      {"ratio_bound", optional_json(r.ratio_bound)},
  };
  json table = json::array();
  for (const BoundComparison& c : result.comparisons) {
    table.push_back({
        {"quantity", c.quantity},
        {"relation", c.relation},
        {"bound", c.bound},
        {"empirical_min", c.empirical_min},
        {"empirical_mean", c.empirical_mean},
        {"empirical_max", c.empirical_max},
        {"fraction_satisfied", c.fraction_satisfied},
    });
  }
  json doc = cfg.document;
  doc["trials"] = result.num_trials;
  doc["campaign_seed"] = result.campaign_seed.value;
  return json{
      {"config", std::move(doc)},
      {"num_trials", result.num_trials},
      {"campaign_seed", result.campaign_seed.value},
      {"trial_seeds", std::move(seeds)},
      {"rates", std::move(rates)},
      {"bounds", result.bounds ? bound_report_to_json(*result.bounds) : json(nullptr)},
      {"comparisons", std::move(table)},
      {"trials", std::move(trials)},
  };
}

std::vector<double> parse_grid(const std::string& spec) {
  auto number = [&](const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw ConfigError("grid: bad number \"" + text + "\" in \"" + spec + "\"");
    }
    return v;
  };
  std::vector<std::string> parts;
  const char sep = spec.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);

  std::vector<double> out;
  if (sep == ',') {
    for (const std::string& p : parts) out.push_back(number(p));
  } else {
    if (parts.size() != 3) throw ConfigError("grid: expected start:stop:step");
    const double start = number(parts[0]);
    const double stop = number(parts[1]);
    const double step = number(parts[2]);
    if (!(step > 0.0) || stop < start) {
      throw ConfigError("grid: need step > 0 and stop >= start");
    }
    const auto n = static_cast<std::size_t>((stop - start) / step + 1e-9) + 1;
    if (n > 100000) throw ConfigError("grid: too many points");
    for (std::size_t i = 0; i < n; ++i) {
      // Trim accumulated representation error (0.30000000000000004 -> 0.3).
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", start + static_cast<double>(i) * step);
      out.push_back(std::stod(buf));
    }
  }
  if (out.empty()) throw ConfigError("grid: no points");
  return out;
}

}  // namespace bandit_lab::cli
