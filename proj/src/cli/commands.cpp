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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "bandit_lab/cli.hpp"
#include "bandit_lab/errors.hpp"

namespace bandit_lab::cli {

namespace {

namespace fs = std::filesystem;

struct ConfigSource {
  std::string path;
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option*>> flags;
};

void add_config_options(CLI::App* sub, ConfigSource& src) {
  sub->add_option("--config", src.path, "JSON config file");
  for (const std::string& key : config_keys()) {
    std::string names = "--" + key;
    if (key.find('_') != std::string::npos) {
      std::string alias = key;
      std::replace(alias.begin(), alias.end(), '_', '-');
      names += ",--" + alias;
    }
    CLI::Option* opt = sub->add_option(names, src.values[key], "override " + key);
    src.flags.emplace_back(key, opt);
  }
}

CliConfig resolve(const ConfigSource& src) {
  json doc = src.path.empty() ? json::object() : load_config_file(src.path);
  for (const auto& [key, opt] : src.flags) {
    if (opt->count() > 0) apply_override(doc, key, src.values.at(key));
  }
  return parse_config(doc);
}

void write_json_file(const fs::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

void make_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
}

std::optional<BoundReport> report_if_defined(const EpisodeConfig& ep) {
  const std::uint64_t horizon = ep.resolved_horizon();
  if (ep.delta0 > 0.0 && horizon >= 2 * ep.instance.num_arms()) {
    return make_bound_report(horizon, ep.bound_config());
  }
  return std::nullopt;
}

int cmd_bounds(const CliConfig& cfg, bool require_t_star, bool f_table,
               const std::string& out_path) {
  const EpisodeConfig& ep = cfg.episode;
  const BoundConfig bc = ep.bound_config();
  if (require_t_star) sample_complexity_round(bc);  // throws ThresholdRefusal
  const BoundReport report = make_bound_report(ep.resolved_horizon(), bc, f_table);
  const json doc{{"config", cfg.document}, {"bounds", bound_report_to_json(report)}};
  std::cout << doc.dump(2) << '\n';
  if (!out_path.empty()) write_json_file(out_path, doc);
  return kExitOk;
}

int cmd_simulate(const CliConfig& cfg, const fs::path& out_dir) {
  make_dir(out_dir);
  const fs::path csv_path = out_dir / "rounds.csv";
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw IoError("cannot open " + csv_path.string() + " for writing");
  csv << kRoundsCsvHeader << '\n';
  const EpisodeOutcome outcome = run_streaming(
      cfg.episode, [&](const RoundRecord& rec) { write_round_csv(csv, rec); });
  csv.flush();
  if (!csv) throw IoError("failed writing " + csv_path.string());

  const std::optional<BoundReport> bounds = report_if_defined(cfg.episode);
  write_json_file(out_dir / "summary.json",
                  json{{"config", cfg.document},
                       {"snapshot", snapshot_to_json(outcome.snapshot)},
                       {"summary", trial_summary_to_json(outcome.summary)},
                       {"bounds", bounds ? bound_report_to_json(*bounds) : json(nullptr)}});
  std::cout << "rounds=" << outcome.summary.rounds
            << " target_pulls=" << outcome.summary.target_pulls
            << " total_cost=" << format_real(outcome.summary.total_cost) << '\n';
  return kExitOk;
}

void print_rates(const CampaignRates& r) {
  auto line = [](const char* name, const std::optional<double>& v) {
    if (v) std::cout << "  " << name << " = " << *v << '\n';
  };
  std::cout << "rates:\n";
  line("event_e", r.event_e);
  line("target_pulls_at_least_lb", r.target_pulls_at_least_lb);
  line("cost_within_ub", r.cost_within_ub);
  line("stopped", r.stopped);
  line("winner_is_target", r.winner_is_target);
  line("winner_is_best", r.winner_is_best);
  line("target_stop_by_t_star", r.target_stop_by_t_star);
  line("ratio_bound", r.ratio_bound);
  if (r.event_e_trials_with_lemma1_violations) {
    std::cout << "  event_e_trials_with_lemma1_violations = "
              << *r.event_e_trials_with_lemma1_violations << '\n';
  }
}

int cmd_montecarlo(const CliConfig& cfg, const fs::path& out_dir) {
  make_dir(out_dir);
  const CampaignResult result =
      run_campaign(cfg.episode, cfg.trials, cfg.campaign_seed);
  write_json_file(out_dir / "campaign.json", campaign_to_json(cfg, result));
  print_rates(result.rates);
  return kExitOk;
}

constexpr const char* kSweepHeader =
    "param,value,trials,event_e,target_pulls_at_least_lb,cost_within_ub,"
    "stopped,winner_is_target,winner_is_best,target_stop_by_t_star,ratio_bound,"
    "mean_target_pulls,mean_total_cost,lemma1_cap,thm1_target_pulls_lb,"
    "thm1_cost_ub,delta0_threshold,t_star";

std::string cell(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

int cmd_sweep(const ConfigSource& src, const std::string& param,
              const std::string& grid, const std::string& out_path) {
  static const std::vector<std::string> kSweepable = {
      "instance.sigma", "delta0", "delta", "bai_beta", "stop_ratio", "horizon"};
  if (std::find(kSweepable.begin(), kSweepable.end(), param) == kSweepable.end()) {
    throw ConfigError("--param: \"" + param + "\" cannot be swept");
  }
  const std::vector<double> values = parse_grid(grid);
  const CliConfig base = resolve(src);

  // Validate every point before running any campaign.
  std::vector<CliConfig> points;
  for (double v : values) {
    json doc = base.document;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    apply_override(doc, param, buf);
    points.push_back(parse_config(doc));
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out << kSweepHeader << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    const CliConfig& p = points[i];
    const CampaignResult r = run_campaign(p.episode, p.trials, p.campaign_seed);
    double pulls = 0.0, cost = 0.0;
    for (const TrialSummary& t : r.trials) {
      pulls += static_cast<double>(t.target_pulls);
      cost += t.total_cost;
    }
    const double n = static_cast<double>(r.num_trials);
    const BoundConfig bc = p.episode.bound_config();
    std::optional<double> cap, lb, ub, t_star;
    if (r.bounds) {
      cap = r.bounds->lemma1_cap;
      lb = r.bounds->thm1_target_pulls_lb;
      ub = r.bounds->thm1_cost_ub;
    }
    if (p.episode.delta0 > delta0_threshold(bc)) {
      t_star = static_cast<double>(sample_complexity_round(bc));
    }
    out << param << ',' << format_real(values[i]) << ',' << r.num_trials << ','
        << format_real(r.rates.event_e) << ','
        << cell(r.rates.target_pulls_at_least_lb) << ','
        << cell(r.rates.cost_within_ub) << ',' << cell(r.rates.stopped) << ','
        << cell(r.rates.winner_is_target) << ',' << cell(r.rates.winner_is_best)
        << ',' << cell(r.rates.target_stop_by_t_star) << ','
        << cell(r.rates.ratio_bound) << ',' << format_real(pulls / n) << ','
        << format_real(cost / n) << ',' << cell(cap) << ',' << cell(lb) << ','
        << cell(ub) << ',' << format_real(delta0_threshold(bc)) << ','
        << cell(t_star) << '\n';
  }
  out.flush();
  if (!out) throw IoError("failed writing " + out_path);
  std::cout << "wrote " << points.size() << " rows to " << out_path << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Reward-poisoning attacks on UCB learners: bounds and simulation",
               "bandit-attack-lab"};
  app.require_subcommand(1);

  ConfigSource bounds_src, sim_src, mc_src, sweep_src;
  bool t_star = false, f_table = false;
  std::string bounds_out, sim_dir, mc_dir, sweep_param, sweep_grid, sweep_out;

  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate every closed-form bound");
  add_config_options(bounds, bounds_src);
  bounds->add_flag("--t-star", t_star,
                   "Require the sample-complexity round (error below the delta0 threshold)");
  bounds->add_flag("--f-table", f_table, "Tabulate f(t) up to t*");
  bounds->add_option("--out", bounds_out, "Also write the report to this file");

  CLI::App* simulate = app.add_subcommand("simulate", "Run one seeded episode");
  add_config_options(simulate, sim_src);
  simulate->add_option("--out-dir", sim_dir, "Output directory")->required();

  CLI::App* montecarlo = app.add_subcommand("montecarlo", "Run a seeded campaign");
  add_config_options(montecarlo, mc_src);
  montecarlo->add_option("--out-dir", mc_dir, "Output directory")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Run one campaign per grid point");
  add_config_options(sweep, sweep_src);
  sweep->add_option("--param", sweep_param, "Dotted config key to vary")->required();
  sweep->add_option("--grid", sweep_grid, "start:stop:step or v1,v2,...")->required();
  sweep->add_option("--out", sweep_out, "Summary CSV path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*bounds) return cmd_bounds(resolve(bounds_src), t_star, f_table, bounds_out);
    if (*simulate) return cmd_simulate(resolve(sim_src), sim_dir);
    if (*montecarlo) return cmd_montecarlo(resolve(mc_src), mc_dir);
    if (*sweep) return cmd_sweep(sweep_src, sweep_param, sweep_grid, sweep_out);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitConfig;
}

}  // namespace bandit_lab::cli
