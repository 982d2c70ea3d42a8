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

#ifndef BANDIT_LAB_CLI_HPP_
#define BANDIT_LAB_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bandit_lab/bounds.hpp"
#include "bandit_lab/campaign.hpp"
#include "bandit_lab/harness.hpp"

namespace bandit_lab::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

// Resolved run configuration. `document` is the normalized JSON form that
// gets echoed into every summary, so a run can be reproduced from its output.
struct CliConfig {
  EpisodeConfig episode;
  std::size_t trials = 200;
  Seed campaign_seed{1};
  json document{};
};

// Every key accepted in a config file, in dotted form. Each is also a
// command-line flag (--instance.sigma 0.2, --delta0 0.3, ...).
const std::vector<std::string>& config_keys();

json default_config_document();

// Sets `dotted` in `doc` from a command-line string. List values are
// comma-separated; "null" clears optional fields. Throws ConfigError.
void apply_override(json& doc, const std::string& dotted,
                    const std::string& value);

// Validates and converts. Arms are 1-based in the document. Throws
// ConfigError naming the offending field.
CliConfig parse_config(const json& doc);

json load_config_file(const std::string& path);

json bound_report_to_json(const BoundReport& report);
json snapshot_to_json(const EpisodeSnapshot& snap);
json trial_summary_to_json(const TrialSummary& summary);
json campaign_to_json(const CliConfig& cfg, const CampaignResult& result);

// CSV columns: t,arm,pre_reward,alpha,post_reward; arm is 1-based and reals
// are printed with 17 significant digits.
inline constexpr std::string_view kRoundsCsvHeader =
    "t,arm,pre_reward,alpha,post_reward";
void write_round_csv(std::ostream& os, const RoundRecord& rec);
std::string format_real(double value);

// Grid syntax: "start:stop:step" (inclusive) or a comma-separated list.
std::vector<double> parse_grid(const std::string& spec);

// Entry point shared by the executable and the integration tests.
int run_cli(const std::vector<std::string>& args);

}  // namespace bandit_lab::cli

#endif  // BANDIT_LAB_CLI_HPP_
