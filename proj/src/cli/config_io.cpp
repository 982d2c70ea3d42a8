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
#include <fstream>
#include <limits>
#include <sstream>

#include "bandit_lab/cli.hpp"
#include "bandit_lab/errors.hpp"

namespace bandit_lab::cli {

namespace {

enum class Kind { kReal, kOptReal, kCount, kOptCount, kBool, kText, kRealList };

struct KeySpec {
  const char* dotted;
  Kind kind;
};

constexpr KeySpec kKeys[] = {
    {"instance.means", Kind::kRealList},
    {"instance.sigma", Kind::kReal},
    {"instance.target_arm", Kind::kOptCount},
    {"instance.reward_family", Kind::kText},
    {"victim", Kind::kText},
    {"attack_enabled", Kind::kBool},
    {"delta0", Kind::kReal},
    {"delta", Kind::kReal},
    {"bai_beta", Kind::kReal},
    {"stop_ratio", Kind::kOptReal},
    {"bai_stopping", Kind::kBool},
    {"horizon", Kind::kOptCount},
    {"seed", Kind::kCount},
    {"trials", Kind::kCount},
    {"campaign_seed", Kind::kCount},
};

const KeySpec& find_key(const std::string& dotted) {
  for (const KeySpec& k : kKeys) {
    if (dotted == k.dotted) return k;
  }
  throw ConfigError("unknown config key \"" + dotted + "\"");
}

json::json_pointer pointer_of(const std::string& dotted) {
  std::string p = "/" + dotted;
  for (char& c : p) {
    if (c == '.') c = '/';
  }
  return json::json_pointer(p);
}

double parse_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError(key + ": expected a number, got \"" + text + "\"");
  }
  return v;
}

std::uint64_t parse_count(const std::string& key, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigError(key + ": expected a nonnegative integer, got \"" + text + "\"");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ConfigError(key + ": integer out of range: \"" + text + "\"");
  }
}

const json& node(const json& doc, const std::string& key) {
  const json::json_pointer ptr = pointer_of(key);
  if (!doc.contains(ptr)) throw ConfigError(key + ": missing");
  return doc.at(ptr);
}

// Accessors with field-level messages.
double get_real(const json& doc, const std::string& key) {
  const json& v = node(doc, key);
  if (!v.is_number()) throw ConfigError(key + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(key + ": must be finite");
  return d;
}

std::uint64_t get_count(const json& doc, const std::string& key) {
  const json& v = node(doc, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw ConfigError(key + ": must be >= 0");
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0.0 && d == std::floor(d) && d < 1.8e19) {
      return static_cast<std::uint64_t>(d);
    }
  }
  throw ConfigError(key + ": expected a nonnegative integer");
}

bool get_bool(const json& doc, const std::string& key) {
  const json& v = node(doc, key);
  if (!v.is_boolean()) throw ConfigError(key + ": expected true or false");
  return v.get<bool>();
}

std::string get_text(const json& doc, const std::string& key) {
  const json& v = node(doc, key);
  if (!v.is_string()) throw ConfigError(key + ": expected a string");
  return v.get<std::string>();
}

bool is_null(const json& doc, const std::string& key) {
  return node(doc, key).is_null();
}

void reject_unknown(const json& node, const std::string& prefix) {
  for (const auto& [name, value] : node.items()) {
    const std::string dotted = prefix.empty() ? name : prefix + "." + name;
    if (value.is_object()) {
      reject_unknown(value, dotted);
    } else {
      find_key(dotted);
    }
  }
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const KeySpec& k : kKeys) out.emplace_back(k.dotted);
    return out;
  }();
  return keys;
}

json default_config_document() {
  return json{
      {"instance",
       {{"means", {0.9, 0.8, 0.7, 0.6, 0.5}},
        {"sigma", 0.1},
        {"target_arm", nullptr},
        {"reward_family", "gaussian"}}},
      {"victim", "ucb_regret"},
      {"attack_enabled", true},
      {"delta0", 0.2},
      {"delta", 0.05},
      {"bai_beta", 2.0},
      {"stop_ratio", nullptr},
      {"bai_stopping", true},
      {"horizon", 10000},
      {"seed", 1},
      {"trials", 200},
      {"campaign_seed", 1},
  };
}

void apply_override(json& doc, const std::string& dotted,
                    const std::string& value) {
  const KeySpec& spec = find_key(dotted);
  json v;
  const bool optional = spec.kind == Kind::kOptReal || spec.kind == Kind::kOptCount;
  if (optional && value == "null") {
    v = nullptr;
  } else {
    switch (spec.kind) {
      case Kind::kReal:
      case Kind::kOptReal:
        v = parse_real(dotted, value);
        break;
      case Kind::kCount:
      case Kind::kOptCount:
        v = parse_count(dotted, value);
        break;
      case Kind::kBool:
        if (value == "true" || value == "1") {
          v = true;
        } else if (value == "false" || value == "0") {
          v = false;
        } else {
          throw ConfigError(dotted + ": expected true or false, got \"" + value + "\"");
        }
        break;
      case Kind::kText:
        v = value;
        break;
      case Kind::kRealList: {
        v = json::array();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(parse_real(dotted, item));
        break;
      }
    }
  }
  doc[pointer_of(dotted)] = std::move(v);
}

CliConfig parse_config(const json& input) {
  if (!input.is_object()) throw ConfigError("config: expected a JSON object");
  reject_unknown(input, "");
  json doc = default_config_document();
  doc.merge_patch(input);
  // merge_patch drops keys set to null; restore them so the echo is complete.
  for (const char* key : {"stop_ratio", "horizon"}) {
    if (!doc.contains(key)) doc[key] = nullptr;
  }
  if (!doc["instance"].contains("target_arm")) doc["instance"]["target_arm"] = nullptr;

  const json& means_node = node(doc, "instance.means");
  if (!means_node.is_array()) throw ConfigError("instance.means: expected an array");
  std::vector<double> means;
  for (const json& m : means_node) {
    if (!m.is_number()) throw ConfigError("instance.means: entries must be numbers");
    means.push_back(m.get<double>());
  }
  if (means.size() < 2) throw ConfigError("instance.means: need at least 2 arms");
  const std::size_t k = means.size();

  std::size_t target = k;
  if (!is_null(doc, "instance.target_arm")) {
    target = get_count(doc, "instance.target_arm");
    if (target < 1 || target > k) {
      throw ConfigError("instance.target_arm: must lie in 1.." + std::to_string(k));
    }
  }
  doc["instance"]["target_arm"] = target;

  const RewardFamily family =
      reward_family_from_string(get_text(doc, "instance.reward_family"));
  BanditInstance instance(std::move(means), get_real(doc, "instance.sigma"),
                          target - 1, family);

  EpisodeConfig ep{.instance = std::move(instance)};
  ep.victim = learner_variant_from_string(get_text(doc, "victim"));
  ep.attack_enabled = get_bool(doc, "attack_enabled");
  ep.delta0 = get_real(doc, "delta0");
  ep.delta = get_real(doc, "delta");
  ep.bai_beta = get_real(doc, "bai_beta");
  if (!is_null(doc, "stop_ratio")) ep.stop_ratio_override = get_real(doc, "stop_ratio");
  ep.bai_stopping = get_bool(doc, "bai_stopping");
  if (!is_null(doc, "horizon")) ep.horizon = get_count(doc, "horizon");
  ep.seed = Seed{get_count(doc, "seed")};
  ep.validate();

  CliConfig cfg{.episode = std::move(ep)};
  cfg.trials = get_count(doc, "trials");
  if (cfg.trials < 1) throw ConfigError("trials: must be >= 1");
  cfg.campaign_seed = Seed{get_count(doc, "campaign_seed")};
  cfg.document = std::move(doc);
  return cfg;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: \"" + path + "\" is not valid JSON: " + e.what());
  }
}

}  // namespace bandit_lab::cli
