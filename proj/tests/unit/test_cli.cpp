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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "doctest.h"

#include "bandit_lab/cli.hpp"
#include "bandit_lab/errors.hpp"

using namespace bandit_lab;
using namespace bandit_lab::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("bandit_lab_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path write_config(const fs::path& dir, const json& doc) {
  const fs::path p = dir / "cfg.json";
  std::ofstream(p) << doc.dump();
  return p;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

const json kTwoArmBai = {
    {"instance", {{"means", {0.9, 0.5}}, {"sigma", 0.1}}},
    {"victim", "ucb_bai"},
    {"delta0", 0.7},
    {"bai_beta", 2.0},
    {"horizon", nullptr},
};

}  // namespace

TEST_CASE("parse_config defaults and validation") {
  const CliConfig c = parse_config(json::object());
  CHECK(c.episode.instance.num_arms() == 5);
  CHECK(c.episode.instance.target_arm() == 4);
  CHECK(c.document["instance"]["target_arm"] == 5);
  CHECK(c.episode.horizon == std::optional<std::uint64_t>{10000});
  CHECK(c.trials == 200);

  CHECK_THROWS_AS(parse_config(json{{"nonsense", 1}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"instance", {{"colour", 1}}}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"delta", 0.9}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"delta0", "big"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"victim", "thompson"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"instance", {{"target_arm", 9}}}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"trials", 0}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"delta0", nullptr}}), ConfigError);

  try {
    parse_config(json{{"instance", {{"sigma", -1.0}}}});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("instance.sigma") != std::string::npos);
  }
}

TEST_CASE("dotted overrides") {
  json doc = json::object();
  apply_override(doc, "instance.means", "0.9,0.5");
  apply_override(doc, "instance.sigma", "0.2");
  apply_override(doc, "attack_enabled", "false");
  apply_override(doc, "horizon", "50");
  apply_override(doc, "stop_ratio", "6");
  const CliConfig c = parse_config(doc);
  CHECK(c.episode.instance.means() == std::vector<double>{0.9, 0.5});
  CHECK(c.episode.instance.sigma() == 0.2);
  CHECK_FALSE(c.episode.attack_enabled);
  CHECK(c.episode.horizon == std::optional<std::uint64_t>{50});
  CHECK(c.episode.stop_ratio_override == std::optional<double>{6.0});

  CHECK_THROWS_AS(apply_override(doc, "nope", "1"), ConfigError);
  CHECK_THROWS_AS(apply_override(doc, "horizon", "-3"), ConfigError);
  CHECK_THROWS_AS(apply_override(doc, "delta0", "0.2x"), ConfigError);
  CHECK_THROWS_AS(apply_override(doc, "attack_enabled", "maybe"), ConfigError);
}

TEST_CASE("config document round trips") {
  const CliConfig a = parse_config(kTwoArmBai);
  const CliConfig b = parse_config(a.document);
  CHECK(a.document == b.document);
}

TEST_CASE("parse_grid") {
  const auto g = parse_grid("0.1:1.0:0.1");
  REQUIRE(g.size() == 10);
  CHECK(g[2] == 0.3);
  CHECK(g.back() == 1.0);
  CHECK(parse_grid("0.5,0.7") == std::vector<double>{0.5, 0.7});
  CHECK_THROWS_AS(parse_grid("1:0:0.1"), ConfigError);
  CHECK_THROWS_AS(parse_grid("0:1"), ConfigError);
  CHECK_THROWS_AS(parse_grid("a,b"), ConfigError);
}

TEST_CASE("format_real keeps 17 significant digits") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(0.0) == "0");
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("bounds subcommand") {
  TempDir dir;
  const fs::path cfg = write_config(dir.path, kTwoArmBai);
  const fs::path out = dir.path / "bounds.json";
  REQUIRE(run_cli({"bounds", "--config", cfg.string(), "--t-star", "--out",
                   out.string()}) == kExitOk);
  const json report = json::parse(slurp(out));
  CHECK(report["bounds"]["sample_complexity_round"] == 13);
  CHECK(report["bounds"]["stop_ratio"] == 4.0);
  CHECK(report["bounds"]["delta0_threshold"].get<double>() ==
        doctest::Approx(0.67082039324993692).epsilon(1e-14));

  CHECK(run_cli({"bounds", "--config", cfg.string(), "--t-star", "--delta0", "0.5"}) ==
        kExitConfig);
  // Without --t-star the report is still produced, with t* left empty.
  REQUIRE(run_cli({"bounds", "--config", cfg.string(), "--delta0", "0.5", "--out",
                   out.string()}) == kExitOk);
  CHECK(json::parse(slurp(out))["bounds"]["sample_complexity_round"].is_null());
  CHECK(run_cli({"bounds", "--config", cfg.string(), "--delta0", "0"}) == kExitConfig);
}

TEST_CASE("simulate subcommand") {
  TempDir dir;
  const json base = {{"instance", {{"means", {0.9, 0.5}}, {"sigma", 0.1}}},
                     {"horizon", 100}};
  const fs::path cfg = write_config(dir.path, base);
  const fs::path d1 = dir.path / "a", d2 = dir.path / "b", d3 = dir.path / "c";
  REQUIRE(run_cli({"simulate", "--config", cfg.string(), "--seed", "7", "--out-dir",
                   d1.string()}) == kExitOk);
  REQUIRE(run_cli({"simulate", "--config", cfg.string(), "--seed", "7", "--out-dir",
                   d2.string()}) == kExitOk);
  const std::string csv = slurp(d1 / "rounds.csv");
  const auto rows = lines_of(csv);
  REQUIRE(rows.size() == 101);
  CHECK(rows[0] == "t,arm,pre_reward,alpha,post_reward");
  CHECK(rows[1].rfind("1,1,", 0) == 0);
  CHECK(rows[2].rfind("2,2,", 0) == 0);
  CHECK(csv == slurp(d2 / "rounds.csv"));
  CHECK(slurp(d1 / "summary.json") == slurp(d2 / "summary.json"));

  REQUIRE(run_cli({"simulate", "--config", cfg.string(), "--attack_enabled", "false",
                   "--out-dir", d3.string()}) == kExitOk);
  const auto quiet = lines_of(slurp(d3 / "rounds.csv"));
  for (std::size_t i = 1; i < quiet.size(); ++i) {
    std::stringstream ss(quiet[i]);
    std::string t, arm, pre, alpha;
    std::getline(ss, t, ',');
    std::getline(ss, arm, ',');
    std::getline(ss, pre, ',');
    std::getline(ss, alpha, ',');
    CHECK(alpha == "0");
  }

  const json summary = json::parse(slurp(d1 / "summary.json"));
  CHECK(summary["config"]["seed"] == 7);
  CHECK(summary["snapshot"]["rounds"] == 100);
}

TEST_CASE("montecarlo subcommand") {
  TempDir dir;
  const json base = {{"horizon", 400}, {"trials", 6}};
  const fs::path cfg = write_config(dir.path, base);
  const fs::path a = dir.path / "a", b = dir.path / "b";
  REQUIRE(run_cli({"montecarlo", "--config", cfg.string(), "--campaign-seed", "11",
                   "--out-dir", a.string()}) == kExitOk);
  REQUIRE(run_cli({"montecarlo", "--config", cfg.string(), "--campaign-seed", "11",
                   "--out-dir", b.string()}) == kExitOk);
  CHECK(slurp(a / "campaign.json") == slurp(b / "campaign.json"));
  const json doc = json::parse(slurp(a / "campaign.json"));
  CHECK(doc["num_trials"] == 6);
  CHECK(doc["trials"].size() == 6);
  CHECK(doc["config"]["campaign_seed"] == 11);
}

TEST_CASE("one-trial campaign summary equals the simulate summary") {
  TempDir dir;
  const fs::path cfg = write_config(dir.path, json{{"horizon", 500}});
  const fs::path mc = dir.path / "mc", sim = dir.path / "sim";
  REQUIRE(run_cli({"montecarlo", "--config", cfg.string(), "--trials", "1",
                   "--campaign-seed", "5", "--out-dir", mc.string()}) == kExitOk);
  const json campaign = json::parse(slurp(mc / "campaign.json"));
  const std::uint64_t seed = campaign["trial_seeds"][0].get<std::uint64_t>();
  REQUIRE(run_cli({"simulate", "--config", cfg.string(), "--seed", std::to_string(seed),
                   "--out-dir", sim.string()}) == kExitOk);
  const json single = json::parse(slurp(sim / "summary.json"));
  CHECK(campaign["trials"][0] == single["summary"]);
}

TEST_CASE("sweep subcommand") {
  TempDir dir;
  const fs::path cfg = write_config(dir.path, json{{"horizon", 300}, {"trials", 3}});
  const fs::path out = dir.path / "sweep.csv";
  REQUIRE(run_cli({"sweep", "--config", cfg.string(), "--param", "delta0", "--grid",
                   "0.1:0.3:0.1", "--out", out.string()}) == kExitOk);
  const auto rows = lines_of(slurp(out));
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].rfind("delta0,0.10000000000000001,3,", 0) == 0);
  CHECK(run_cli({"sweep", "--config", cfg.string(), "--param", "victim", "--grid",
                 "1,2", "--out", out.string()}) == kExitConfig);
  CHECK(run_cli({"sweep", "--config", cfg.string(), "--param", "delta", "--grid",
                 "0.1,0.9", "--out", out.string()}) == kExitConfig);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run_cli({}) == kExitConfig);
  CHECK(run_cli({"simulate"}) == kExitConfig);  // missing --out-dir
  CHECK(run_cli({"simulate", "--config", (dir.path / "missing.json").string(),
                 "--out-dir", dir.path.string()}) == kExitConfig);
  std::ofstream(dir.path / "broken.json") << "{ not json";
  CHECK(run_cli({"simulate", "--config", (dir.path / "broken.json").string(),
                 "--out-dir", dir.path.string()}) == kExitConfig);
  // A regular file where the output directory should go.
  std::ofstream(dir.path / "file") << "x";
  CHECK(run_cli({"simulate", "--horizon", "20", "--out-dir",
                 (dir.path / "file" / "sub").string()}) == kExitIo);
  CHECK(run_cli({"--help"}) == kExitOk);
}
