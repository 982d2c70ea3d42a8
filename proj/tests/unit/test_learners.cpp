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

#include "doctest.h"

#include "bandit_lab/errors.hpp"
#include "bandit_lab/learners.hpp"
#include "bandit_lab/rng.hpp"
#include "oracles/oracles.hpp"

using namespace bandit_lab;

namespace {

LearnerState regret_with(std::vector<double> means, std::vector<std::uint64_t> counts,
                         double sigma) {
  LearnerState s = LearnerState::ucb_regret(means.size(), sigma);
  s.counts = counts;
  for (std::size_t i = 0; i < means.size(); ++i) {
    s.post_sums[i] = means[i] * static_cast<double>(counts[i]);
    s.round += counts[i];
  }
  return s;
}

LearnerState bai_with(std::vector<double> means, std::vector<std::uint64_t> counts,
                      double sigma, double beta) {
  LearnerState s = LearnerState::ucb_bai(means.size(), sigma, beta);
  s.counts = counts;
  for (std::size_t i = 0; i < means.size(); ++i) {
    s.post_sums[i] = means[i] * static_cast<double>(counts[i]);
    s.round += counts[i];
  }
  return s;
}

}  // namespace

TEST_CASE("ucb_select initialization is round robin") {
  LearnerState s = LearnerState::ucb_regret(5, 1.0);
  s.round = 2;
  CHECK(ucb_select(s) == 2);  // arm 3 in 1-based numbering
  LearnerState fresh = LearnerState::ucb_regret(5, 1.0);
  for (Arm expected = 0; expected < 5; ++expected) {
    CHECK(ucb_select(fresh) == expected);
    observe(fresh, expected, 0.0);
  }
}

TEST_CASE("ucb_select exact tie goes to the lowest index") {
  for (double sigma : {0.1, 1.0, 7.0}) {
    CHECK(ucb_select(regret_with({0.0, 0.0}, {1, 1}, sigma)) == 0);
  }
}

TEST_CASE("ucb_select exploration bonus can beat a mean gap") {
  // Indices 2.5775... and 2.7227... (hand evaluation); arm 2 wins.
  const double i1 = 0.5 + 3 * std::sqrt(std::log(11.0) / 5);
  const double i2 = 0.4 + 3 * std::sqrt(std::log(11.0) / 4);
  CHECK(i1 == doctest::Approx(2.5775493955709132).epsilon(1e-12));
  CHECK(i2 == doctest::Approx(2.7227708375550814).epsilon(1e-12));
  LearnerState s = LearnerState::ucb_regret(2, 1.0);
  s.counts = {5, 4};
  s.post_sums = {2.5, 1.6};
  s.round = 10;
  CHECK(ucb_select(s) == 1);
}

TEST_CASE("ucb_select rejects the wrong variant") {
  CHECK_THROWS_AS(ucb_select(LearnerState::ucb_bai(2, 1.0, 2.0)), ContractViolation);
  CHECK_THROWS_AS(bai_select(LearnerState::ucb_regret(2, 1.0)), ContractViolation);
}

TEST_CASE("confidence_radius") {
  // 2 * alpha * ln t = T_i gives radius sigma: alpha = 1/(2 ln 4) * 8 at t = 4.
  const double alpha = 4.0 / std::log(4.0);
  CHECK(confidence_radius(8, 4, alpha, 1.0) == doctest::Approx(1.0).epsilon(1e-15));

  for (std::uint64_t count : {1, 2, 3, 7, 100}) {
    CHECK(confidence_radius(count, 8, 4.0, 1.0) ==
          doctest::Approx(oracle::confidence_radius(count, 8, 4.0, 1.0)).epsilon(1e-14));
  }
  CHECK(confidence_radius(3, 8, 4.0, 1.0) ==
        doctest::Approx(2.3548200450309493).epsilon(1e-14));

  for (std::uint64_t count : {1, 5, 64}) {
    CHECK(confidence_radius(count, 50, 2.0, 0.3) / confidence_radius(2 * count, 50, 2.0, 0.3) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  }
  CHECK(confidence_radius(5, 100, 4.0, 1.0) > confidence_radius(6, 100, 4.0, 1.0));
  CHECK(confidence_radius(5, 101, 4.0, 1.0) > confidence_radius(5, 100, 4.0, 1.0));

  CHECK_THROWS_AS(confidence_radius(1, 1, 4.0, 1.0), ContractViolation);
  CHECK_THROWS_AS(confidence_radius(0, 10, 4.0, 1.0), ContractViolation);
}

TEST_CASE("bai_select") {
  CHECK(bai_select(LearnerState::ucb_bai(3, 1.0, 2.0)) == 0);
  CHECK(bai_select(bai_with({0.3, 0.3, 0.3}, {4, 4, 4}, 0.5, 1.0)) == 0);
  const LearnerState s = bai_with({0.5, 0.45}, {10, 10}, 0.1, 2.0);
  CHECK(s.stop_ratio == 4.0);
  CHECK(bai_select(s) == 0);
  // Fewer pulls means a larger radius.
  CHECK(bai_select(bai_with({0.5, 0.5}, {10, 9}, 0.1, 2.0)) == 1);
}

TEST_CASE("stop ratio override") {
  const LearnerState s = LearnerState::ucb_bai(2, 1.0, 2.0, 9.0);
  CHECK(s.stop_ratio == 9.0);
  CHECK_THROWS_AS(LearnerState::ucb_bai(2, 1.0, 2.0, 0.0), ConfigError);
  CHECK_THROWS_AS(LearnerState::ucb_bai(2, 1.0, -1.0), ConfigError);
}

TEST_CASE("bai_stop_check") {
  auto with_counts = [](std::vector<std::uint64_t> counts, double ratio) {
    LearnerState s = LearnerState::ucb_bai(counts.size(), 1.0, 1.0, ratio);
    s.counts = counts;
    s.post_sums.assign(counts.size(), 0.0);
    for (auto c : counts) s.round += c;
    return bai_stop_check(s);
  };
  StopDecision d = with_counts({10, 1}, 5.0);
  CHECK(d.stopped);
  CHECK(d.winner == Arm{0});
  d = with_counts({9, 2}, 5.0);
  CHECK_FALSE(d.stopped);
  CHECK_FALSE(d.winner.has_value());
  d = with_counts({50, 3, 2}, 9.0);
  CHECK(d.stopped);
  CHECK(d.winner == Arm{0});
  d = with_counts({1, 2, 30}, 9.0);
  CHECK(d.winner == Arm{2});
  // Ratio exactly 1 with equal counts: both arms qualify, lowest index wins.
  d = with_counts({5, 5}, 1.0);
  CHECK(d.winner == Arm{0});

  LearnerState early = LearnerState::ucb_bai(3, 1.0, 2.0);
  early.round = 2;
  early.counts = {1, 1, 0};
  CHECK_THROWS_AS(bai_stop_check(early), ContractViolation);
}

TEST_CASE("at most one arm satisfies the stop rule above ratio 1") {
  Rng rng(Seed{3});
  for (int rep = 0; rep < 2000; ++rep) {
    const std::size_t k = 2 + rep % 5;
    LearnerState s = LearnerState::ucb_bai(k, 1.0, 0.5 + 5 * rng.uniform());
    for (auto& c : s.counts) {
      c = 1 + static_cast<std::uint64_t>(rng.uniform() * (rng.uniform() < 0.3 ? 500 : 10));
      s.round += c;
    }
    const StopDecision d = bai_stop_check(s);  // asserts uniqueness internally
    if (d.stopped) {
      for (Arm i = 0; i < k; ++i) CHECK(s.counts[i] <= s.counts[*d.winner]);
    }
  }
}

TEST_CASE("observe maintains counts, sums and round") {
  LearnerState s = LearnerState::ucb_regret(3, 1.0);
  observe(s, 0, 0.7);
  CHECK(s.counts[0] == 1);
  CHECK(s.empirical_mean(0) == 0.7);
  CHECK(s.round == 1);
  observe(s, 1, 0.4);
  observe(s, 1, 0.6);
  CHECK(s.empirical_mean(1) == doctest::Approx(0.5));
  CHECK(s.round == 3);
  CHECK(s.counts[0] + s.counts[1] + s.counts[2] == s.round);
  CHECK_THROWS_AS(s.empirical_mean(2), ContractViolation);
}

TEST_CASE("selectors are invariant to a common shift of the means") {
  Rng rng(Seed{17});
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t k = 2 + rep % 6;
    std::vector<double> means(k);
    std::vector<std::uint64_t> counts(k);
    for (std::size_t i = 0; i < k; ++i) {
      means[i] = rng.uniform();
      counts[i] = 1 + static_cast<std::uint64_t>(rng.uniform() * 50);
    }
    const double shift = (rng.uniform() - 0.5) * 10;
    std::vector<double> shifted = means;
    for (double& m : shifted) m += shift;

    const LearnerState a = regret_with(means, counts, 0.2);
    const LearnerState b = regret_with(shifted, counts, 0.2);
    const LearnerState c = bai_with(means, counts, 0.2, 1.5);
    const LearnerState d = bai_with(shifted, counts, 0.2, 1.5);

    // Skip draws whose top two indices are within rounding of each other.
    auto margin = [&](const LearnerState& s, auto index) {
      std::vector<double> v(k);
      for (std::size_t i = 0; i < k; ++i) v[i] = index(s, i);
      std::sort(v.begin(), v.end());
      return v[k - 1] - v[k - 2];
    };
    auto ucb_index = [](const LearnerState& s, std::size_t i) {
      const double n = static_cast<double>(s.counts[i]);
      return s.post_sums[i] / n + 3 * s.sigma * std::sqrt(std::log(s.round + 1.0) / n);
    };
    auto bai_index = [](const LearnerState& s, std::size_t i) {
      return s.post_sums[i] / static_cast<double>(s.counts[i]) +
             (1 + s.bai_beta) * oracle::confidence_radius(
                                    static_cast<double>(s.counts[i]),
                                    static_cast<double>(s.round + 1), s.stop_ratio, s.sigma);
    };
    if (margin(a, ucb_index) > 1e-9) {
      CHECK(ucb_select(a) == ucb_select(b));
    }
    if (margin(c, bai_index) > 1e-9) {
      CHECK(bai_select(c) == bai_select(d));
    }
  }
}

TEST_CASE("selector output is a pure function of state") {
  const LearnerState s = bai_with({0.4, 0.6, 0.5}, {3, 7, 2}, 0.3, 2.0);
  const Arm first = bai_select(s);
  for (int i = 0; i < 10; ++i) CHECK(bai_select(s) == first);
}
