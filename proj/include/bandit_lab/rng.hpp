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

#ifndef BANDIT_LAB_RNG_HPP_
#define BANDIT_LAB_RNG_HPP_

#include <cstdint>
#include <random>

namespace bandit_lab {

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used only for seed mixing.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for trial `index` of a campaign:
//   splitmix64(campaign ^ splitmix64(index + 1)).
Seed trial_seed(Seed campaign, std::uint64_t index);

/// Reward random stream.
///
/// The bit generator is std::mt19937_64, whose output sequence is fixed by
/// the C++ standard for a given 64-bit seed. The distribution transforms
/// are implemented here instead of with <random> distributions (whose
/// algorithms are implementation-defined), so streams replay identically on
/// every conforming toolchain with IEEE-754 doubles:
///   - uniform(): top 53 bits of one draw, scaled to [0, 1).
///   - normal():  Marsaglia polar method; the second variate of each
///                accepted pair is cached and returned by the next call.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  double uniform();
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bandit_lab

#endif  // BANDIT_LAB_RNG_HPP_
