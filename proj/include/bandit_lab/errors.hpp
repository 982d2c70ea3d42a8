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

#ifndef BANDIT_LAB_ERRORS_HPP_
#define BANDIT_LAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bandit_lab {

// Invalid user-facing configuration (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bound whose formula divides by delta0^2 was requested with delta0 = 0.
class UndefinedBound : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// The sample-complexity solver refuses to run below the delta0 threshold,
// where f(t) is not guaranteed monotone.
class ThresholdRefusal : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// A caller broke a documented precondition (programming error).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Output could not be written (CLI exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace bandit_lab

#endif  // BANDIT_LAB_ERRORS_HPP_
