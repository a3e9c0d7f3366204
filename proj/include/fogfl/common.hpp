/*
 * Copyright 2026 The fogfl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOGFL_COMMON_HPP_
#define FOGFL_COMMON_HPP_

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fogfl {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A gradient or model entry became non-finite.
class NumericError : public Error {
 public:
  using Error::Error;
};

// An optimization problem (or one of its surrogates) has no feasible point.
// `binding` names the constraints that could not be satisfied.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::vector<std::string> binding)
      : Error(what), binding_(std::move(binding)) {}
  const std::vector<std::string>& binding() const { return binding_; }

 private:
  std::vector<std::string> binding_;
};

// An emitted decision breaks one of the original constraints, or an
// iterative method broke its own monotonicity contract.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed or invalid run configuration. The message carries the key path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

inline double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Identifies a user by fog server and by its global index in the network.
struct UeId {
  int fog = 0;
  int index = 0;
  bool operator==(const UeId&) const = default;
};

}  // namespace fogfl

#endif  // FOGFL_COMMON_HPP_
