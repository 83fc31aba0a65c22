// Copyright 2026 The SwarmGuard Authors.
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

#ifndef SWARMGUARD_ERRORS_HPP_
#define SWARMGUARD_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swarmguard {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `field()` names the offending key path.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class VersionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive oracle would exceed its configured enumeration cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::uint64_t cap)
      : Error(what + " (enumeration cap " + std::to_string(cap) + ")"),
        detail_(what),
        cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }
  // Same error with `prefix` prepended to the message.
  CapacityError in_context(const std::string& prefix) const {
    return CapacityError(prefix + detail_, cap_);
  }

 private:
  std::string detail_;
  std::uint64_t cap_;
};

// A set of actions holds two actions of the same robot.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// Kalman state or motion model violates its symmetric-PSD invariant.
class InvalidState : public Error {
 public:
  using Error::Error;
};

}  // namespace swarmguard

#endif  // SWARMGUARD_ERRORS_HPP_
