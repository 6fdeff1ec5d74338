// Copyright 2026 The secalloc Authors
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

#ifndef SECALLOC_ERRORS_H_
#define SECALLOC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace secalloc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A selection references a technology outside the instance or repeats one.
class InvalidSelectionError : public Error {
 public:
  using Error::Error;
};

// Instance data violates a structural invariant (dimensions, negative cost).
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

// A previous-period archive is not valid for the next period's instance.
class StaleArchiveError : public Error {
 public:
  using Error::Error;
};

// Malformed scenario or archive document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Scenario generation could not cover a vulnerability.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the instance is too large.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

// Out-of-range or inconsistent solver/generator parameters.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace secalloc

#endif  // SECALLOC_ERRORS_H_
