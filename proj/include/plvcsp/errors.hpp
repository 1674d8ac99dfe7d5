// Copyright 2026 The plvcsp Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace plvcsp {

// Caller violated a documented precondition (dimension mismatch, index out
// of range, constant polynomial where a hyperplane is required, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance breaks the PL cost function contract, e.g. two overlapping
// pieces assign different values to the same point.
class InvalidInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance document (syntax, missing field, bad token).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed document whose content is inconsistent (bad dimension or
// index, zero denominator, coefficient list of the wrong length).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver invariant failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace plvcsp
