// Copyright 2026 The se2form Authors
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

namespace se2form {

// Base class for all library errors that are not plain argument misuse
// (argument misuse throws std::invalid_argument).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scenario or configuration failed validation. Messages carry the field
// path of the offending entry (e.g. "tree[1].offset").
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The formation graph is not a directed tree rooted at vehicle 0.
class TopologyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A formation task falls on an excluded singular geometry: the heading
// offset atan2(omega*x, v - omega*y) is undefined because both arguments
// vanish (e.g. x = 0 with y = v/omega).
class SingularTaskError : public Error {
 public:
  using Error::Error;
};

// A desired relative configuration would require nonzero lateral body
// velocity, which a unicycle cannot realize.
class InfeasibleConfigurationError : public Error {
 public:
  using Error::Error;
};

// The virtual control vector lost its direction (norm at or below the
// degeneracy threshold) and no hold value was available, or the controller
// runs in strict mode.
class DegenerateDirectionError : public Error {
 public:
  using Error::Error;
};

}  // namespace se2form
