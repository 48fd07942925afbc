// Copyright 2026 The graphchi Authors.
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

namespace graphchi {

// Bad input from a caller: mismatched variables, odd matching sizes, unknown names.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation undefined on this input, e.g. exp of a series with a nonzero constant term.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Coefficient access past a truncation cap, or an enumeration cap exceeded.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An internal invariant broke. Always a bug or an unsound truncation.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace graphchi
