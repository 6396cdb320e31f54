// Copyright 2026 The Parcoh Authors
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

#ifndef PARCOH_ERRORS_H_
#define PARCOH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace parcoh {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range indices, missing entries, bad files.
// Distinct from an axiom violation, which is reported, not thrown.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A word was passed where a domain word was required.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An operation would need simplices above the stored truncation degree.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A brute-force search would exceed the configured element bound.
class SearchBoundError : public Error {
 public:
  using Error::Error;
};

// Two composable maps of abelian groups do not compose to zero.
class ComplexError : public Error {
 public:
  using Error::Error;
};

// An operation's mathematical precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace parcoh

#endif  // PARCOH_ERRORS_H_
