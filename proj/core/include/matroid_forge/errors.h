// Copyright 2026 The Authors.
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

#ifndef MATROID_FORGE_ERRORS_H_
#define MATROID_FORGE_ERRORS_H_

#include <stdexcept>
#include <string>

#include "matroid_forge/element_set.h"

namespace matroid_forge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A queried set contains elements outside the ground set.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Arguments are individually valid but inconsistent with each other
// (overlapping contract/delete sets, overlapping direct-sum grounds, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An exhaustive procedure was asked to run above its configured threshold.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A set family does not satisfy the independence axioms.
class InvalidMatroidError : public Error {
 public:
  using Error::Error;
};

// An algorithm precondition on its input sets does not hold.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// The "no part-union admits an N-independent base" precondition fails.
class ConditionViolatedError : public Error {
 public:
  ConditionViolatedError(const std::string& what, ElementSet violating_union)
      : Error(what), violating_union_(violating_union) {}
  ElementSet violating_union() const { return violating_union_; }

 private:
  ElementSet violating_union_;
};

// Malformed instance or witness documents. `path` points into the document,
// e.g. "$.M.edges[2]".
class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& message)
      : Error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace matroid_forge

#endif  // MATROID_FORGE_ERRORS_H_
