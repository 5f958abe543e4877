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

// Procedures specific to uniform matroids: recognizing them, the
// independent-or-spanning trichotomy, and the base exchange between an
// arbitrary matroid and a uniform one.

#ifndef MATROID_FORGE_UNIFORM_OPS_H_
#define MATROID_FORGE_UNIFORM_OPS_H_

#include <optional>
#include <string>

#include "matroid_forge/element_set.h"
#include "matroid_forge/matroid.h"
#include "matroid_forge/thresholds.h"
#include "matroid_forge/zoo.h"

namespace matroid_forge {

enum class SubsetKind { kIndependent, kSpanning, kNeither };

const char* SubsetKindName(SubsetKind kind);

// Independent takes precedence when a set is both (i.e. a base).
SubsetKind IndependentOrSpanning(const Matroid& m, ElementSet f);

// I independent, e in I, f outside I, and I - e + f dependent.
struct ExchangeViolation {
  ElementSet independent;
  Element removed;
  Element added;
  bool operator==(const ExchangeViolation&) const = default;
};

// Searches for a violation of the exchange definition of uniformity, trying
// I in increasing mask order and then e, f ascending. Exhaustive; throws
// CapacityError above `threshold`.
std::optional<ExchangeViolation> FindExchangeViolation(
    const Matroid& m, int threshold = Thresholds{}.exhaustive);

struct UniformClass {
  enum class Kind { kFree, kUniformRank, kNotUniform };
  Kind kind = Kind::kFree;
  int rank = 0;  // meaningful for kUniformRank (and kFree: |E|)
  // For kNotUniform: the first subset (increasing mask order) that is neither
  // independent nor spanning.
  ElementSet neither;
  // For kNotUniform: an exchange-definition violation as a second witness.
  std::optional<ExchangeViolation> exchange;

  std::string ToString() const;
};

// Decides uniformity through the independent-or-spanning characterization:
// any subset that is neither refutes it; otherwise the matroid is free when E
// is independent and U_{E,r(E)} otherwise. Throws CapacityError above
// `threshold`.
UniformClass ClassifyUniform(const Matroid& m,
                             int threshold = Thresholds{}.exhaustive);

// Result of exchanging bases between M and a uniform U on the same ground.
struct BaseExchange {
  enum class Side {
    kMIndependentBaseOfU,  // `set` is a base of U that is M-independent
    kUIndependentBaseOfM,  // `set` is a base of M that is U-independent
  };
  Side side;
  ElementSet set;
  bool operator==(const BaseExchange&) const = default;
};

// B := greedy base of M. If |B| <= cap(U), B itself is a U-independent base of
// M. Otherwise B is U-spanning and its first cap(U) elements form an
// M-independent base of U. Throws ArgumentError on a ground mismatch.
BaseExchange BaseExchangeWithUniform(const Matroid& m, const UniformMatroid& u);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_UNIFORM_OPS_H_
