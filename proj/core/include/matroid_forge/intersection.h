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

// Intersection-property witnesses for a pair (M, N) where N is a direct sum
// of uniform matroids.
//
// A witness is a common independent set I = I_M ⊔ I_N with
// span_M(I_M) ∪ span_N(I_N) = E. It is built by induction on the number of
// parts of N:
//
//  * If some nonempty union W of parts has an M↾W-base B that is
//    N-independent, recurse on (M/W, N−W) and add B to the M side.
//  * Otherwise an M-independent base of N exists (FindSpanningCommonBase) and
//    is a witness with empty M side.

#ifndef MATROID_FORGE_INTERSECTION_H_
#define MATROID_FORGE_INTERSECTION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroid_forge/element_set.h"
#include "matroid_forge/matroid.h"
#include "matroid_forge/thresholds.h"
#include "matroid_forge/zoo.h"

namespace matroid_forge {

// Indices of parts of a PartitionMatroid (bit i = part i).
using PartIndexSet = ElementSet;

struct Witness {
  ElementSet common;  // I
  ElementSet m_side;  // I_M
  ElementSet n_side;  // I_N
  bool operator==(const Witness&) const = default;
};

struct IntersectionOptions {
  Thresholds thresholds;
  // Seeds the randomized element orders of the heuristic Θ search.
  uint64_t heuristic_seed = 0x6d666f7267650001;
};

// One step of the recursion, for --trace output.
struct TraceEvent {
  int depth = 0;
  std::string step;
  std::vector<std::pair<std::string, ElementSet>> sets;
};

struct RunLog {
  std::vector<TraceEvent> events;
  // Set when some Θ search ran above the exact threshold.
  bool heuristic_theta = false;
  // Set when a heuristic result failed its postconditions and the search was
  // repeated exhaustively.
  bool exact_fallback = false;
};

// Throws InvalidInputError unless `i` is independent in both matroids, and
// ArgumentError unless the ground sets agree.
void CheckCommonIndependent(const Matroid& m, const PartitionMatroid& n,
                            ElementSet i, const char* op);

// Extends a common independent set to a maximal one, part by part: for part
// i, exchange bases between (M/I)↾(E_i − I) and U_i/(I ∩ E_i) and add the
// returned set to I.
ElementSet ExtendToMaximalCommon(const MatroidPtr& m, const PartitionMatroid& n,
                                 ElementSet i);

// True iff every part is spanned by I in M or in N. For a common independent
// I this is equivalent to maximality among common independent sets.
bool IsMaximalCommon(const Matroid& m, const PartitionMatroid& n, ElementSet i);

struct ConditionReport {
  bool holds = true;
  // Present when `holds` is false: the first violating union (in increasing
  // part-bitmask order) and an N-independent base of M↾W.
  std::optional<PartIndexSet> violating_parts;
  std::optional<ElementSet> violating_union;
  std::optional<ElementSet> base;
};

// Tests that no nonempty union W of parts has an N-independent base of M↾W,
// deciding each W by matroid intersection on (M↾W, N↾W).
ConditionReport CheckPartUnionCondition(const MatroidPtr& m,
                                        const PartitionMatroid& n);

// { i : E_i ⊆ span_M(I) }.
PartIndexSet Theta(const Matroid& m, const PartitionMatroid& n, ElementSet i);

struct ThetaResult {
  ElementSet common;
  PartIndexSet theta;
  bool exact = true;
  int improvements = 0;
};

// Starting from I := J, repeatedly replaces I by a common independent K with
// span_M(K) ⊇ I and Θ(K) ⊋ Θ(I) until none exists. Up to the theta threshold
// the search for K is exhaustive and returns the canonically least K; above
// it, randomized greedy restarts are tried and `exact` is false.
ThetaResult MaximizeTheta(const Matroid& m, const PartitionMatroid& n,
                          ElementSet j, const IntersectionOptions& options = {},
                          RunLog* log = nullptr);

struct SideResult {
  ElementSet base;
  bool exact = true;
};

// For a common independent J, returns an M-independent base B of N with
// J ⊆ span_M(B). Requires CheckPartUnionCondition to hold; otherwise throws
// ConditionViolatedError carrying the violating union.
SideResult FindSpanningCommonBase(const MatroidPtr& m,
                                  const PartitionMatroid& n, ElementSet j,
                                  const IntersectionOptions& options = {},
                                  RunLog* log = nullptr);

// Builds an intersection-property witness. Throws ArgumentError if the ground
// sets differ.
Witness BuildWitness(const MatroidPtr& m, const PartitionMatroid& n,
                     const IntersectionOptions& options = {},
                     RunLog* log = nullptr);

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  // span_M(I_M), when computable.
  std::optional<ElementSet> certificate;

  bool ok() const;
  std::string ToString() const;
};

// Checks bipartition, double independence, the span cover, and the min-max
// equality rank_M(A) + rank_N(E − A) = |I| for A = span_M(I_M). Failures are
// report entries; nothing throws.
VerificationReport VerifyWitness(const Matroid& m, const PartitionMatroid& n,
                                 const Witness& w);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_INTERSECTION_H_
