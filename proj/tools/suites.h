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

// Exhaustive and seeded-random property suites. Each check compares library
// output against a brute-force oracle computed from independence tables.
// Shared by `matroid-forge selftest` and the acceptance test.

#ifndef MATROID_FORGE_TOOLS_SUITES_H_
#define MATROID_FORGE_TOOLS_SUITES_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matroid_forge/intersection.h"
#include "matroid_forge/zoo.h"
#include "tools/generator.h"

namespace matroid_forge {

struct SuiteReport {
  explicit SuiteReport(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  int64_t cases = 0;
  int64_t failures = 0;
  // The first few failure descriptions.
  std::vector<std::string> examples;

  template <typename Describe>
  void Check(bool passed, Describe describe) {
    ++cases;
    if (!passed) Fail(describe());
  }
  void Fail(const std::string& description);
  void Merge(const SuiteReport& other);
  bool ok() const { return cases > 0 && failures == 0; }
  std::string Summary() const;
};

// Every partition matroid on `ground` with between 1 and `max_parts`
// nonempty parts (as a set partition, parts ordered by least element) and
// every cap vector. An empty ground gives the single partition matroid with
// no parts.
std::vector<PartitionMatroidPtr> AllPartitionMatroids(ElementSet ground,
                                                      int max_parts);

// The k-th instance of the randomized suite.
GeneratorSpec RandomSuiteSpec(uint64_t base_seed, int k);

struct ExhaustiveLemmaReports {
  SuiteReport extend{"extend to maximal"};
  SuiteReport maximal{"maximality characterization"};
  // Pairs satisfying the part-union condition (decided by brute force).
  SuiteReport side{"spanning common base"};
  int64_t pairs = 0;
  int64_t condition_pairs = 0;
};

// Every matroid with at most `max_elements` elements, one per isomorphism
// class, against every partition matroid with at most `max_parts` parts on
// its ground set. For every common independent I, ExtendToMaximalCommon(I)
// must contain I and be maximal, and IsMaximalCommon(I) must agree with
// brute-force maximality. With `check_side`, pairs satisfying the
// part-union condition also run FindSpanningCommonBase for J = {} and for
// one pseudo-random common independent J.
ExhaustiveLemmaReports ExhaustiveLemmaSuite(int max_elements, int max_parts,
                                            bool check_side,
                                            const IntersectionOptions& options);

// Over all labeled matroids with at most `max_elements` elements: the
// exchange definition of uniformity agrees with "every subset is independent
// or spanning", FindExchangeViolation agrees with the exchange oracle, and
// ClassifyUniform agrees with a brute-force classification.
SuiteReport UniformSuite(int max_elements);

// Duals and single-element deletions and contractions of every uniform
// labeled matroid with at most `max_elements` elements are uniform of the
// expected rank.
SuiteReport ClosureSuite(int max_elements);

// Exhaustive kernel properties: rank against brute force, span idempotence
// and monotonicity, span against the contraction definition, rank
// submodularity, minor commutativity, dual involution, and direct-sum rank
// additivity. Runs over every isomorphism class with at most
// `max_enumerated` elements and a fixed family of zoo matroids on
// `zoo_elements` elements. Direct sums pair every two isomorphism classes
// whose sizes add up to at most `zoo_elements`.
SuiteReport KernelSuite(int max_enumerated, int zoo_elements);

struct RandomSuiteReports {
  SuiteReport witness{"witness soundness"};
  SuiteReport optimality{"optimality"};
  SuiteReport side{"spanning common base"};
  int64_t brute_force_checked = 0;
  int64_t condition_pairs = 0;
  int64_t heuristic_runs = 0;
};

// `count` generated instances (all four families, at most 5 parts, at most
// 20 elements). BuildWitness must verify; |I| must equal the augmenting-path
// maximum and the brute-force maximum up to the brute threshold; with
// `check_side`, condition-holding instances run FindSpanningCommonBase.
RandomSuiteReports RandomSuite(int count, uint64_t base_seed, bool check_side,
                               const IntersectionOptions& options);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TOOLS_SUITES_H_
