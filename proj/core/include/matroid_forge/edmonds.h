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

// Classical two-matroid intersection, used as an independent oracle for the
// witnesses built in intersection.h.

#ifndef MATROID_FORGE_EDMONDS_H_
#define MATROID_FORGE_EDMONDS_H_

#include <vector>

#include "matroid_forge/element_set.h"
#include "matroid_forge/matroid.h"
#include "matroid_forge/thresholds.h"

namespace matroid_forge {

// Exchange graph of a common independent set I of (M1, M2).
//   y -> z  (y in I, z not in I)  iff  I - y + z is M1-independent
//   z -> y                        iff  I - y + z is M2-independent
//   sources = { z not in I : I + z is M1-independent }
//   sinks   = { z not in I : I + z is M2-independent }
struct ExchangeGraph {
  ElementSet current;
  ElementSet sources;
  ElementSet sinks;
  // successors[e] for every element id; empty for ids outside the ground.
  std::vector<ElementSet> successors;

  static ExchangeGraph Build(const Matroid& m1, const Matroid& m2,
                             ElementSet current);

  // Elements reachable from the sources (sources included).
  ElementSet ReachableFromSources() const;

  // Lexicographically least among the shortest source-to-sink paths, or an
  // empty vector if no sink is reachable.
  std::vector<Element> ShortestPath() const;
};

// A common independent set together with a set A proving it has maximum
// size: rank_M1(A) + rank_M2(E - A) = |common|.
struct CertifiedOptimum {
  ElementSet common;
  ElementSet certificate;
  // |common| after each augmentation, starting from 0.
  std::vector<int> phase_sizes;
};

// Shortest-augmenting-path matroid intersection from I = {}. The certificate
// is the set of elements NOT reachable from the sources in the final exchange
// graph. Throws ArgumentError if the ground sets differ.
CertifiedOptimum MaxCommonIndependent(const Matroid& m1, const Matroid& m2);

// Lexicographically least maximum common independent set, by enumerating
// every subset. Throws CapacityError above `threshold` elements.
ElementSet BruteForceMaxCommon(const Matroid& m1, const Matroid& m2,
                               int threshold = Thresholds{}.brute_force);

// rank_M1(A) + rank_M2(E - A) == |common|. By weak duality this proves that
// a common independent set of that size is maximum.
bool Certify(const Matroid& m1, const Matroid& m2, ElementSet common,
             ElementSet certificate);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_EDMONDS_H_
