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

// Exhaustive enumeration of all matroids on {0, ..., n-1} for small n.
//
// Every matroid on n+1 elements is a single-element extension of its deletion
// of element n, and extensions are in bijection with modular cuts (plus the
// empty cut, which adds a coloop). Nonempty modular cuts are in turn in
// bijection with linear subclasses of hyperplanes, which we enumerate as the
// closed sets of a closure operator with Ganter's NextClosure.

#ifndef MATROID_FORGE_ENUMERATE_H_
#define MATROID_FORGE_ENUMERATE_H_

#include <array>
#include <cstdint>
#include <vector>

#include "matroid_forge/element_set.h"
#include "matroid_forge/explicit_matroid.h"

namespace matroid_forge {

inline constexpr int kMaxEnumeratedElements = 8;

// A matroid on {0, ..., n-1}, n <= 8, as a 2^n-bit independence table.
struct SmallMatroid {
  int n = 0;
  std::array<uint64_t, 4> table{};

  bool IsIndependent(uint32_t mask) const {
    return (table[mask >> 6] >> (mask & 63)) & 1;
  }
  void SetIndependent(uint32_t mask) {
    table[mask >> 6] |= uint64_t{1} << (mask & 63);
  }
  int Rank(uint32_t mask) const;
  uint32_t Closure(uint32_t mask) const;

  ExplicitMatroidPtr ToExplicit() const;
  static SmallMatroid FromMatroid(const Matroid& m);

  bool operator==(const SmallMatroid&) const = default;
  auto operator<=>(const SmallMatroid&) const = default;
};

// All single-element extensions of `m` by the new element m.n, each exactly
// once. Throws CapacityError if m.n + 1 exceeds kMaxEnumeratedElements.
std::vector<SmallMatroid> SingleElementExtensions(const SmallMatroid& m);

// Every matroid on n labeled elements. n <= 7.
std::vector<SmallMatroid> EnumerateLabeledMatroids(int n);

// One canonical representative per isomorphism class on n elements. n <= 8.
std::vector<SmallMatroid> EnumerateNonIsomorphicMatroids(int n);

// The lexicographically least relabeling of `m` among relabelings that sort
// elements by an isomorphism invariant; equal for isomorphic inputs.
SmallMatroid CanonicalForm(const SmallMatroid& m);

// Number of permutations of {0..n-1} mapping the independence table to itself.
uint64_t AutomorphismCount(const SmallMatroid& m);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_ENUMERATE_H_
