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

#ifndef MATROID_FORGE_EXPLICIT_MATROID_H_
#define MATROID_FORGE_EXPLICIT_MATROID_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matroid_forge/element_set.h"
#include "matroid_forge/matroid.h"
#include "matroid_forge/thresholds.h"

namespace matroid_forge {

enum class Axiom {
  kOutsideGround,     // a member is not a subset of the ground set
  kContainsEmpty,     // (i)
  kDownwardClosed,    // (ii)
  kAugmentation,      // (iii)
  kMaximalExtension,  // (iv)
};

const char* AxiomName(Axiom axiom);

// A violated axiom with its witness sets. For kDownwardClosed, `first` is the
// missing subset and `second` the member containing it; for kAugmentation,
// `first` is the non-maximal I and `second` the maximal J that fails to
// augment it.
struct AxiomViolation {
  Axiom axiom;
  ElementSet first;
  ElementSet second;
  std::optional<ElementSet> restriction;  // X, for kMaximalExtension

  std::string ToString() const;
  bool operator==(const AxiomViolation&) const = default;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  bool Violates(Axiom axiom) const;
  std::string ToString() const;
};

// Checks the independence axioms for `family` over `ground`, reporting at most
// one witness per violated axiom. Throws CapacityError when the ground set has
// more than `threshold` elements; violations are returned as data.
AxiomReport CheckAxioms(ElementSet ground, const std::vector<ElementSet>& family,
                        int threshold = Thresholds{}.axioms);

// Largest ground set an ExplicitMatroid accepts; the oracle is a dense bitmap
// indexed by subset mask.
inline constexpr int kMaxExplicitElement = 24;

// A matroid given by its full family of independent sets.
class ExplicitMatroid final : public Matroid {
 public:
  // Validates the family with CheckAxioms; throws InvalidMatroidError on any
  // violation and CapacityError if an element exceeds kMaxExplicitElement.
  static std::shared_ptr<const ExplicitMatroid> Create(
      ElementSet ground, std::vector<ElementSet> independent_sets);

  // For generators that construct valid families by design.
  static std::shared_ptr<const ExplicitMatroid> CreateUnchecked(
      ElementSet ground, std::vector<ElementSet> independent_sets);

  // Snapshot of any matroid's independence predicate.
  static std::shared_ptr<const ExplicitMatroid> Materialize(const Matroid& m);

  // Canonically ordered.
  const std::vector<ElementSet>& independent_sets() const { return family_; }
  std::string Describe() const override;

  // Required by make_shared; use the factories.
  struct Token {};
  ExplicitMatroid(Token, ElementSet ground, std::vector<ElementSet> family);

 protected:
  bool Independent(ElementSet s) const override {
    const uint64_t m = s.mask();
    return (bitmap_[m >> 6] >> (m & 63)) & 1;
  }

 private:
  std::vector<ElementSet> family_;
  std::vector<uint64_t> bitmap_;
};

using ExplicitMatroidPtr = std::shared_ptr<const ExplicitMatroid>;

// Bases of the dual are the complements of bases of `m`. Re-validates the
// input family and throws InvalidMatroidError if it is not a matroid.
ExplicitMatroidPtr Dual(const ExplicitMatroid& m);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_EXPLICIT_MATROID_H_
