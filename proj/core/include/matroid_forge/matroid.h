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

#ifndef MATROID_FORGE_MATROID_H_
#define MATROID_FORGE_MATROID_H_

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid_forge/element_set.h"
#include "matroid_forge/thresholds.h"

namespace matroid_forge {

// Thread-safe bounded memo from subset encoding to rank. Once `capacity`
// entries are stored, further results are computed but not recorded.
class RankCache {
 public:
  explicit RankCache(std::size_t capacity) : capacity_(capacity) {}

  bool Lookup(ElementSet key, int* rank) const;
  void Store(ElementSet key, int rank) const;
  std::size_t capacity() const { return capacity_; }
  std::size_t size() const;

 private:
  std::size_t capacity_;
  mutable std::mutex mu_;
  mutable std::unordered_map<uint64_t, int> entries_;
};

// A finite matroid given by its ground set and an independence oracle.
//
// Instances are immutable after construction and all queries are pure, so a
// matroid may be shared across threads. The only internal state is the rank
// memo, which is internally synchronized.
//
// Every public query validates that its argument lies inside the ground set
// and throws DomainError otherwise.
class Matroid {
 public:
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  ElementSet ground() const { return ground_; }

  bool IsIndependent(ElementSet s) const;

  int Rank(ElementSet x) const;
  int Rank() const { return Rank(ground_); }

  // Greedy scan of `x` in ascending order, keeping e whenever the current set
  // plus e stays independent. The result is a maximal independent subset.
  ElementSet MaxIndependentSubset(ElementSet x) const;

  // Same greedy scan, but seeded with the independent set `seed`. The result
  // is a maximal independent subset of seed ∪ x containing seed.
  ElementSet ExtendIndependent(ElementSet seed, ElementSet x) const;

  // x plus every e with rank(x + e) = rank(x).
  ElementSet Span(ElementSet x) const;

  // target ⊆ span(x), without materializing the whole span.
  bool Spans(ElementSet x, ElementSet target) const;

  bool IsSpanning(ElementSet x) const { return Spans(x, ground_); }
  bool IsBase(ElementSet x) const;

  virtual std::string Describe() const = 0;

  // Rank memo capacity used by matroids constructed afterwards. Zero disables
  // memoization for new instances.
  static void SetDefaultRankCacheCapacity(std::size_t capacity);
  static std::size_t DefaultRankCacheCapacity();

 protected:
  // `memoize_rank` should be set by families whose independence oracle is
  // expensive relative to a hash lookup.
  Matroid(ElementSet ground, bool memoize_rank);

  // `s` is guaranteed to be a subset of the ground set.
  virtual bool Independent(ElementSet s) const = 0;
  virtual int ComputeRank(ElementSet x) const;
  virtual ElementSet ComputeSpan(ElementSet x) const;

  // Lets derived classes consult the oracle of another matroid.
  static bool IndependentIn(const Matroid& m, ElementSet s) {
    return m.Independent(s);
  }

  void CheckDomain(ElementSet s, const char* op) const;

 private:
  ElementSet Greedy(ElementSet seed, ElementSet x) const;

  ElementSet ground_;
  std::unique_ptr<RankCache> cache_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// M/X − D realized against a fixed basis of X. `base` is never itself a minor:
// nested minors are flattened onto the underlying matroid.
struct MinorSpec {
  MatroidPtr base;
  ElementSet contracted;
  ElementSet contracted_basis;
  ElementSet deleted;
};

class MinorMatroid final : public Matroid {
 public:
  explicit MinorMatroid(MinorSpec spec);

  const MinorSpec& spec() const { return spec_; }
  std::string Describe() const override;

 protected:
  bool Independent(ElementSet s) const override;

 private:
  MinorSpec spec_;
};

// M/contract − del, with the contracted basis chosen by MaxIndependentSubset.
// Throws ArgumentError if contract and del overlap, DomainError if either
// leaves the ground set.
std::shared_ptr<const MinorMatroid> Minor(const MatroidPtr& m,
                                          ElementSet contract, ElementSet del);

// As Minor, with a caller-chosen basis of `contract`. Throws ArgumentError if
// `basis` is not a maximal independent subset of `contract`.
std::shared_ptr<const MinorMatroid> MinorWithBasis(const MatroidPtr& m,
                                                   ElementSet contract,
                                                   ElementSet basis,
                                                   ElementSet del);

inline std::shared_ptr<const MinorMatroid> Restrict(const MatroidPtr& m,
                                                    ElementSet keep) {
  return Minor(m, ElementSet(), m->ground() - keep);
}
inline std::shared_ptr<const MinorMatroid> Contract(const MatroidPtr& m,
                                                    ElementSet x) {
  return Minor(m, x, ElementSet());
}
inline std::shared_ptr<const MinorMatroid> Delete(const MatroidPtr& m,
                                                  ElementSet x) {
  return Minor(m, ElementSet(), x);
}

class DirectSumMatroid final : public Matroid {
 public:
  // Throws ArgumentError on overlapping grounds.
  explicit DirectSumMatroid(std::vector<MatroidPtr> parts);

  const std::vector<MatroidPtr>& parts() const { return parts_; }
  std::string Describe() const override;

 protected:
  bool Independent(ElementSet s) const override;
  int ComputeRank(ElementSet x) const override;

 private:
  std::vector<MatroidPtr> parts_;
};

inline std::shared_ptr<const DirectSumMatroid> DirectSum(
    std::vector<MatroidPtr> parts) {
  return std::make_shared<const DirectSumMatroid>(std::move(parts));
}

// All minimal dependent sets in canonical order. Throws CapacityError when the
// ground set has more than `threshold` elements.
std::vector<ElementSet> Circuits(const Matroid& m, int threshold =
                                                       Thresholds{}.exhaustive);

// Every maximal independent set, canonical order. Same capacity rule.
std::vector<ElementSet> Bases(const Matroid& m,
                              int threshold = Thresholds{}.exhaustive);

// True iff both matroids have the same ground set and agree on every subset.
// Exhaustive; throws CapacityError above `threshold`.
bool SameIndependence(const Matroid& a, const Matroid& b,
                      int threshold = Thresholds{}.brute_force);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_MATROID_H_
