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

#include "matroid_forge/matroid.h"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <utility>

#include "matroid_forge/errors.h"

namespace matroid_forge {
namespace {

std::atomic<std::size_t> default_cache_capacity{kDefaultRankCacheCapacity};

void CheckCapacity(const Matroid& m, int threshold, const char* op) {
  if (m.ground().size() > threshold) {
    std::ostringstream os;
    os << op << ": ground set has " << m.ground().size()
       << " elements, above the exhaustive threshold " << threshold;
    throw CapacityError(os.str());
  }
}

}  // namespace

bool RankCache::Lookup(ElementSet key, int* rank) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key.mask());
  if (it == entries_.end()) return false;
  *rank = it->second;
  return true;
}

void RankCache::Store(ElementSet key, int rank) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (entries_.size() >= capacity_) return;
  entries_.emplace(key.mask(), rank);
}

std::size_t RankCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

Matroid::Matroid(ElementSet ground, bool memoize_rank) : ground_(ground) {
  const std::size_t capacity = default_cache_capacity.load();
  if (memoize_rank && capacity > 0) {
    cache_ = std::make_unique<RankCache>(capacity);
  }
}

void Matroid::SetDefaultRankCacheCapacity(std::size_t capacity) {
  default_cache_capacity.store(capacity);
}

std::size_t Matroid::DefaultRankCacheCapacity() {
  return default_cache_capacity.load();
}

void Matroid::CheckDomain(ElementSet s, const char* op) const {
  if (!s.IsSubsetOf(ground_)) {
    std::ostringstream os;
    os << op << ": elements " << (s - ground_).ToString()
       << " are outside the ground set " << ground_.ToString();
    throw DomainError(os.str());
  }
}

bool Matroid::IsIndependent(ElementSet s) const {
  CheckDomain(s, "IsIndependent");
  return Independent(s);
}

ElementSet Matroid::Greedy(ElementSet seed, ElementSet x) const {
  ElementSet current = seed;
  for (Element e : x - seed) {
    if (Independent(current.With(e))) current.Insert(e);
  }
  return current;
}

int Matroid::ComputeRank(ElementSet x) const {
  return Greedy(ElementSet(), x).size();
}

ElementSet Matroid::ComputeSpan(ElementSet x) const {
  const ElementSet basis = Greedy(ElementSet(), x);
  ElementSet span = x;
  // rank(basis + e) = rank(basis) iff basis + e is dependent.
  for (Element e : ground_ - x) {
    if (!Independent(basis.With(e))) span.Insert(e);
  }
  return span;
}

int Matroid::Rank(ElementSet x) const {
  CheckDomain(x, "Rank");
  int rank = 0;
  if (cache_ && cache_->Lookup(x, &rank)) return rank;
  rank = ComputeRank(x);
  if (cache_) cache_->Store(x, rank);
  return rank;
}

ElementSet Matroid::MaxIndependentSubset(ElementSet x) const {
  CheckDomain(x, "MaxIndependentSubset");
  return Greedy(ElementSet(), x);
}

ElementSet Matroid::ExtendIndependent(ElementSet seed, ElementSet x) const {
  CheckDomain(seed | x, "ExtendIndependent");
  return Greedy(seed, x);
}

ElementSet Matroid::Span(ElementSet x) const {
  CheckDomain(x, "Span");
  return ComputeSpan(x);
}

bool Matroid::Spans(ElementSet x, ElementSet target) const {
  CheckDomain(x | target, "Spans");
  if (target.IsSubsetOf(x)) return true;
  const ElementSet basis = Greedy(ElementSet(), x);
  for (Element e : target - x) {
    if (Independent(basis.With(e))) return false;
  }
  return true;
}

bool Matroid::IsBase(ElementSet x) const {
  CheckDomain(x, "IsBase");
  if (!Independent(x)) return false;
  for (Element e : ground_ - x) {
    if (Independent(x.With(e))) return false;
  }
  return true;
}

MinorMatroid::MinorMatroid(MinorSpec spec)
    : Matroid(spec.base->ground() - spec.contracted - spec.deleted,
              /*memoize_rank=*/true),
      spec_(std::move(spec)) {}

bool MinorMatroid::Independent(ElementSet s) const {
  return IndependentIn(*spec_.base, s | spec_.contracted_basis);
}

std::string MinorMatroid::Describe() const {
  std::ostringstream os;
  os << "(" << spec_.base->Describe() << ")";
  if (!spec_.contracted.empty()) os << " / " << spec_.contracted.ToString();
  if (!spec_.deleted.empty()) os << " - " << spec_.deleted.ToString();
  return os.str();
}

namespace {

void ValidateMinorArgs(const Matroid& m, ElementSet contract, ElementSet del) {
  if (contract.Intersects(del)) {
    throw ArgumentError("Minor: contract and delete sets overlap in " +
                        (contract & del).ToString());
  }
  if (!(contract | del).IsSubsetOf(m.ground())) {
    throw DomainError("Minor: elements " +
                      ((contract | del) - m.ground()).ToString() +
                      " are outside the ground set");
  }
}

std::shared_ptr<const MinorMatroid> BuildMinor(const MatroidPtr& m,
                                               ElementSet contract,
                                               ElementSet basis,
                                               ElementSet del) {
  if (auto* inner = dynamic_cast<const MinorMatroid*>(m.get())) {
    // (B/X1 − D1)/X2 − D2 = B/(X1 ∪ X2) − (D1 ∪ D2), with basis B1 ∪ B2.
    const MinorSpec& s = inner->spec();
    return std::make_shared<const MinorMatroid>(
        MinorSpec{s.base, s.contracted | contract, s.contracted_basis | basis,
                  s.deleted | del});
  }
  return std::make_shared<const MinorMatroid>(
      MinorSpec{m, contract, basis, del});
}

}  // namespace

std::shared_ptr<const MinorMatroid> Minor(const MatroidPtr& m,
                                          ElementSet contract, ElementSet del) {
  ValidateMinorArgs(*m, contract, del);
  return BuildMinor(m, contract, m->MaxIndependentSubset(contract), del);
}

std::shared_ptr<const MinorMatroid> MinorWithBasis(const MatroidPtr& m,
                                                   ElementSet contract,
                                                   ElementSet basis,
                                                   ElementSet del) {
  ValidateMinorArgs(*m, contract, del);
  if (!basis.IsSubsetOf(contract) || !m->IsIndependent(basis) ||
      m->Rank(contract) != basis.size()) {
    throw ArgumentError("MinorWithBasis: " + basis.ToString() +
                        " is not a maximal independent subset of " +
                        contract.ToString());
  }
  return BuildMinor(m, contract, basis, del);
}

namespace {

ElementSet UnionOfGrounds(const std::vector<MatroidPtr>& parts) {
  ElementSet all;
  for (const auto& p : parts) {
    if (all.Intersects(p->ground())) {
      throw ArgumentError("DirectSum: ground sets overlap in " +
                          (all & p->ground()).ToString());
    }
    all |= p->ground();
  }
  return all;
}

}  // namespace

DirectSumMatroid::DirectSumMatroid(std::vector<MatroidPtr> parts)
    : Matroid(UnionOfGrounds(parts), /*memoize_rank=*/false),
      parts_(std::move(parts)) {}

bool DirectSumMatroid::Independent(ElementSet s) const {
  return std::all_of(parts_.begin(), parts_.end(), [&](const MatroidPtr& p) {
    return IndependentIn(*p, s & p->ground());
  });
}

int DirectSumMatroid::ComputeRank(ElementSet x) const {
  int total = 0;
  for (const auto& p : parts_) total += p->Rank(x & p->ground());
  return total;
}

std::string DirectSumMatroid::Describe() const {
  if (parts_.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += " (+) ";
    out += parts_[i]->Describe();
  }
  return out;
}

std::vector<ElementSet> Circuits(const Matroid& m, int threshold) {
  CheckCapacity(m, threshold, "Circuits");
  std::vector<ElementSet> circuits;
  ForEachSubset(m.ground(), [&](ElementSet s) {
    if (s.empty() || m.IsIndependent(s)) return;
    for (Element e : s) {
      if (!m.IsIndependent(s.Without(e))) return;
    }
    circuits.push_back(s);
  });
  Canonicalize(circuits);
  return circuits;
}

std::vector<ElementSet> Bases(const Matroid& m, int threshold) {
  CheckCapacity(m, threshold, "Bases");
  const int rank = m.Rank();
  std::vector<ElementSet> bases;
  ForEachSubset(m.ground(), [&](ElementSet s) {
    if (s.size() == rank && m.IsIndependent(s)) bases.push_back(s);
  });
  Canonicalize(bases);
  return bases;
}

bool SameIndependence(const Matroid& a, const Matroid& b, int threshold) {
  if (a.ground() != b.ground()) return false;
  CheckCapacity(a, threshold, "SameIndependence");
  bool same = true;
  ForEachSubset(a.ground(), [&](ElementSet s) {
    if (same && a.IsIndependent(s) != b.IsIndependent(s)) same = false;
  });
  return same;
}

}  // namespace matroid_forge
