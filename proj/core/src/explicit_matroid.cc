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

#include "matroid_forge/explicit_matroid.h"

#include <sstream>
#include <unordered_set>
#include <utility>

#include "matroid_forge/errors.h"

namespace matroid_forge {

const char* AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kOutsideGround:
      return "outside-ground";
    case Axiom::kContainsEmpty:
      return "(i) empty set independent";
    case Axiom::kDownwardClosed:
      return "(ii) downward closed";
    case Axiom::kAugmentation:
      return "(iii) augmentation towards a maximal set";
    case Axiom::kMaximalExtension:
      return "(iv) extension to a maximal subset";
  }
  return "unknown";
}

std::string AxiomViolation::ToString() const {
  std::ostringstream os;
  os << AxiomName(axiom);
  switch (axiom) {
    case Axiom::kOutsideGround:
      os << ": member " << first.ToString() << " leaves the ground set";
      break;
    case Axiom::kContainsEmpty:
      os << ": {} is not a member";
      break;
    case Axiom::kDownwardClosed:
      os << ": " << first.ToString() << " is a subset of member "
         << second.ToString() << " but not a member";
      break;
    case Axiom::kAugmentation:
      os << ": non-maximal " << first.ToString()
         << " cannot be augmented from maximal " << second.ToString();
      break;
    case Axiom::kMaximalExtension:
      os << ": " << first.ToString() << " does not extend to a maximal member"
         << " inside " << restriction.value_or(ElementSet()).ToString();
      break;
  }
  return os.str();
}

bool AxiomReport::Violates(Axiom axiom) const {
  for (const auto& v : violations) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

std::string AxiomReport::ToString() const {
  if (ok()) return "all axioms hold";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.ToString();
  }
  return out;
}

AxiomReport CheckAxioms(ElementSet ground,
                        const std::vector<ElementSet>& family, int threshold) {
  if (ground.size() > threshold) {
    std::ostringstream os;
    os << "CheckAxioms: ground set has " << ground.size()
       << " elements, above the threshold " << threshold;
    throw CapacityError(os.str());
  }
  AxiomReport report;
  std::vector<ElementSet> members(family);
  Canonicalize(members);

  for (ElementSet s : members) {
    if (!s.IsSubsetOf(ground)) {
      report.violations.push_back({Axiom::kOutsideGround, s, ground, {}});
      break;
    }
  }
  std::unordered_set<uint64_t> lookup;
  lookup.reserve(members.size() * 2);
  for (ElementSet s : members) lookup.insert(s.mask());
  auto contains = [&](ElementSet s) { return lookup.count(s.mask()) > 0; };

  if (!contains(ElementSet())) {
    report.violations.push_back({Axiom::kContainsEmpty, {}, {}, {}});
  }

  // Closure under single-element removal implies closure under subsets.
  bool found = false;
  for (ElementSet s : members) {
    for (Element e : s) {
      if (!contains(s.Without(e))) {
        report.violations.push_back(
            {Axiom::kDownwardClosed, s.Without(e), s, {}});
        found = true;
        break;
      }
    }
    if (found) break;
  }

  std::vector<ElementSet> maximal;
  std::vector<ElementSet> non_maximal;
  for (ElementSet s : members) {
    if (!s.IsSubsetOf(ground)) continue;
    bool is_max = true;
    for (Element e : ground - s) {
      if (contains(s.With(e))) {
        is_max = false;
        break;
      }
    }
    (is_max ? maximal : non_maximal).push_back(s);
  }
  found = false;
  for (ElementSet i : non_maximal) {
    for (ElementSet j : maximal) {
      bool augments = false;
      for (Element e : j - i) {
        if (contains(i.With(e))) {
          augments = true;
          break;
        }
      }
      if (!augments) {
        report.violations.push_back({Axiom::kAugmentation, i, j, {}});
        found = true;
        break;
      }
    }
    if (found) break;
  }
  // (iv) holds for every family over a finite ground set: any chain of
  // members inside X is bounded by |X|.
  return report;
}

ExplicitMatroid::ExplicitMatroid(Token, ElementSet ground,
                                 std::vector<ElementSet> family)
    : Matroid(ground, /*memoize_rank=*/false), family_(std::move(family)) {
  const int top = ground.empty() ? 0 : ground.Max() + 1;
  bitmap_.assign(((uint64_t{1} << top) + 63) / 64, 0);
  for (ElementSet s : family_) {
    if (!s.IsSubsetOf(ground)) continue;
    bitmap_[s.mask() >> 6] |= uint64_t{1} << (s.mask() & 63);
  }
}

namespace {

void CheckExplicitCapacity(ElementSet ground) {
  if (!ground.empty() && ground.Max() > kMaxExplicitElement) {
    throw CapacityError("ExplicitMatroid: element " +
                        std::to_string(ground.Max()) + " exceeds the limit " +
                        std::to_string(kMaxExplicitElement));
  }
}

}  // namespace

std::shared_ptr<const ExplicitMatroid> ExplicitMatroid::Create(
    ElementSet ground, std::vector<ElementSet> independent_sets) {
  CheckExplicitCapacity(ground);
  Canonicalize(independent_sets);
  const AxiomReport report =
      CheckAxioms(ground, independent_sets, kMaxExplicitElement + 1);
  if (!report.ok()) {
    throw InvalidMatroidError("explicit family is not a matroid: " +
                              report.ToString());
  }
  return std::make_shared<const ExplicitMatroid>(Token{}, ground,
                                                 std::move(independent_sets));
}

std::shared_ptr<const ExplicitMatroid> ExplicitMatroid::CreateUnchecked(
    ElementSet ground, std::vector<ElementSet> independent_sets) {
  CheckExplicitCapacity(ground);
  Canonicalize(independent_sets);
  return std::make_shared<const ExplicitMatroid>(Token{}, ground,
                                                 std::move(independent_sets));
}

std::shared_ptr<const ExplicitMatroid> ExplicitMatroid::Materialize(
    const Matroid& m) {
  CheckExplicitCapacity(m.ground());
  std::vector<ElementSet> family;
  ForEachSubset(m.ground(), [&](ElementSet s) {
    if (m.IsIndependent(s)) family.push_back(s);
  });
  return CreateUnchecked(m.ground(), std::move(family));
}

std::string ExplicitMatroid::Describe() const {
  std::ostringstream os;
  os << "explicit on " << ground().ToString() << " with " << family_.size()
     << " independent sets";
  return os.str();
}

ExplicitMatroidPtr Dual(const ExplicitMatroid& m) {
  const AxiomReport report =
      CheckAxioms(m.ground(), m.independent_sets(), kMaxExplicitElement + 1);
  if (!report.ok()) {
    throw InvalidMatroidError("Dual: input is not a matroid: " +
                              report.ToString());
  }
  const ElementSet ground = m.ground();
  const int rank = m.Rank();
  // S is co-independent iff its complement still contains a base.
  std::vector<ElementSet> family;
  ForEachSubset(ground, [&](ElementSet s) {
    if (m.Rank(ground - s) == rank) family.push_back(s);
  });
  return ExplicitMatroid::CreateUnchecked(ground, std::move(family));
}

}  // namespace matroid_forge
