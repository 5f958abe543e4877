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

#include "matroid_forge/uniform_ops.h"

#include <sstream>

#include "matroid_forge/errors.h"

namespace matroid_forge {
namespace {

void CheckCapacity(const Matroid& m, int threshold, const char* op) {
  if (m.ground().size() > threshold) {
    std::ostringstream os;
    os << op << ": ground set has " << m.ground().size()
       << " elements, above the exhaustive threshold " << threshold;
    throw CapacityError(os.str());
  }
}

}  // namespace

const char* SubsetKindName(SubsetKind kind) {
  switch (kind) {
    case SubsetKind::kIndependent:
      return "independent";
    case SubsetKind::kSpanning:
      return "spanning";
    case SubsetKind::kNeither:
      return "neither";
  }
  return "unknown";
}

SubsetKind IndependentOrSpanning(const Matroid& m, ElementSet f) {
  if (m.IsIndependent(f)) return SubsetKind::kIndependent;
  if (m.IsSpanning(f)) return SubsetKind::kSpanning;
  return SubsetKind::kNeither;
}

std::optional<ExchangeViolation> FindExchangeViolation(const Matroid& m,
                                                       int threshold) {
  CheckCapacity(m, threshold, "FindExchangeViolation");
  std::optional<ExchangeViolation> found;
  const ElementSet ground = m.ground();
  ForEachSubset(ground, [&](ElementSet i) {
    if (found || !m.IsIndependent(i)) return;
    for (Element e : i) {
      for (Element f : ground - i) {
        if (!m.IsIndependent(i.Without(e).With(f))) {
          found = ExchangeViolation{i, e, f};
          return;
        }
      }
    }
  });
  return found;
}

std::string UniformClass::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kFree:
      os << "free";
      break;
    case Kind::kUniformRank:
      os << "uniform of rank " << rank;
      break;
    case Kind::kNotUniform:
      os << "not uniform: " << neither.ToString()
         << " is neither independent nor spanning";
      if (exchange) {
        os << "; exchange fails for I=" << exchange->independent.ToString()
           << " e=" << exchange->removed << " f=" << exchange->added;
      }
      break;
  }
  return os.str();
}

UniformClass ClassifyUniform(const Matroid& m, int threshold) {
  CheckCapacity(m, threshold, "ClassifyUniform");
  UniformClass out;
  bool refuted = false;
  ForEachSubset(m.ground(), [&](ElementSet f) {
    if (refuted) return;
    if (IndependentOrSpanning(m, f) == SubsetKind::kNeither) {
      refuted = true;
      out.neither = f;
    }
  });
  if (refuted) {
    out.kind = UniformClass::Kind::kNotUniform;
    out.exchange = FindExchangeViolation(m, threshold);
    return out;
  }
  out.rank = m.Rank();
  out.kind = out.rank == m.ground().size() ? UniformClass::Kind::kFree
                                           : UniformClass::Kind::kUniformRank;
  return out;
}

BaseExchange BaseExchangeWithUniform(const Matroid& m,
                                     const UniformMatroid& u) {
  if (m.ground() != u.ground()) {
    throw ArgumentError("BaseExchangeWithUniform: ground sets differ: " +
                        m.ground().ToString() + " vs " +
                        u.ground().ToString());
  }
  const ElementSet base = m.MaxIndependentSubset(m.ground());
  if (base.size() <= u.cap()) {
    return {BaseExchange::Side::kUIndependentBaseOfM, base};
  }
  return {BaseExchange::Side::kMIndependentBaseOfU, base.Smallest(u.cap())};
}

}  // namespace matroid_forge
