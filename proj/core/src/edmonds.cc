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

#include "matroid_forge/edmonds.h"

#include <array>
#include <limits>
#include <sstream>

#include "matroid_forge/errors.h"

namespace matroid_forge {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

void CheckSameGround(const Matroid& m1, const Matroid& m2, const char* op) {
  if (m1.ground() != m2.ground()) {
    throw ArgumentError(std::string(op) + ": ground sets differ: " +
                        m1.ground().ToString() + " vs " +
                        m2.ground().ToString());
  }
}

}  // namespace

ExchangeGraph ExchangeGraph::Build(const Matroid& m1, const Matroid& m2,
                                   ElementSet current) {
  ExchangeGraph g;
  g.current = current;
  g.successors.assign(kMaxElements, ElementSet());
  const ElementSet outside = m1.ground() - current;
  for (Element z : outside) {
    if (m1.IsIndependent(current.With(z))) g.sources.Insert(z);
    if (m2.IsIndependent(current.With(z))) g.sinks.Insert(z);
  }
  for (Element y : current) {
    const ElementSet rest = current.Without(y);
    for (Element z : outside) {
      const ElementSet swapped = rest.With(z);
      if (m1.IsIndependent(swapped)) g.successors[y].Insert(z);
      if (m2.IsIndependent(swapped)) g.successors[z].Insert(y);
    }
  }
  return g;
}

ElementSet ExchangeGraph::ReachableFromSources() const {
  ElementSet reached = sources;
  ElementSet frontier = sources;
  while (!frontier.empty()) {
    ElementSet next;
    for (Element v : frontier) next |= successors[v];
    frontier = next - reached;
    reached |= frontier;
  }
  return reached;
}

std::vector<Element> ExchangeGraph::ShortestPath() const {
  // Distance from every vertex to the sink set, by backward BFS.
  std::array<int, kMaxElements> dist;
  dist.fill(kUnreached);
  ElementSet settled = sinks;
  for (Element v : sinks) dist[v] = 0;
  ElementSet frontier = sinks;
  for (int d = 1; !frontier.empty(); ++d) {
    ElementSet next;
    for (Element v = 0; v < kMaxElements; ++v) {
      if (!settled.Contains(v) && successors[v].Intersects(frontier)) {
        next.Insert(v);
        dist[v] = d;
      }
    }
    settled |= next;
    frontier = next;
  }

  Element start = -1;
  for (Element s : sources) {
    if (dist[s] != kUnreached && (start < 0 || dist[s] < dist[start])) {
      start = s;
    }
  }
  if (start < 0) return {};
  std::vector<Element> path = {start};
  Element v = start;
  while (dist[v] > 0) {
    for (Element w : successors[v]) {
      if (dist[w] == dist[v] - 1) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  return path;
}

CertifiedOptimum MaxCommonIndependent(const Matroid& m1, const Matroid& m2) {
  CheckSameGround(m1, m2, "MaxCommonIndependent");
  CertifiedOptimum result;
  result.phase_sizes.push_back(0);
  ElementSet current;
  while (true) {
    const ExchangeGraph g = ExchangeGraph::Build(m1, m2, current);
    const std::vector<Element> path = g.ShortestPath();
    if (path.empty()) {
      result.common = current;
      result.certificate = m1.ground() - g.ReachableFromSources();
      return result;
    }
    for (Element e : path) {
      if (current.Contains(e)) {
        current.Erase(e);
      } else {
        current.Insert(e);
      }
    }
    result.phase_sizes.push_back(current.size());
  }
}

ElementSet BruteForceMaxCommon(const Matroid& m1, const Matroid& m2,
                               int threshold) {
  CheckSameGround(m1, m2, "BruteForceMaxCommon");
  if (m1.ground().size() > threshold) {
    std::ostringstream os;
    os << "BruteForceMaxCommon: ground set has " << m1.ground().size()
       << " elements, above the threshold " << threshold;
    throw CapacityError(os.str());
  }
  ElementSet best;
  ForEachSubset(m1.ground(), [&](ElementSet s) {
    if (s.size() < best.size()) return;
    if (s.size() == best.size() && !CanonicalLess(s, best)) return;
    if (m1.IsIndependent(s) && m2.IsIndependent(s)) best = s;
  });
  return best;
}

bool Certify(const Matroid& m1, const Matroid& m2, ElementSet common,
             ElementSet certificate) {
  CheckSameGround(m1, m2, "Certify");
  const ElementSet ground = m1.ground();
  if (!common.IsSubsetOf(ground) || !certificate.IsSubsetOf(ground)) {
    return false;
  }
  return m1.Rank(certificate) + m2.Rank(ground - certificate) ==
         common.size();
}

}  // namespace matroid_forge
