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

#include "tools/generator.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroid_forge/errors.h"
#include "matroid_forge/explicit_matroid.h"
#include "matroid_forge/rng.h"

namespace matroid_forge {
namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError("Generate: " + message);
}

std::vector<Edge> RandomGraph(const GeneratorSpec& spec, Rng& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < spec.vertices; ++u) {
    for (int v = u + 1; v < spec.vertices; ++v) {
      if (rng.Bernoulli(spec.edge_probability)) pairs.emplace_back(u, v);
    }
  }
  if (spec.elements > 0) {
    while (static_cast<int>(pairs.size()) < spec.elements) {
      const int u = rng.Between(0, spec.vertices - 1);
      int v = rng.Between(0, spec.vertices - 2);
      if (v >= u) ++v;
      pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (static_cast<int>(pairs.size()) > spec.elements) {
      rng.Shuffle(pairs);
      pairs.resize(spec.elements);
      std::sort(pairs.begin(), pairs.end());
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back({static_cast<Element>(i), pairs[i].first, pairs[i].second});
  }
  return edges;
}

std::vector<Gf2Column> RandomColumns(int count, int dimension, Rng& rng) {
  std::vector<Gf2Column> columns;
  for (int id = 0; id < count; ++id) {
    Gf2Column c{id, {}};
    for (int k = 0; k < dimension; ++k) {
      c.entries.push_back(static_cast<uint8_t>(rng.Below(2)));
    }
    columns.push_back(std::move(c));
  }
  return columns;
}

std::vector<Part> RandomParts(ElementSet ground, const GeneratorSpec& spec,
                              Rng& rng) {
  std::vector<Element> order = ground.ToVector();
  rng.Shuffle(order);
  std::vector<Part> parts(spec.parts);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int index = i < parts.size()
                          ? static_cast<int>(i)
                          : static_cast<int>(rng.Below(parts.size()));
    parts[index].elements.Insert(order[i]);
  }
  for (Part& p : parts) {
    const int size = p.elements.size();
    const int lo = std::min(spec.min_cap, size);
    const int hi = std::min(spec.max_cap, size);
    p.cap = rng.Between(lo, std::max(lo, hi));
  }
  return parts;
}

}  // namespace

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kGraphic:
      return "graphic";
    case Family::kLinearGf2:
      return "linear_gf2";
    case Family::kUniform:
      return "uniform";
    case Family::kExplicit:
      return "explicit";
  }
  return "?";
}

std::optional<Family> FamilyFromName(std::string_view name) {
  for (Family f : {Family::kGraphic, Family::kLinearGf2, Family::kUniform,
                   Family::kExplicit}) {
    if (name == FamilyName(f)) return f;
  }
  return std::nullopt;
}

Instance Generate(const GeneratorSpec& spec) {
  Require(spec.elements >= 0 && spec.elements <= kMaxGeneratedElements,
          "elements must be in [0, " + std::to_string(kMaxGeneratedElements) +
              "]");
  Require(spec.min_cap >= 0 && spec.min_cap <= spec.max_cap,
          "need 0 <= min_cap <= max_cap");
  Require(spec.parts >= 0, "parts must be nonnegative");
  Rng rng(spec.seed);
  Instance instance;
  switch (spec.family) {
    case Family::kGraphic: {
      Require(spec.vertices >= 2 && spec.vertices <= kMaxGeneratedVertices,
              "vertices must be in [2, " +
                  std::to_string(kMaxGeneratedVertices) + "]");
      Require(spec.edge_probability >= 0 && spec.edge_probability <= 1,
              "edge probability must be in [0, 1]");
      instance.m.type = MatroidDescriptor::Type::kGraphic;
      instance.m.edges = RandomGraph(spec, rng);
      Require(static_cast<int>(instance.m.edges.size()) <=
                  kMaxGeneratedElements,
              "the random graph has more than " +
                  std::to_string(kMaxGeneratedElements) + " edges");
      for (const Edge& e : instance.m.edges) instance.elements.Insert(e.id);
      break;
    }
    case Family::kLinearGf2:
      Require(spec.dimension >= 0 && spec.dimension <= 64,
              "dimension must be in [0, 64]");
      instance.m.type = MatroidDescriptor::Type::kLinearGf2;
      instance.m.dimension = spec.dimension;
      instance.m.columns = RandomColumns(spec.elements, spec.dimension, rng);
      instance.elements = ElementSet::Range(spec.elements);
      break;
    case Family::kUniform:
      instance.m.type = MatroidDescriptor::Type::kUniform;
      instance.elements = ElementSet::Range(spec.elements);
      instance.m.rank = rng.Between(0, spec.elements);
      break;
    case Family::kExplicit: {
      Require(spec.elements <= kMaxGeneratedExplicitElements,
              "explicit instances need at most " +
                  std::to_string(kMaxGeneratedExplicitElements) +
                  " elements");
      const int dimension = std::min(spec.elements, 4);
      const LinearMatroidGF2 linear(
          dimension, RandomColumns(spec.elements, dimension, rng));
      const int truncate = rng.Between(0, linear.Rank());
      instance.m.type = MatroidDescriptor::Type::kExplicit;
      instance.elements = ElementSet::Range(spec.elements);
      ForEachSubset(instance.elements, [&](ElementSet s) {
        if (s.size() <= truncate && linear.IsIndependent(s)) {
          instance.m.independent_sets.push_back(s);
        }
      });
      Canonicalize(instance.m.independent_sets);
      if (!CheckAxioms(instance.elements, instance.m.independent_sets,
                       kMaxGeneratedExplicitElements)
               .ok()) {
        throw std::logic_error("Generate: truncated binary family failed the "
                               "axiom check");
      }
      break;
    }
  }
  Require(spec.parts <= instance.elements.size() &&
              (spec.parts > 0 || instance.elements.empty()),
          "parts must be in [1, |E|] (0 only for an empty ground set)");
  instance.parts = RandomParts(instance.elements, spec, rng);
  return instance;
}

}  // namespace matroid_forge
