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

// JSON instance and witness documents.
//
//   {"elements": [0, 1, 2],
//    "M": {"type": "uniform", "rank": 2},
//    "N": {"parts": [{"elements": [0, 1], "cap": 1},
//                    {"elements": [2], "cap": 1}]}}
//
// M types: "uniform" (rank), "graphic" (edges as [id, u, v]), "linear_gf2"
// (dim, columns as [id, [bits]]), "explicit" (independent_sets).

#ifndef MATROID_FORGE_TOOLS_INSTANCE_H_
#define MATROID_FORGE_TOOLS_INSTANCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "matroid_forge/element_set.h"
#include "matroid_forge/intersection.h"
#include "matroid_forge/matroid.h"
#include "matroid_forge/thresholds.h"
#include "matroid_forge/zoo.h"

namespace matroid_forge {

struct MatroidDescriptor {
  enum class Type { kUniform, kGraphic, kLinearGf2, kExplicit };
  Type type = Type::kUniform;
  int rank = 0;                             // kUniform
  std::vector<Edge> edges;                  // kGraphic
  int dimension = 0;                        // kLinearGf2
  std::vector<Gf2Column> columns;           // kLinearGf2
  std::vector<ElementSet> independent_sets;  // kExplicit
  bool operator==(const MatroidDescriptor&) const = default;
};

const char* TypeName(MatroidDescriptor::Type type);

struct Instance {
  ElementSet elements;
  MatroidDescriptor m;
  std::vector<Part> parts;
  bool operator==(const Instance&) const = default;
};

// Throws ParseError with a JSON path ("$.N.parts[1].cap") for malformed
// documents, unknown matroid types, ids outside [0, 63], M descriptors that
// do not cover the element list exactly, overlapping or non-covering parts,
// and caps above part sizes. Axioms of explicit families are not checked here.
Instance ParseInstance(std::string_view text);

// Pretty-printed, deterministic; sets are sorted ascending.
std::string SerializeInstance(const Instance& instance);

struct MatroidPair {
  MatroidPtr m;
  PartitionMatroidPtr n;
};

// Builds the matroids. Explicit families are axiom-checked first: throws
// InvalidMatroidError on a violation and CapacityError above
// `thresholds.axioms` elements.
MatroidPair Instantiate(const Instance& instance,
                        const Thresholds& thresholds = {});

// {"I": [...], "I_M": [...], "I_N": [...]}
Witness ParseWitness(std::string_view text);
std::string SerializeWitness(const Witness& w);

// Throws ParseError if the file cannot be read.
std::string ReadFile(const std::string& path);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TOOLS_INSTANCE_H_
