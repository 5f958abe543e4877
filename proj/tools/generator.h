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

#ifndef MATROID_FORGE_TOOLS_GENERATOR_H_
#define MATROID_FORGE_TOOLS_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "tools/instance.h"

namespace matroid_forge {

enum class Family { kGraphic, kLinearGf2, kUniform, kExplicit };

const char* FamilyName(Family family);
std::optional<Family> FamilyFromName(std::string_view name);

inline constexpr int kMaxGeneratedElements = 20;
inline constexpr int kMaxGeneratedExplicitElements = 8;
inline constexpr int kMaxGeneratedVertices = 16;

struct GeneratorSpec {
  uint64_t seed = 1;
  Family family = Family::kGraphic;
  // Ground-set size. For graphic instances 0 keeps exactly the edges of the
  // random graph; a positive value pads it with random (possibly parallel)
  // edges or drops a random subset to reach that count.
  int elements = 8;
  int parts = 3;
  int min_cap = 0;
  int max_cap = 3;
  int vertices = 5;
  double edge_probability = 0.5;
  int dimension = 3;
};

// Identical specs give identical instances on every platform. Each element
// lands in a uniformly random part, every part receiving at least one; caps
// are uniform in [min_cap, max_cap] clipped to the part size. Explicit
// instances are rank truncations of random binary matroids, materialized and
// axiom-checked. Throws ArgumentError on out-of-range parameters.
Instance Generate(const GeneratorSpec& spec);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TOOLS_GENERATOR_H_
