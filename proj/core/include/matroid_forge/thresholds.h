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

#ifndef MATROID_FORGE_THRESHOLDS_H_
#define MATROID_FORGE_THRESHOLDS_H_

#include <cstddef>
#include <string_view>

namespace matroid_forge {

// Size limits for the exhaustive procedures. All are ground-set sizes.
struct Thresholds {
  int axioms = 8;        // CheckAxioms
  int exhaustive = 16;   // Circuits, ClassifyUniform
  int brute_force = 20;  // BruteForceMaxCommon
  int theta = 14;        // exact search in MaximizeTheta
  int theta_restarts = 64;  // heuristic budget above `theta`
};

// Overrides fields from a spec like "brute=14,theta=12,axioms=8,exhaustive=16,
// restarts=32". Unknown keys or malformed values throw std::invalid_argument.
Thresholds ParseThresholds(std::string_view spec, Thresholds base = {});

// Default capacity of the per-matroid rank memo (entries). Zero disables it.
inline constexpr std::size_t kDefaultRankCacheCapacity = std::size_t{1} << 20;

}  // namespace matroid_forge

#endif  // MATROID_FORGE_THRESHOLDS_H_
