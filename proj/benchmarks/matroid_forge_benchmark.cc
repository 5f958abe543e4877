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

#include <memory>
#include <vector>

#include "benchmark/benchmark.h"
#include "matroid_forge/edmonds.h"
#include "matroid_forge/enumerate.h"
#include "matroid_forge/intersection.h"
#include "matroid_forge/matroid.h"
#include "matroid_forge/zoo.h"
#include "tools/generator.h"
#include "tools/instance.h"

namespace matroid_forge {
namespace {

MatroidPair Generated(Family family, int elements, uint64_t seed) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.family = family;
  spec.elements = elements;
  spec.parts = 4;
  spec.max_cap = 3;
  spec.vertices = 8;
  spec.dimension = 6;
  return Instantiate(Generate(spec));
}

void BM_GraphicRank(benchmark::State& state) {
  Matroid::SetDefaultRankCacheCapacity(0);
  const MatroidPtr m = Generated(Family::kGraphic, state.range(0), 5).m;
  Matroid::SetDefaultRankCacheCapacity(kDefaultRankCacheCapacity);
  uint64_t mask = 0;
  const uint64_t full = m->ground().mask();
  for (auto _ : state) {
    mask = (mask * 6364136223846793005ULL + 1442695040888963407ULL);
    benchmark::DoNotOptimize(m->Rank(ElementSet::FromMask(mask & full)));
  }
}
BENCHMARK(BM_GraphicRank)->Arg(8)->Arg(16)->Arg(20);

void BM_LinearSpan(benchmark::State& state) {
  const MatroidPtr m = Generated(Family::kLinearGf2, state.range(0), 7).m;
  uint64_t mask = 0;
  const uint64_t full = m->ground().mask();
  for (auto _ : state) {
    mask = (mask * 6364136223846793005ULL + 1442695040888963407ULL);
    benchmark::DoNotOptimize(m->Span(ElementSet::FromMask(mask & full)));
  }
}
BENCHMARK(BM_LinearSpan)->Arg(8)->Arg(20);

void BM_MaxCommonIndependent(benchmark::State& state) {
  const MatroidPair pair =
      Generated(static_cast<Family>(state.range(1)), state.range(0), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxCommonIndependent(*pair.m, *pair.n));
  }
}
BENCHMARK(BM_MaxCommonIndependent)
    ->ArgsProduct({{10, 20}, {static_cast<int>(Family::kGraphic),
                              static_cast<int>(Family::kLinearGf2)}});

void BM_BuildWitness(benchmark::State& state) {
  const MatroidPair pair =
      Generated(static_cast<Family>(state.range(1)), state.range(0), 13);
  IntersectionOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildWitness(pair.m, *pair.n, options));
  }
}
BENCHMARK(BM_BuildWitness)
    ->ArgsProduct({{10, 14, 20}, {static_cast<int>(Family::kGraphic),
                                  static_cast<int>(Family::kLinearGf2)}})
    ->Unit(benchmark::kMicrosecond);

void BM_CheckPartUnionCondition(benchmark::State& state) {
  const MatroidPair pair = Generated(Family::kGraphic, state.range(0), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckPartUnionCondition(pair.m, *pair.n));
  }
}
BENCHMARK(BM_CheckPartUnionCondition)->Arg(10)->Arg(20);

void BM_BruteForceMaxCommon(benchmark::State& state) {
  const MatroidPair pair = Generated(Family::kGraphic, state.range(0), 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteForceMaxCommon(*pair.m, *pair.n));
  }
}
BENCHMARK(BM_BruteForceMaxCommon)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_SingleElementExtensions(benchmark::State& state) {
  const std::vector<SmallMatroid> classes =
      EnumerateNonIsomorphicMatroids(state.range(0));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SingleElementExtensions(classes[k]));
    k = (k + 1) % classes.size();
  }
}
BENCHMARK(BM_SingleElementExtensions)->Arg(5)->Arg(7);

void BM_CanonicalForm(benchmark::State& state) {
  const std::vector<SmallMatroid> labeled =
      EnumerateLabeledMatroids(state.range(0));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(CanonicalForm(labeled[k]));
    k = (k + 997) % labeled.size();
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(7);

}  // namespace
}  // namespace matroid_forge

BENCHMARK_MAIN();
