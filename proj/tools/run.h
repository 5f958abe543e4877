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

#ifndef MATROID_FORGE_TOOLS_RUN_H_
#define MATROID_FORGE_TOOLS_RUN_H_

#include <string>

#include "matroid_forge/edmonds.h"
#include "matroid_forge/intersection.h"
#include "tools/instance.h"

namespace matroid_forge {

enum class OutputFormat { kJson, kText };

struct IntersectResult {
  Witness witness;
  VerificationReport verification;
  int size = 0;
  int edmonds_size = 0;
  // The witness verifies and its size equals the augmenting-path maximum.
  bool agreement = false;
  RunLog log;
};

IntersectResult RunIntersect(const MatroidPair& pair,
                             const IntersectionOptions& options);

std::string FormatIntersect(const IntersectResult& result, OutputFormat format,
                            bool trace);

std::string FormatVerification(const VerificationReport& report,
                               OutputFormat format);

std::string FormatEdmonds(const CertifiedOptimum& opt, bool certified,
                          OutputFormat format);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TOOLS_RUN_H_
