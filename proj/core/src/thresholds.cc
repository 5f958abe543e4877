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

#include "matroid_forge/thresholds.h"

#include <charconv>
#include <stdexcept>
#include <string>

namespace matroid_forge {

Thresholds ParseThresholds(std::string_view spec, Thresholds base) {
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view()
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("threshold item '" + std::string(item) +
                                  "' is not key=value");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view text = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
      throw std::invalid_argument("threshold '" + std::string(key) +
                                  "' has invalid value '" + std::string(text) +
                                  "'");
    }
    if (key == "axioms") {
      base.axioms = value;
    } else if (key == "exhaustive") {
      base.exhaustive = value;
    } else if (key == "brute") {
      base.brute_force = value;
    } else if (key == "theta") {
      base.theta = value;
    } else if (key == "restarts") {
      base.theta_restarts = value;
    } else {
      throw std::invalid_argument("unknown threshold '" + std::string(key) +
                                  "'");
    }
  }
  return base;
}

}  // namespace matroid_forge
