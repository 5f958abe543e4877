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

#include "matroid_forge/element_set.h"

#include <algorithm>
#include <stdexcept>

namespace matroid_forge {

ElementSet ElementSet::FromVector(std::span<const Element> elements) {
  ElementSet s;
  for (Element e : elements) {
    if (e < 0 || e >= kMaxElements) {
      throw std::out_of_range("element id " + std::to_string(e) +
                              " outside [0, " + std::to_string(kMaxElements) +
                              ")");
    }
    s.Insert(e);
  }
  return s;
}

ElementSet ElementSet::Smallest(int k) const {
  ElementSet out;
  for (Element e : *this) {
    if (out.size() == k) break;
    out.Insert(e);
  }
  return out;
}

std::vector<Element> ElementSet::ToVector() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Element e : *this) out.push_back(e);
  return out;
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (Element e : *this) {
    if (!first) out += ", ";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void Canonicalize(std::vector<ElementSet>& family) {
  std::sort(family.begin(), family.end(), CanonicalOrder{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace matroid_forge
