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

#ifndef MATROID_FORGE_TOOLS_JSON_FORMAT_H_
#define MATROID_FORGE_TOOLS_JSON_FORMAT_H_

#include <string>

#include "json.hpp"
#include "matroid_forge/element_set.h"

namespace matroid_forge {

using Json = nlohmann::ordered_json;

// Ascending id list.
Json SetToJson(ElementSet s);

// Two-space indented JSON in which arrays holding no objects are printed on
// one line, followed by a newline.
std::string FormatJson(const Json& doc);

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TOOLS_JSON_FORMAT_H_
