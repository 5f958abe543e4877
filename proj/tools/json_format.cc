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

#include "tools/json_format.h"

namespace matroid_forge {
namespace {

bool ContainsObject(const Json& v) {
  if (v.is_object()) return true;
  if (v.is_array()) {
    for (const Json& x : v) {
      if (ContainsObject(x)) return true;
    }
  }
  return false;
}

void WriteInline(const Json& v, std::string& out) {
  if (!v.is_array()) {
    out += v.dump();
    return;
  }
  out += "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    WriteInline(v[i], out);
  }
  out += "]";
}

void Write(const Json& v, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      Write(it.value(), indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array() && ContainsObject(v)) {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ",\n";
      out += inner;
      Write(v[i], indent + 2, out);
    }
    out += "\n" + pad + "]";
  } else if (v.is_array()) {
    // Nested scalar arrays (edges, columns, families) stay on one line.
    WriteInline(v, out);
  } else {
    out += v.dump();
  }
}

}  // namespace

Json SetToJson(ElementSet s) {
  Json arr = Json::array();
  for (Element e : s) arr.push_back(e);
  return arr;
}

std::string FormatJson(const Json& doc) {
  std::string out;
  Write(doc, 0, out);
  return out + "\n";
}

}  // namespace matroid_forge
