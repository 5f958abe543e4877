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

#include "tools/instance.h"

#include <fstream>
#include <memory>
#include <sstream>

#include "matroid_forge/errors.h"
#include "matroid_forge/explicit_matroid.h"
#include "tools/json_format.h"

namespace matroid_forge {
namespace {

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& Field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(path, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

const Json& Array(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  return v;
}

int Int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  const auto x = v.get<int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) {
    throw ParseError(path, "integer out of range");
  }
  return static_cast<int>(x);
}

Element Id(const Json& v, const std::string& path) {
  const int id = Int(v, path);
  if (id < 0 || id >= kMaxElements) {
    throw ParseError(path, "element id " + std::to_string(id) +
                               " outside [0, " +
                               std::to_string(kMaxElements - 1) + "]");
  }
  return id;
}

// A list of distinct ids.
ElementSet IdSet(const Json& v, const std::string& path) {
  ElementSet out;
  const Json& arr = Array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Element e = Id(arr[i], Index(path, i));
    if (out.Contains(e)) {
      throw ParseError(Index(path, i),
                       "duplicate element " + std::to_string(e));
    }
    out.Insert(e);
  }
  return out;
}

// Each id in `ids` (in document order) must lie in `elements`, and together
// they must cover it.
void CheckCovers(ElementSet elements, ElementSet seen, const std::string& path,
                 const char* what) {
  if (seen != elements) {
    throw ParseError(path, std::string(what) + " miss elements " +
                               (elements - seen).ToString());
  }
}

void CheckMember(ElementSet elements, Element e, const std::string& path) {
  if (!elements.Contains(e)) {
    throw ParseError(path, "element " + std::to_string(e) +
                               " is not in $.elements");
  }
}

MatroidDescriptor ParseMatroid(const Json& doc, ElementSet elements) {
  const std::string path = "$.M";
  MatroidDescriptor d;
  const Json& type = Field(doc, path, "type");
  if (!type.is_string()) throw ParseError(path + ".type", "expected a string");
  const std::string name = type.get<std::string>();
  if (name == "uniform") {
    d.type = MatroidDescriptor::Type::kUniform;
    d.rank = Int(Field(doc, path, "rank"), path + ".rank");
    if (d.rank < 0 || d.rank > elements.size()) {
      throw ParseError(path + ".rank",
                       "rank " + std::to_string(d.rank) + " outside [0, " +
                           std::to_string(elements.size()) + "]");
    }
  } else if (name == "graphic") {
    d.type = MatroidDescriptor::Type::kGraphic;
    const std::string epath = path + ".edges";
    const Json& edges = Array(Field(doc, path, "edges"), epath);
    ElementSet seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string p = Index(epath, i);
      const Json& edge = Array(edges[i], p);
      if (edge.size() != 3) throw ParseError(p, "expected [id, u, v]");
      const Element id = Id(edge[0], Index(p, 0));
      CheckMember(elements, id, Index(p, 0));
      if (seen.Contains(id)) {
        throw ParseError(Index(p, 0), "duplicate edge id " + std::to_string(id));
      }
      seen.Insert(id);
      const int u = Int(edge[1], Index(p, 1));
      const int v = Int(edge[2], Index(p, 2));
      if (u < 0) throw ParseError(Index(p, 1), "negative vertex");
      if (v < 0) throw ParseError(Index(p, 2), "negative vertex");
      d.edges.push_back({id, u, v});
    }
    CheckCovers(elements, seen, epath, "edges");
  } else if (name == "linear_gf2") {
    d.type = MatroidDescriptor::Type::kLinearGf2;
    d.dimension = Int(Field(doc, path, "dim"), path + ".dim");
    if (d.dimension < 0 || d.dimension > 64) {
      throw ParseError(path + ".dim", "dimension outside [0, 64]");
    }
    const std::string cpath = path + ".columns";
    const Json& columns = Array(Field(doc, path, "columns"), cpath);
    ElementSet seen;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const std::string p = Index(cpath, i);
      const Json& column = Array(columns[i], p);
      if (column.size() != 2) throw ParseError(p, "expected [id, [bits]]");
      const Element id = Id(column[0], Index(p, 0));
      CheckMember(elements, id, Index(p, 0));
      if (seen.Contains(id)) {
        throw ParseError(Index(p, 0),
                         "duplicate column id " + std::to_string(id));
      }
      seen.Insert(id);
      const std::string bpath = Index(p, 1);
      const Json& bits = Array(column[1], bpath);
      if (static_cast<int>(bits.size()) != d.dimension) {
        throw ParseError(bpath, "expected " + std::to_string(d.dimension) +
                                    " entries");
      }
      Gf2Column col{id, {}};
      for (std::size_t k = 0; k < bits.size(); ++k) {
        const int b = Int(bits[k], Index(bpath, k));
        if (b != 0 && b != 1) throw ParseError(Index(bpath, k), "expected 0 or 1");
        col.entries.push_back(static_cast<uint8_t>(b));
      }
      d.columns.push_back(std::move(col));
    }
    CheckCovers(elements, seen, cpath, "columns");
  } else if (name == "explicit") {
    d.type = MatroidDescriptor::Type::kExplicit;
    const std::string spath = path + ".independent_sets";
    const Json& sets = Array(Field(doc, path, "independent_sets"), spath);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::string p = Index(spath, i);
      const ElementSet s = IdSet(sets[i], p);
      if (!s.IsSubsetOf(elements)) {
        throw ParseError(p, "elements " + (s - elements).ToString() +
                                " are not in $.elements");
      }
      d.independent_sets.push_back(s);
    }
    Canonicalize(d.independent_sets);
  } else {
    throw ParseError(path + ".type", "unknown matroid type \"" + name + "\"");
  }
  return d;
}

std::vector<Part> ParseParts(const Json& doc, ElementSet elements) {
  const std::string ppath = "$.N.parts";
  const Json& parts = Array(Field(doc, "$.N", "parts"), ppath);
  std::vector<Part> out;
  ElementSet seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string p = Index(ppath, i);
    const std::string epath = p + ".elements";
    const Json& ids = Array(Field(parts[i], p, "elements"), epath);
    Part part;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const Element e = Id(ids[k], Index(epath, k));
      CheckMember(elements, e, Index(epath, k));
      if (seen.Contains(e)) {
        throw ParseError(Index(epath, k),
                         "element " + std::to_string(e) +
                             " already belongs to another part");
      }
      seen.Insert(e);
      part.elements.Insert(e);
    }
    part.cap = Int(Field(parts[i], p, "cap"), p + ".cap");
    if (part.cap < 0) throw ParseError(p + ".cap", "negative cap");
    if (part.cap > part.elements.size()) {
      throw ParseError(p + ".cap", "cap " + std::to_string(part.cap) +
                                       " exceeds part size " +
                                       std::to_string(part.elements.size()));
    }
    out.push_back(part);
  }
  CheckCovers(elements, seen, ppath, "parts");
  return out;
}

Json Parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("$", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

const char* TypeName(MatroidDescriptor::Type type) {
  switch (type) {
    case MatroidDescriptor::Type::kUniform:
      return "uniform";
    case MatroidDescriptor::Type::kGraphic:
      return "graphic";
    case MatroidDescriptor::Type::kLinearGf2:
      return "linear_gf2";
    case MatroidDescriptor::Type::kExplicit:
      return "explicit";
  }
  return "?";
}

Instance ParseInstance(std::string_view text) {
  const Json doc = Parse(text);
  if (!doc.is_object()) throw ParseError("$", "expected an object");
  Instance instance;
  instance.elements = IdSet(Field(doc, "$", "elements"), "$.elements");
  instance.m = ParseMatroid(Field(doc, "$", "M"), instance.elements);
  instance.parts = ParseParts(Field(doc, "$", "N"), instance.elements);
  return instance;
}

std::string SerializeInstance(const Instance& instance) {
  Json doc;
  doc["elements"] = SetToJson(instance.elements);
  Json m;
  const MatroidDescriptor& d = instance.m;
  m["type"] = TypeName(d.type);
  switch (d.type) {
    case MatroidDescriptor::Type::kUniform:
      m["rank"] = d.rank;
      break;
    case MatroidDescriptor::Type::kGraphic:
      m["edges"] = Json::array();
      for (const Edge& e : d.edges) m["edges"].push_back({e.id, e.u, e.v});
      break;
    case MatroidDescriptor::Type::kLinearGf2: {
      m["dim"] = d.dimension;
      m["columns"] = Json::array();
      for (const Gf2Column& c : d.columns) {
        Json bits = Json::array();
        for (uint8_t b : c.entries) bits.push_back(static_cast<int>(b));
        m["columns"].push_back({c.id, bits});
      }
      break;
    }
    case MatroidDescriptor::Type::kExplicit:
      m["independent_sets"] = Json::array();
      for (ElementSet s : d.independent_sets) {
        m["independent_sets"].push_back(SetToJson(s));
      }
      break;
  }
  doc["M"] = m;
  Json parts = Json::array();
  for (const Part& p : instance.parts) {
    Json part;
    part["elements"] = SetToJson(p.elements);
    part["cap"] = p.cap;
    parts.push_back(part);
  }
  doc["N"]["parts"] = parts;
  return FormatJson(doc);
}

MatroidPair Instantiate(const Instance& instance,
                        const Thresholds& thresholds) {
  MatroidPair pair;
  const MatroidDescriptor& d = instance.m;
  switch (d.type) {
    case MatroidDescriptor::Type::kUniform:
      pair.m = MakeUniform(instance.elements, d.rank);
      break;
    case MatroidDescriptor::Type::kGraphic:
      pair.m = std::make_shared<const GraphicMatroid>(d.edges);
      break;
    case MatroidDescriptor::Type::kLinearGf2:
      pair.m = std::make_shared<const LinearMatroidGF2>(d.dimension, d.columns);
      break;
    case MatroidDescriptor::Type::kExplicit: {
      if (instance.elements.size() > thresholds.axioms) {
        throw CapacityError("explicit matroid on " +
                            std::to_string(instance.elements.size()) +
                            " elements exceeds the axiom-check threshold " +
                            std::to_string(thresholds.axioms));
      }
      const AxiomReport report =
          CheckAxioms(instance.elements, d.independent_sets, thresholds.axioms);
      if (!report.ok()) {
        throw InvalidMatroidError("$.M.independent_sets: not a matroid: " +
                                  report.ToString());
      }
      pair.m = ExplicitMatroid::CreateUnchecked(instance.elements,
                                                d.independent_sets);
      break;
    }
  }
  pair.n = std::make_shared<const PartitionMatroid>(instance.parts);
  return pair;
}

Witness ParseWitness(std::string_view text) {
  const Json doc = Parse(text);
  if (!doc.is_object()) throw ParseError("$", "expected an object");
  Witness w;
  w.common = IdSet(Field(doc, "$", "I"), "$.I");
  w.m_side = IdSet(Field(doc, "$", "I_M"), "$.I_M");
  w.n_side = IdSet(Field(doc, "$", "I_N"), "$.I_N");
  return w;
}

std::string SerializeWitness(const Witness& w) {
  Json doc;
  doc["I"] = SetToJson(w.common);
  doc["I_M"] = SetToJson(w.m_side);
  doc["I_N"] = SetToJson(w.n_side);
  return FormatJson(doc);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace matroid_forge
