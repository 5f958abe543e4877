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

#include "matroid_forge/zoo.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "matroid_forge/errors.h"

namespace matroid_forge {

UniformMatroid::UniformMatroid(ElementSet ground, int cap)
    : Matroid(ground, /*memoize_rank=*/false), cap_(cap) {
  if (cap < 0 || cap > ground.size()) {
    throw ArgumentError("UniformMatroid: cap " + std::to_string(cap) +
                        " outside [0, " + std::to_string(ground.size()) + "]");
  }
}

int UniformMatroid::ComputeRank(ElementSet x) const {
  return std::min(x.size(), cap_);
}

ElementSet UniformMatroid::ComputeSpan(ElementSet x) const {
  return x.size() >= cap_ ? ground() : x;
}

std::string UniformMatroid::Describe() const {
  std::ostringstream os;
  os << "U(" << ground().ToString() << ", " << cap_ << ")";
  return os.str();
}

namespace {

ElementSet ValidateParts(const std::vector<Part>& parts) {
  ElementSet all;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Part& p = parts[i];
    if (all.Intersects(p.elements)) {
      throw ArgumentError("PartitionMatroid: part " + std::to_string(i) +
                          " overlaps earlier parts in " +
                          (all & p.elements).ToString());
    }
    if (p.cap < 0 || p.cap > p.elements.size()) {
      throw ArgumentError("PartitionMatroid: part " + std::to_string(i) +
                          " has cap " + std::to_string(p.cap) +
                          " outside [0, " +
                          std::to_string(p.elements.size()) + "]");
    }
    all |= p.elements;
  }
  return all;
}

}  // namespace

PartitionMatroid::PartitionMatroid(std::vector<Part> parts)
    : Matroid(ValidateParts(parts), /*memoize_rank=*/false),
      parts_(std::move(parts)) {}

bool PartitionMatroid::Independent(ElementSet s) const {
  for (const Part& p : parts_) {
    if ((s & p.elements).size() > p.cap) return false;
  }
  return true;
}

int PartitionMatroid::ComputeRank(ElementSet x) const {
  int rank = 0;
  for (const Part& p : parts_) rank += std::min((x & p.elements).size(), p.cap);
  return rank;
}

ElementSet PartitionMatroid::ComputeSpan(ElementSet x) const {
  ElementSet span = x;
  for (const Part& p : parts_) {
    if ((x & p.elements).size() >= p.cap) span |= p.elements;
  }
  return span;
}

ElementSet PartitionMatroid::UnionOfParts(uint64_t indices) const {
  ElementSet out;
  for (int i = 0; i < num_parts(); ++i) {
    if ((indices >> i) & 1) out |= parts_[i].elements;
  }
  return out;
}

std::shared_ptr<const PartitionMatroid> PartitionMatroid::KeepParts(
    uint64_t indices) const {
  std::vector<Part> kept;
  for (int i = 0; i < num_parts(); ++i) {
    if ((indices >> i) & 1) kept.push_back(parts_[i]);
  }
  return std::make_shared<const PartitionMatroid>(std::move(kept));
}

std::shared_ptr<const PartitionMatroid> PartitionMatroid::RemoveParts(
    uint64_t indices) const {
  const uint64_t all =
      num_parts() >= 64 ? ~uint64_t{0} : (uint64_t{1} << num_parts()) - 1;
  return KeepParts(all & ~indices);
}

UniformMatroidPtr PartitionMatroid::PartMatroid(int i) const {
  return MakeUniform(parts_[i].elements, parts_[i].cap);
}

MatroidPtr PartitionMatroid::AsDirectSum() const {
  std::vector<MatroidPtr> parts;
  for (int i = 0; i < num_parts(); ++i) parts.push_back(PartMatroid(i));
  return DirectSum(std::move(parts));
}

std::string PartitionMatroid::Describe() const {
  if (parts_.empty()) return "partition with no parts";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) os << " (+) ";
    os << "U(" << parts_[i].elements.ToString() << ", " << parts_[i].cap
       << ")";
  }
  return os.str();
}

namespace {

ElementSet EdgeIds(const std::vector<Edge>& edges) {
  ElementSet ids;
  for (const Edge& e : edges) {
    if (e.id < 0 || e.id >= kMaxElements) {
      throw ArgumentError("GraphicMatroid: edge id " + std::to_string(e.id) +
                          " out of range");
    }
    if (ids.Contains(e.id)) {
      throw ArgumentError("GraphicMatroid: duplicate edge id " +
                          std::to_string(e.id));
    }
    if (e.u < 0 || e.v < 0) {
      throw ArgumentError("GraphicMatroid: edge " + std::to_string(e.id) +
                          " has a negative endpoint");
    }
    ids.Insert(e.id);
  }
  return ids;
}

int Find(int* parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

GraphicMatroid::GraphicMatroid(std::vector<Edge> edges)
    : Matroid(EdgeIds(edges), /*memoize_rank=*/true), edges_(std::move(edges)) {
  std::map<int, int> index;
  for (const Edge& e : edges_) {
    index.emplace(e.u, 0);
    index.emplace(e.v, 0);
  }
  for (auto& [vertex, slot] : index) slot = vertex_count_++;
  tail_.assign(kMaxElements, 0);
  head_.assign(kMaxElements, 0);
  for (const Edge& e : edges_) {
    tail_[e.id] = index[e.u];
    head_[e.id] = index[e.v];
  }
}

bool GraphicMatroid::Independent(ElementSet s) const {
  // At most two endpoints per edge id.
  int parent[2 * kMaxElements];
  std::iota(parent, parent + vertex_count_, 0);
  for (Element id : s) {
    const int a = Find(parent, tail_[id]);
    const int b = Find(parent, head_[id]);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::string GraphicMatroid::Describe() const {
  std::ostringstream os;
  os << "graphic with " << edges_.size() << " edges on " << vertex_count_
     << " vertices";
  return os.str();
}

namespace {

ElementSet ColumnIds(int dimension, const std::vector<Gf2Column>& columns) {
  if (dimension < 0 || dimension > 64) {
    throw ArgumentError("LinearMatroidGF2: dimension " +
                        std::to_string(dimension) + " outside [0, 64]");
  }
  ElementSet ids;
  for (const Gf2Column& c : columns) {
    if (c.id < 0 || c.id >= kMaxElements) {
      throw ArgumentError("LinearMatroidGF2: column id " +
                          std::to_string(c.id) + " out of range");
    }
    if (ids.Contains(c.id)) {
      throw ArgumentError("LinearMatroidGF2: duplicate column id " +
                          std::to_string(c.id));
    }
    if (static_cast<int>(c.entries.size()) != dimension) {
      throw ArgumentError("LinearMatroidGF2: column " + std::to_string(c.id) +
                          " has length " + std::to_string(c.entries.size()) +
                          ", expected " + std::to_string(dimension));
    }
    for (uint8_t bit : c.entries) {
      if (bit > 1) {
        throw ArgumentError("LinearMatroidGF2: column " +
                            std::to_string(c.id) + " has a non-binary entry");
      }
    }
    ids.Insert(c.id);
  }
  return ids;
}

}  // namespace

LinearMatroidGF2::LinearMatroidGF2(int dimension,
                                   std::vector<Gf2Column> columns)
    : Matroid(ColumnIds(dimension, columns), /*memoize_rank=*/true),
      dimension_(dimension),
      columns_(std::move(columns)) {
  packed_.assign(kMaxElements, 0);
  for (const Gf2Column& c : columns_) {
    uint64_t word = 0;
    for (int r = 0; r < dimension_; ++r) {
      if (c.entries[r]) word |= uint64_t{1} << r;
    }
    packed_[c.id] = word;
  }
}

bool LinearMatroidGF2::Independent(ElementSet s) const {
  // basis[b] holds a reduced vector whose highest set bit is b.
  uint64_t basis[64] = {};
  for (Element id : s) {
    uint64_t v = packed_[id];
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        break;
      }
      v ^= basis[top];
    }
    if (v == 0) return false;
  }
  return true;
}

std::string LinearMatroidGF2::Describe() const {
  std::ostringstream os;
  os << "GF(2)-linear with " << columns_.size() << " columns of dimension "
     << dimension_;
  return os.str();
}

}  // namespace matroid_forge
