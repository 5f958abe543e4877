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

#ifndef MATROID_FORGE_ZOO_H_
#define MATROID_FORGE_ZOO_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "matroid_forge/element_set.h"
#include "matroid_forge/matroid.h"

namespace matroid_forge {

// U_{E,n}: S is independent iff |S| <= n. The free matroid is n = |E|.
class UniformMatroid final : public Matroid {
 public:
  // Throws ArgumentError unless 0 <= cap <= |ground|.
  UniformMatroid(ElementSet ground, int cap);

  int cap() const { return cap_; }
  bool is_free() const { return cap_ == ground().size(); }
  std::string Describe() const override;

 protected:
  bool Independent(ElementSet s) const override { return s.size() <= cap_; }
  int ComputeRank(ElementSet x) const override;
  ElementSet ComputeSpan(ElementSet x) const override;

 private:
  int cap_;
};

using UniformMatroidPtr = std::shared_ptr<const UniformMatroid>;

inline UniformMatroidPtr MakeUniform(ElementSet ground, int cap) {
  return std::make_shared<const UniformMatroid>(ground, cap);
}
inline UniformMatroidPtr MakeFree(ElementSet ground) {
  return MakeUniform(ground, ground.size());
}

struct Part {
  ElementSet elements;
  int cap = 0;
  bool operator==(const Part&) const = default;
};

// Direct sum of uniform matroids U_i = U_{E_i, n_i} over pairwise disjoint
// parts. The ground set is the union of the parts; part order is significant
// for every algorithm that iterates over parts.
class PartitionMatroid final : public Matroid {
 public:
  // Throws ArgumentError on overlapping parts or cap outside [0, |E_i|].
  explicit PartitionMatroid(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  const Part& part(int i) const { return parts_[i]; }

  // Union of the parts selected by `indices` (bit i selects part i).
  ElementSet UnionOfParts(uint64_t indices) const;

  // N restricted to the selected parts, keeping their relative order.
  std::shared_ptr<const PartitionMatroid> KeepParts(uint64_t indices) const;

  // N - W for a union W of whole parts, which equals N / W.
  std::shared_ptr<const PartitionMatroid> RemoveParts(uint64_t indices) const;

  // U_i as a standalone matroid.
  UniformMatroidPtr PartMatroid(int i) const;

  // Equivalent generic direct sum of the part matroids.
  MatroidPtr AsDirectSum() const;

  std::string Describe() const override;

 protected:
  bool Independent(ElementSet s) const override;
  int ComputeRank(ElementSet x) const override;
  ElementSet ComputeSpan(ElementSet x) const override;

 private:
  std::vector<Part> parts_;
};

using PartitionMatroidPtr = std::shared_ptr<const PartitionMatroid>;

struct Edge {
  Element id;
  int u;
  int v;
  bool operator==(const Edge&) const = default;
};

// Cycle matroid of a multigraph. Self-loops are dependent singletons and
// parallel edges form 2-circuits. Independence is decided with a fresh
// disjoint-set forest per query.
class GraphicMatroid final : public Matroid {
 public:
  // Throws ArgumentError on duplicate edge ids or negative vertices.
  explicit GraphicMatroid(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::string Describe() const override;

 protected:
  bool Independent(ElementSet s) const override;

 private:
  std::vector<Edge> edges_;
  // Endpoints compressed to [0, vertex_count_), indexed by edge id.
  std::vector<int> tail_;
  std::vector<int> head_;
  int vertex_count_ = 0;
};

struct Gf2Column {
  Element id;
  std::vector<uint8_t> entries;  // 0/1, length = dimension
  bool operator==(const Gf2Column&) const = default;
};

// Column matroid over the two-element field.
class LinearMatroidGF2 final : public Matroid {
 public:
  // Throws ArgumentError on duplicate ids, entries other than 0/1, ragged
  // columns, or dimension above 64.
  LinearMatroidGF2(int dimension, std::vector<Gf2Column> columns);

  int dimension() const { return dimension_; }
  const std::vector<Gf2Column>& columns() const { return columns_; }
  std::string Describe() const override;

 protected:
  bool Independent(ElementSet s) const override;

 private:
  int dimension_;
  std::vector<Gf2Column> columns_;
  std::vector<uint64_t> packed_;  // indexed by element id
};

}  // namespace matroid_forge

#endif  // MATROID_FORGE_ZOO_H_
