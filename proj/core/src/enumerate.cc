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

#include "matroid_forge/enumerate.h"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "matroid_forge/errors.h"

namespace matroid_forge {
namespace {

constexpr int kMaxLabeled = 7;

uint32_t FullMask(int n) { return (uint32_t{1} << n) - 1; }

// Hyperplanes of a matroid and the modular-pair constraints between them.
struct HyperplaneSystem {
  std::vector<uint32_t> hyperplanes;
  // For each modular pair {a, b}: both bits, and the set of hyperplanes that
  // contain H_a ∩ H_b.
  struct Constraint {
    uint64_t pair;
    uint64_t forced;
  };
  std::vector<Constraint> constraints;

  // Smallest linear subclass containing `s`.
  uint64_t Close(uint64_t s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Constraint& c : constraints) {
        if ((s & c.pair) == c.pair && (s & c.forced) != c.forced) {
          s |= c.forced;
          changed = true;
        }
      }
    }
    return s;
  }

  // Hyperplanes containing flat `f`, as a bitmask over hyperplane indices.
  uint64_t Containing(uint32_t f) const {
    uint64_t out = 0;
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      if ((f & ~hyperplanes[i]) == 0) out |= uint64_t{1} << i;
    }
    return out;
  }
};

HyperplaneSystem BuildHyperplanes(const SmallMatroid& m) {
  HyperplaneSystem sys;
  const uint32_t full = FullMask(m.n);
  const int rank = m.Rank(full);
  if (rank == 0) return sys;
  std::set<uint32_t> seen;
  for (uint32_t x = 0; x <= full; ++x) {
    if (m.Rank(x) != rank - 1) continue;
    const uint32_t flat = m.Closure(x);
    if (seen.insert(flat).second) sys.hyperplanes.push_back(flat);
  }
  if (sys.hyperplanes.size() > 64) {
    throw CapacityError("too many hyperplanes for extension enumeration");
  }
  const std::size_t h = sys.hyperplanes.size();
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = a + 1; b < h; ++b) {
      const uint32_t meet = sys.hyperplanes[a] & sys.hyperplanes[b];
      if (m.Rank(meet) != rank - 2) continue;
      uint64_t forced = 0;
      for (std::size_t c = 0; c < h; ++c) {
        if ((meet & ~sys.hyperplanes[c]) == 0) forced |= uint64_t{1} << c;
      }
      sys.constraints.push_back(
          {(uint64_t{1} << a) | (uint64_t{1} << b), forced});
    }
  }
  return sys;
}

// Ganter's NextClosure over `h` items; calls fn for every closed set once.
template <typename Fn>
void ForEachLinearSubclass(const HyperplaneSystem& sys, Fn&& fn) {
  const int h = static_cast<int>(sys.hyperplanes.size());
  uint64_t a = sys.Close(0);
  fn(a);
  while (true) {
    bool advanced = false;
    uint64_t prefix = a;
    for (int i = h - 1; i >= 0; --i) {
      const uint64_t bit = uint64_t{1} << i;
      if (prefix & bit) {
        prefix &= ~bit;
        continue;
      }
      const uint64_t b = sys.Close(prefix | bit);
      const uint64_t lower = bit - 1;
      if (((b & ~prefix) & lower) == 0) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
    fn(a);
  }
}

std::vector<uint32_t> IndependentMasks(const SmallMatroid& m) {
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x <= FullMask(m.n); ++x) {
    if (m.IsIndependent(x)) out.push_back(x);
  }
  return out;
}

// Elements grouped by an isomorphism invariant: for each element, the number
// of independent sets of each size containing it.
struct InvariantClasses {
  std::vector<int> order;          // elements sorted by (invariant, id)
  std::vector<int> block_starts;   // start index of each class in `order`
};

InvariantClasses ClassifyElements(const SmallMatroid& m,
                                  const std::vector<uint32_t>& indep) {
  std::vector<std::vector<int>> inv(m.n, std::vector<int>(m.n + 1, 0));
  for (uint32_t x : indep) {
    const int size = std::popcount(x);
    for (int e = 0; e < m.n; ++e) {
      if ((x >> e) & 1) ++inv[e][size];
    }
  }
  InvariantClasses classes;
  classes.order.resize(m.n);
  std::iota(classes.order.begin(), classes.order.end(), 0);
  std::stable_sort(classes.order.begin(), classes.order.end(),
                   [&](int a, int b) { return inv[a] < inv[b]; });
  for (int p = 0; p < m.n; ++p) {
    if (p == 0 || inv[classes.order[p]] != inv[classes.order[p - 1]]) {
      classes.block_starts.push_back(p);
    }
  }
  classes.block_starts.push_back(m.n);
  return classes;
}

// Enumerates arrangements: permutations of `order` within each block.
template <typename Fn>
void ForEachArrangement(const InvariantClasses& classes, Fn&& fn) {
  std::vector<int> arr = classes.order;
  const int blocks = static_cast<int>(classes.block_starts.size()) - 1;
  // next_permutation needs each block to start sorted ascending.
  for (int k = 0; k < blocks; ++k) {
    std::sort(arr.begin() + classes.block_starts[k],
              arr.begin() + classes.block_starts[k + 1]);
  }
  while (true) {
    fn(arr);
    int k = blocks - 1;
    for (; k >= 0; --k) {
      if (std::next_permutation(arr.begin() + classes.block_starts[k],
                                arr.begin() + classes.block_starts[k + 1])) {
        break;
      }
    }
    if (k < 0) return;
  }
}

// Table image under the relabeling element arr[p] -> p.
SmallMatroid Relabel(const SmallMatroid& m, const std::vector<uint32_t>& indep,
                     const std::vector<int>& arr) {
  uint32_t lo[16], hi[16];
  int target[kMaxEnumeratedElements] = {};
  for (int p = 0; p < m.n; ++p) target[arr[p]] = p;
  for (uint32_t x = 0; x < 16; ++x) {
    uint32_t l = 0, h = 0;
    for (int b = 0; b < 4; ++b) {
      if (!((x >> b) & 1)) continue;
      if (b < m.n) l |= uint32_t{1} << target[b];
      if (b + 4 < m.n) h |= uint32_t{1} << target[b + 4];
    }
    lo[x] = l;
    hi[x] = h;
  }
  SmallMatroid out;
  out.n = m.n;
  for (uint32_t x : indep) out.SetIndependent(lo[x & 15] | hi[x >> 4]);
  return out;
}

}  // namespace

int SmallMatroid::Rank(uint32_t mask) const {
  uint32_t current = 0;
  int rank = 0;
  for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const uint32_t bit = rest & (~rest + 1);
    if (IsIndependent(current | bit)) {
      current |= bit;
      ++rank;
    }
  }
  return rank;
}

uint32_t SmallMatroid::Closure(uint32_t mask) const {
  uint32_t basis = 0;
  for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const uint32_t bit = rest & (~rest + 1);
    if (IsIndependent(basis | bit)) basis |= bit;
  }
  uint32_t closure = mask;
  for (int e = 0; e < n; ++e) {
    const uint32_t bit = uint32_t{1} << e;
    if (!(mask & bit) && !IsIndependent(basis | bit)) closure |= bit;
  }
  return closure;
}

ExplicitMatroidPtr SmallMatroid::ToExplicit() const {
  std::vector<ElementSet> family;
  for (uint32_t x = 0; x <= FullMask(n); ++x) {
    if (IsIndependent(x)) family.push_back(ElementSet::FromMask(x));
  }
  return ExplicitMatroid::CreateUnchecked(ElementSet::Range(n),
                                          std::move(family));
}

SmallMatroid SmallMatroid::FromMatroid(const Matroid& m) {
  const ElementSet ground = m.ground();
  if (ground != ElementSet::Range(ground.size()) ||
      ground.size() > kMaxEnumeratedElements) {
    throw ArgumentError("SmallMatroid: ground must be {0..n-1} with n <= 8");
  }
  SmallMatroid out;
  out.n = ground.size();
  for (uint32_t x = 0; x <= FullMask(out.n); ++x) {
    if (m.IsIndependent(ElementSet::FromMask(x))) out.SetIndependent(x);
  }
  return out;
}

std::vector<SmallMatroid> SingleElementExtensions(const SmallMatroid& m) {
  if (m.n + 1 > kMaxEnumeratedElements) {
    throw CapacityError("SingleElementExtensions: more than " +
                        std::to_string(kMaxEnumeratedElements) + " elements");
  }
  const HyperplaneSystem sys = BuildHyperplanes(m);
  const std::vector<uint32_t> indep = IndependentMasks(m);
  std::vector<uint64_t> containing;
  containing.reserve(indep.size());
  for (uint32_t x : indep) containing.push_back(sys.Containing(m.Closure(x)));

  const uint32_t new_bit = uint32_t{1} << m.n;
  std::vector<SmallMatroid> out;
  SmallMatroid coloop{m.n + 1, m.table};
  for (uint32_t x : indep) coloop.SetIndependent(x | new_bit);
  out.push_back(coloop);

  ForEachLinearSubclass(sys, [&](uint64_t subclass) {
    SmallMatroid ext{m.n + 1, m.table};
    for (std::size_t k = 0; k < indep.size(); ++k) {
      // The new element is spanned by x iff cl(x) lies in the modular cut,
      // i.e. every hyperplane containing cl(x) belongs to the subclass.
      const bool spanned = (containing[k] & ~subclass) == 0;
      if (!spanned) ext.SetIndependent(indep[k] | new_bit);
    }
    out.push_back(ext);
  });
  return out;
}

std::vector<SmallMatroid> EnumerateLabeledMatroids(int n) {
  if (n < 0 || n > kMaxLabeled) {
    throw CapacityError("EnumerateLabeledMatroids: n must be in [0, " +
                        std::to_string(kMaxLabeled) + "]");
  }
  static std::mutex mu;
  static std::map<int, std::vector<SmallMatroid>> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  SmallMatroid empty;
  empty.SetIndependent(0);
  std::vector<SmallMatroid> level = {empty};
  for (int k = 0; k < n; ++k) {
    std::vector<SmallMatroid> next;
    for (const SmallMatroid& m : level) {
      for (SmallMatroid& ext : SingleElementExtensions(m)) {
        next.push_back(ext);
      }
    }
    level = std::move(next);
  }
  memo[n] = level;
  return level;
}

SmallMatroid CanonicalForm(const SmallMatroid& m) {
  const std::vector<uint32_t> indep = IndependentMasks(m);
  const InvariantClasses classes = ClassifyElements(m, indep);
  bool first = true;
  SmallMatroid best;
  ForEachArrangement(classes, [&](const std::vector<int>& arr) {
    SmallMatroid candidate = Relabel(m, indep, arr);
    if (first || candidate.table < best.table) {
      best = candidate;
      first = false;
    }
  });
  return best;
}

uint64_t AutomorphismCount(const SmallMatroid& m) {
  const std::vector<uint32_t> indep = IndependentMasks(m);
  const InvariantClasses classes = ClassifyElements(m, indep);
  uint64_t count = 0;
  std::vector<int> inverse(m.n);
  // Each arrangement defines sigma(order[p]) = arr[p], a permutation that
  // preserves the invariant classes; automorphisms always do.
  ForEachArrangement(classes, [&](const std::vector<int>& arr) {
    for (int p = 0; p < m.n; ++p) inverse[arr[p]] = classes.order[p];
    if (Relabel(m, indep, inverse) == m) ++count;
  });
  return count;
}

std::vector<SmallMatroid> EnumerateNonIsomorphicMatroids(int n) {
  if (n < 0 || n > kMaxEnumeratedElements) {
    throw CapacityError("EnumerateNonIsomorphicMatroids: n must be in [0, " +
                        std::to_string(kMaxEnumeratedElements) + "]");
  }
  static std::mutex mu;
  static std::map<int, std::vector<SmallMatroid>> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  SmallMatroid empty;
  empty.SetIndependent(0);
  std::vector<SmallMatroid> level = {empty};
  for (int k = 0; k < n; ++k) {
    std::set<SmallMatroid> next;
    for (const SmallMatroid& m : level) {
      for (const SmallMatroid& ext : SingleElementExtensions(m)) {
        next.insert(CanonicalForm(ext));
      }
    }
    level.assign(next.begin(), next.end());
  }
  memo[n] = level;
  return level;
}

}  // namespace matroid_forge
