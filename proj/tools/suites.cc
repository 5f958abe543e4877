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

#include "tools/suites.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "matroid_forge/edmonds.h"
#include "matroid_forge/enumerate.h"
#include "matroid_forge/explicit_matroid.h"
#include "matroid_forge/rng.h"
#include "matroid_forge/uniform_ops.h"
#include "tools/instance.h"

namespace matroid_forge {
namespace {

constexpr std::size_t kMaxExamples = 5;

// Sizes up to which optimality is also checked against full enumeration, and
// the part-union condition against brute force.
constexpr int kBruteMaxCommonElements = 14;
constexpr int kBruteConditionElements = 12;

// Brute-force rank table of a matroid on {0..n-1} given by an independence
// predicate over masks.
std::vector<int> BruteRanks(int n, const std::function<bool(uint32_t)>& indep) {
  std::vector<int> rank(std::size_t{1} << n, 0);
  for (uint32_t x = 0; x < rank.size(); ++x) {
    // Rank of x is the largest independent subset; enumerate subsets of x.
    for (uint32_t s = x;; s = (s - 1) & x) {
      if (indep(s)) rank[x] = std::max(rank[x], std::popcount(s));
      if (s == 0) break;
    }
  }
  return rank;
}

bool BruteMaximal(const Matroid& m, const Matroid& n, ElementSet i) {
  for (Element e : m.ground() - i) {
    if (m.IsIndependent(i.With(e)) && n.IsIndependent(i.With(e))) return false;
  }
  return true;
}

// Some nonempty part union W has an N-independent base of M restricted to W.
bool BruteConditionViolated(const Matroid& m, const PartitionMatroid& n) {
  const uint64_t all = (uint64_t{1} << n.num_parts()) - 1;
  for (uint64_t mask = 1; mask <= all; ++mask) {
    const ElementSet w = n.UnionOfParts(mask);
    if (w.empty()) continue;
    const int r = m.Rank(w);
    bool found = false;
    ForEachSubset(w, [&](ElementSet s) {
      if (!found && s.size() == r && m.IsIndependent(s) &&
          n.IsIndependent(s)) {
        found = true;
      }
    });
    if (found) return true;
  }
  return false;
}

ElementSet RandomCommonIndependent(const Matroid& m, const Matroid& n,
                                   Rng& rng) {
  std::vector<Element> order = m.ground().ToVector();
  rng.Shuffle(order);
  const int limit = rng.Between(0, static_cast<int>(order.size()));
  ElementSet j;
  for (Element e : order) {
    if (j.size() >= limit) break;
    if (m.IsIndependent(j.With(e)) && n.IsIndependent(j.With(e))) j.Insert(e);
  }
  return j;
}

void CheckSide(const MatroidPtr& m, const PartitionMatroid& n, ElementSet j,
               const IntersectionOptions& options, const std::string& label,
               SuiteReport& report) {
  try {
    const SideResult r = FindSpanningCommonBase(m, n, j, options);
    const bool ok = m->IsIndependent(r.base) && n.IsBase(r.base) &&
                    m->Spans(r.base, j);
    report.Check(ok, [&] {
      return label + ": J=" + j.ToString() + " gave B=" + r.base.ToString();
    });
  } catch (const std::exception& e) {
    report.Check(false, [&] {
      return label + ": J=" + j.ToString() + " threw " + e.what();
    });
  }
}

std::string Label(const std::string& kind, int n, std::size_t index,
                  const PartitionMatroid& part) {
  std::ostringstream os;
  os << kind << " #" << index << " on " << n << " elements vs "
     << part.Describe();
  return os.str();
}

std::vector<MatroidPtr> ZooMatroids(int elements) {
  std::vector<MatroidPtr> zoo;
  const ElementSet ground = ElementSet::Range(elements);
  for (int r = 0; r <= elements; ++r) zoo.push_back(MakeUniform(ground, r));
  {
    // K4 with a parallel edge and a self-loop, truncated or padded to size.
    std::vector<Edge> edges = {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 1, 2},
                               {4, 1, 3}, {5, 2, 3}, {6, 0, 1}, {7, 2, 2}};
    edges.resize(std::min<std::size_t>(edges.size(), elements));
    for (int id = static_cast<int>(edges.size()); id < elements; ++id) {
      edges.push_back({id, id, id + 1});
    }
    zoo.push_back(std::make_shared<const GraphicMatroid>(edges));
  }
  for (Family family : {Family::kGraphic, Family::kLinearGf2, Family::kExplicit}) {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      GeneratorSpec spec;
      spec.seed = seed;
      spec.family = family;
      spec.elements = elements;
      spec.parts = std::min(3, elements);
      spec.vertices = 5;
      spec.dimension = 4;
      const Instance inst = Generate(spec);
      const MatroidPair pair = Instantiate(inst);
      zoo.push_back(pair.m);
      if (family == Family::kGraphic) zoo.push_back(pair.n);
    }
  }
  return zoo;
}

void KernelChecks(const MatroidPtr& m, const std::string& label,
                  SuiteReport& report) {
  const ElementSet ground = m->ground();
  const std::vector<Element> ids = ground.ToVector();
  const int n = static_cast<int>(ids.size());
  // Work in the compressed index space [0, 2^n) and map to element sets.
  auto to_set = [&](uint32_t mask) {
    ElementSet s;
    for (int k = 0; k < n; ++k) {
      if ((mask >> k) & 1) s.Insert(ids[k]);
    }
    return s;
  };
  const uint32_t full = (uint32_t{1} << n) - 1;
  const std::vector<int> brute =
      BruteRanks(n, [&](uint32_t s) { return m->IsIndependent(to_set(s)); });

  std::vector<int> rank(full + 1);
  std::vector<ElementSet> span(full + 1);
  for (uint32_t x = 0; x <= full; ++x) {
    const ElementSet xs = to_set(x);
    rank[x] = m->Rank(xs);
    span[x] = m->Span(xs);
    report.Check(rank[x] == brute[x], [&] {
      return label + ": rank" + xs.ToString() + " differs from brute force";
    });
    ElementSet expected_span;
    for (int k = 0; k < n; ++k) {
      if (brute[x | (1u << k)] == brute[x]) expected_span.Insert(ids[k]);
    }
    report.Check(span[x] == expected_span, [&] {
      return label + ": span" + xs.ToString() + " = " + span[x].ToString();
    });
    report.Check(xs.IsSubsetOf(span[x]) && m->Span(span[x]) == span[x], [&] {
      return label + ": span not idempotent at " + xs.ToString();
    });
    // e is spanned iff {e} is a loop of M/X.
    const auto contracted = Contract(m, xs);
    ElementSet via_contraction = xs;
    for (Element e : ground - xs) {
      if (!contracted->IsIndependent(ElementSet().With(e))) {
        via_contraction.Insert(e);
      }
    }
    report.Check(via_contraction == span[x], [&] {
      return label + ": span" + xs.ToString() +
             " disagrees with loops of the contraction";
    });
  }

  for (uint32_t x = 0; x <= full; ++x) {
    for (uint32_t y = 0; y <= full; ++y) {
      report.Check(rank[x] + rank[y] >= rank[x | y] + rank[x & y], [&] {
        return label + ": submodularity fails at " + to_set(x).ToString() +
               ", " + to_set(y).ToString();
      });
      if ((x & y) == x) {
        report.Check(span[x].IsSubsetOf(span[y]), [&] {
          return label + ": span not monotone at " + to_set(x).ToString() +
                 " <= " + to_set(y).ToString();
        });
      }
    }
  }

  // Every (contract C, delete D) with C, D disjoint, encoded in base 3.
  for (uint32_t c = 0; c <= full; ++c) {
    const uint32_t free_mask = full & ~c;
    for (uint32_t d = free_mask;; d = (d - 1) & free_mask) {
      const ElementSet cs = to_set(c);
      const ElementSet ds = to_set(d);
      const auto minor = Minor(m, cs, ds);
      const auto contract_then_delete = Delete(Contract(m, cs), ds);
      const auto delete_then_contract = Contract(Delete(m, ds), cs);
      const uint32_t rest = full & ~c & ~d;
      bool ok = true;
      for (uint32_t s = rest;; s = (s - 1) & rest) {
        // S is independent in M/C - D iff r(S + C) = |S| + r(C).
        const bool expected = brute[s | c] == std::popcount(s) + brute[c];
        const ElementSet ss = to_set(s);
        ok = ok && minor->IsIndependent(ss) == expected &&
             contract_then_delete->IsIndependent(ss) == expected &&
             delete_then_contract->IsIndependent(ss) == expected;
        if (s == 0) break;
      }
      report.Check(ok, [&] {
        return label + ": minors disagree for C=" + cs.ToString() +
               " D=" + ds.ToString();
      });
      if (d == 0) break;
    }
  }

  const ExplicitMatroidPtr explicit_m = ExplicitMatroid::Materialize(*m);
  const ExplicitMatroidPtr dual = Dual(*explicit_m);
  bool dual_ok = Dual(*dual)->independent_sets() ==
                 explicit_m->independent_sets();
  for (uint32_t s = 0; s <= full; ++s) {
    // S is co-independent iff E - S is spanning.
    dual_ok = dual_ok && dual->IsIndependent(to_set(s)) ==
                             (brute[full & ~s] == brute[full]);
  }
  report.Check(dual_ok, [&] { return label + ": dual check failed"; });
}

ExplicitMatroidPtr Shifted(const SmallMatroid& m, int offset) {
  std::vector<ElementSet> family;
  for (uint32_t s = 0; s < (uint32_t{1} << m.n); ++s) {
    if (m.IsIndependent(s)) {
      family.push_back(ElementSet::FromMask(uint64_t{s} << offset));
    }
  }
  return ExplicitMatroid::CreateUnchecked(
      ElementSet::FromMask(((uint64_t{1} << m.n) - 1) << offset),
      std::move(family));
}

void DirectSumChecks(int max_total, SuiteReport& report) {
  std::vector<SmallMatroid> small;
  for (int n = 0; n <= max_total; ++n) {
    for (const SmallMatroid& m : EnumerateNonIsomorphicMatroids(n)) {
      small.push_back(m);
    }
  }
  for (std::size_t a = 0; a < small.size(); ++a) {
    for (std::size_t b = 0; b < small.size(); ++b) {
      if (small[a].n + small[b].n > max_total) continue;
      const MatroidPtr left = Shifted(small[a], 0);
      const MatroidPtr right = Shifted(small[b], small[a].n);
      const auto sum = DirectSum({left, right});
      const int n = small[a].n + small[b].n;
      const std::vector<int> brute = BruteRanks(n, [&](uint32_t s) {
        return sum->IsIndependent(ElementSet::FromMask(s));
      });
      bool ok = true;
      for (uint32_t x = 0; x < (uint32_t{1} << n); ++x) {
        const ElementSet xs = ElementSet::FromMask(x);
        const int additive = left->Rank(xs & left->ground()) +
                             right->Rank(xs & right->ground());
        ok = ok && sum->Rank(xs) == additive && brute[x] == additive;
      }
      report.Check(ok, [&] {
        std::ostringstream os;
        os << "direct sum of classes #" << a << " and #" << b
           << " is not rank additive";
        return os.str();
      });
    }
  }
}

}  // namespace

void SuiteReport::Fail(const std::string& description) {
  ++failures;
  if (examples.size() < kMaxExamples) examples.push_back(description);
}

void SuiteReport::Merge(const SuiteReport& other) {
  cases += other.cases;
  failures += other.failures;
  for (const auto& e : other.examples) {
    if (examples.size() < kMaxExamples) examples.push_back(e);
  }
}

std::string SuiteReport::Summary() const {
  std::ostringstream os;
  os << name << ": " << cases << " checks, " << failures << " failures";
  for (const auto& e : examples) os << "\n    " << e;
  return os.str();
}

std::vector<PartitionMatroidPtr> AllPartitionMatroids(ElementSet ground,
                                                      int max_parts) {
  std::vector<PartitionMatroidPtr> out;
  if (ground.empty()) {
    out.push_back(std::make_shared<const PartitionMatroid>(std::vector<Part>{}));
    return out;
  }
  const std::vector<Element> ids = ground.ToVector();
  std::vector<Part> blocks;
  std::function<void(std::size_t)> assign_caps;
  std::function<void(std::size_t)> assign_blocks;
  assign_caps = [&](std::size_t k) {
    if (k == blocks.size()) {
      out.push_back(std::make_shared<const PartitionMatroid>(blocks));
      return;
    }
    for (int cap = 0; cap <= blocks[k].elements.size(); ++cap) {
      blocks[k].cap = cap;
      assign_caps(k + 1);
    }
  };
  // Restricted growth: element i joins an existing block or opens the next.
  assign_blocks = [&](std::size_t i) {
    if (i == ids.size()) {
      assign_caps(0);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].elements.Insert(ids[i]);
      assign_blocks(i + 1);
      blocks[b].elements.Erase(ids[i]);
    }
    if (static_cast<int>(blocks.size()) < max_parts) {
      blocks.push_back({ElementSet().With(ids[i]), 0});
      assign_blocks(i + 1);
      blocks.pop_back();
    }
  };
  assign_blocks(0);
  return out;
}

GeneratorSpec RandomSuiteSpec(uint64_t base_seed, int k) {
  Rng rng(base_seed + static_cast<uint64_t>(k) * 0x9e3779b97f4a7c15ULL);
  GeneratorSpec spec;
  spec.family = static_cast<Family>(k % 4);
  spec.seed = rng.Next();
  const int max_elements = spec.family == Family::kExplicit
                               ? kMaxGeneratedExplicitElements
                               : kMaxGeneratedElements;
  spec.elements = rng.Between(1, max_elements);
  spec.vertices = rng.Between(2, 9);
  spec.edge_probability = 0.5;
  spec.dimension = rng.Between(1, 6);
  spec.parts = rng.Between(1, std::min(5, spec.elements));
  spec.min_cap = 0;
  spec.max_cap = rng.Between(0, 4);
  return spec;
}

ExhaustiveLemmaReports ExhaustiveLemmaSuite(
    int max_elements, int max_parts, bool check_side,
    const IntersectionOptions& options) {
  ExhaustiveLemmaReports reports;
  Rng rng(0x6c656d6d61ULL);
  for (int n = 0; n <= max_elements; ++n) {
    const std::vector<SmallMatroid> classes = EnumerateNonIsomorphicMatroids(n);
    const std::vector<PartitionMatroidPtr> partitions =
        AllPartitionMatroids(ElementSet::Range(n), max_parts);
    for (std::size_t index = 0; index < classes.size(); ++index) {
      const SmallMatroid& small = classes[index];
      const MatroidPtr m = small.ToExplicit();
      for (const PartitionMatroidPtr& np : partitions) {
        const PartitionMatroid& part = *np;
        ++reports.pairs;
        for (uint32_t s = 0; s < (uint32_t{1} << n); ++s) {
          const ElementSet i = ElementSet::FromMask(s);
          if (!small.IsIndependent(s) || !part.IsIndependent(i)) continue;
          const bool maximal = BruteMaximal(*m, part, i);
          reports.maximal.Check(IsMaximalCommon(*m, part, i) == maximal, [&] {
            return Label("class", n, index, part) + ": I=" + i.ToString();
          });
          const ElementSet ext = ExtendToMaximalCommon(m, part, i);
          reports.extend.Check(
              i.IsSubsetOf(ext) && small.IsIndependent(ext.mask()) &&
                  part.IsIndependent(ext) && BruteMaximal(*m, part, ext),
              [&] {
                return Label("class", n, index, part) + ": I=" + i.ToString() +
                       " extended to " + ext.ToString();
              });
        }
        if (!check_side || BruteConditionViolated(*m, part)) continue;
        ++reports.condition_pairs;
        const std::string label = Label("class", n, index, part);
        CheckSide(m, part, ElementSet(), options, label, reports.side);
        CheckSide(m, part, RandomCommonIndependent(*m, part, rng), options,
                  label, reports.side);
      }
    }
  }
  return reports;
}

SuiteReport UniformSuite(int max_elements) {
  SuiteReport report{"uniform characterization"};
  for (int n = 0; n <= max_elements; ++n) {
    const uint32_t full = (uint32_t{1} << n) - 1;
    for (const SmallMatroid& small : EnumerateLabeledMatroids(n)) {
      const int r = small.Rank(full);
      bool exchange_uniform = true;
      bool indep_or_spanning = true;
      bool size_family = true;
      for (uint32_t s = 0; s <= full; ++s) {
        const bool indep = small.IsIndependent(s);
        if (!indep && small.Rank(s) != r) indep_or_spanning = false;
        if (indep != (std::popcount(s) <= r)) size_family = false;
        if (!indep) continue;
        for (int e = 0; e < n; ++e) {
          if (!((s >> e) & 1)) continue;
          for (int f = 0; f < n; ++f) {
            if ((s >> f) & 1) continue;
            if (!small.IsIndependent((s & ~(1u << e)) | (1u << f))) {
              exchange_uniform = false;
            }
          }
        }
      }
      const ExplicitMatroidPtr m = small.ToExplicit();
      auto label = [&] {
        std::ostringstream os;
        os << "matroid on " << n << " elements with "
           << m->independent_sets().size() << " independent sets";
        return os.str();
      };
      report.Check(exchange_uniform == indep_or_spanning, [&] {
        return label() + ": exchange and independent-or-spanning disagree";
      });
      report.Check(FindExchangeViolation(*m).has_value() == !exchange_uniform,
                   [&] { return label() + ": FindExchangeViolation wrong"; });
      const UniformClass cls = ClassifyUniform(*m);
      UniformClass::Kind expected = UniformClass::Kind::kNotUniform;
      if (size_family) {
        expected = r == n ? UniformClass::Kind::kFree
                          : UniformClass::Kind::kUniformRank;
      }
      report.Check(cls.kind == expected &&
                       (expected == UniformClass::Kind::kNotUniform ||
                        cls.rank == r),
                   [&] { return label() + ": classified " + cls.ToString(); });
    }
  }
  return report;
}

SuiteReport ClosureSuite(int max_elements) {
  SuiteReport report{"closure under duality and minors"};
  for (int n = 0; n <= max_elements; ++n) {
    for (const SmallMatroid& small : EnumerateLabeledMatroids(n)) {
      const ExplicitMatroidPtr m = small.ToExplicit();
      const UniformClass cls = ClassifyUniform(*m);
      if (cls.kind == UniformClass::Kind::kNotUniform) continue;
      const int r = m->Rank();
      auto is_uniform = [](const Matroid& x, int rank) {
        const UniformClass c = ClassifyUniform(x);
        return c.kind != UniformClass::Kind::kNotUniform && x.Rank() == rank;
      };
      report.Check(is_uniform(*Dual(*m), n - r), [&] {
        return "dual of U(" + std::to_string(n) + "," + std::to_string(r) +
               ") is not uniform of rank " + std::to_string(n - r);
      });
      for (Element e = 0; e < n; ++e) {
        const ElementSet single = ElementSet().With(e);
        const int deleted_rank = std::min(r, n - 1);
        const int contracted_rank = r > 0 ? r - 1 : 0;
        report.Check(is_uniform(*Delete(m, single), deleted_rank), [&] {
          return "U(" + std::to_string(n) + "," + std::to_string(r) +
                 ") minus " + std::to_string(e) + " is not uniform";
        });
        report.Check(is_uniform(*Contract(m, single), contracted_rank), [&] {
          return "U(" + std::to_string(n) + "," + std::to_string(r) + ") / " +
                 std::to_string(e) + " is not uniform";
        });
      }
    }
  }
  return report;
}

SuiteReport KernelSuite(int max_enumerated, int zoo_elements) {
  SuiteReport report{"kernel properties"};
  for (int n = 0; n <= max_enumerated; ++n) {
    const std::vector<SmallMatroid> classes = EnumerateNonIsomorphicMatroids(n);
    for (std::size_t index = 0; index < classes.size(); ++index) {
      KernelChecks(classes[index].ToExplicit(),
                   "class #" + std::to_string(index) + " on " +
                       std::to_string(n) + " elements",
                   report);
    }
  }
  for (const MatroidPtr& m : ZooMatroids(zoo_elements)) {
    KernelChecks(m, m->Describe(), report);
  }
  DirectSumChecks(zoo_elements, report);
  return report;
}

RandomSuiteReports RandomSuite(int count, uint64_t base_seed, bool check_side,
                               const IntersectionOptions& options) {
  RandomSuiteReports reports;
  for (int k = 0; k < count; ++k) {
    const GeneratorSpec spec = RandomSuiteSpec(base_seed, k);
    const Instance inst = Generate(spec);
    const MatroidPair pair = Instantiate(inst, options.thresholds);
    const Matroid& m = *pair.m;
    const PartitionMatroid& n = *pair.n;
    std::ostringstream label_os;
    label_os << "instance " << k << " (" << FamilyName(spec.family) << ", seed "
             << spec.seed << ", " << inst.elements.size() << " elements, "
             << n.num_parts() << " parts)";
    const std::string label = label_os.str();

    RunLog log;
    Witness w;
    try {
      w = BuildWitness(pair.m, n, options, &log);
    } catch (const std::exception& e) {
      reports.witness.Check(false, [&] { return label + ": " + e.what(); });
      continue;
    }
    if (log.heuristic_theta) ++reports.heuristic_runs;
    const VerificationReport verification = VerifyWitness(m, n, w);
    reports.witness.Check(verification.ok(), [&] {
      return label + ":\n" + verification.ToString();
    });

    const CertifiedOptimum opt = MaxCommonIndependent(m, n);
    const ElementSet a = m.Span(w.m_side);
    reports.optimality.Check(
        w.common.size() == opt.common.size() &&
            m.Rank(a) + n.Rank(m.ground() - a) == w.common.size() &&
            Certify(m, n, opt.common, opt.certificate),
        [&] {
          return label + ": |I|=" + std::to_string(w.common.size()) +
                 ", augmenting-path size " +
                 std::to_string(opt.common.size());
        });
    if (m.ground().size() <= kBruteMaxCommonElements) {
      ++reports.brute_force_checked;
      const ElementSet brute = BruteForceMaxCommon(m, n);
      reports.optimality.Check(brute.size() == w.common.size(), [&] {
        return label + ": brute-force maximum " + brute.ToString();
      });
    }

    if (!check_side) continue;
    bool holds = CheckPartUnionCondition(pair.m, n).holds;
    if (m.ground().size() <= kBruteConditionElements) {
      const bool brute_holds = !BruteConditionViolated(m, n);
      reports.side.Check(holds == brute_holds, [&] {
        return label + ": condition check disagrees with brute force";
      });
      holds = brute_holds;
    }
    if (!holds) continue;
    ++reports.condition_pairs;
    Rng rng(spec.seed);
    CheckSide(pair.m, n, ElementSet(), options, label, reports.side);
    CheckSide(pair.m, n, RandomCommonIndependent(m, n, rng), options, label,
              reports.side);
  }
  return reports;
}

}  // namespace matroid_forge
