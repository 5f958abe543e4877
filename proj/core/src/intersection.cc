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

#include "matroid_forge/intersection.h"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "matroid_forge/edmonds.h"
#include "matroid_forge/errors.h"
#include "matroid_forge/rng.h"
#include "matroid_forge/uniform_ops.h"

namespace matroid_forge {
namespace {

// Largest part count for which all 2^n - 1 part unions are enumerated.
constexpr int kMaxConditionParts = 24;

uint64_t AllParts(const PartitionMatroid& n) {
  return n.num_parts() >= 64 ? ~uint64_t{0}
                             : (uint64_t{1} << n.num_parts()) - 1;
}

void Record(RunLog* log, int depth, std::string step,
            std::vector<std::pair<std::string, ElementSet>> sets) {
  if (log == nullptr) return;
  log->events.push_back({depth, std::move(step), std::move(sets)});
}

bool CommonIndependent(const Matroid& m, const PartitionMatroid& n,
                       ElementSet s) {
  return m.IsIndependent(s) && n.IsIndependent(s);
}

void CheckSameGround(const Matroid& m, const PartitionMatroid& n,
                     const char* op) {
  if (m.ground() != n.ground()) {
    throw ArgumentError(std::string(op) + ": ground sets differ: " +
                        m.ground().ToString() + " vs " +
                        n.ground().ToString());
  }
}

// Parts in Θ(I) moved to the front in ascending order, the rest after them.
// The sub-problem sees new indices 0..k-1; `new_to_old` maps them back.
struct PartRelabeling {
  std::vector<int> new_to_old;
  int front = 0;

  static PartRelabeling ThetaFirst(const PartitionMatroid& n,
                                   PartIndexSet theta) {
    PartRelabeling r;
    for (int i = 0; i < n.num_parts(); ++i) {
      if (theta.Contains(i)) r.new_to_old.push_back(i);
    }
    r.front = static_cast<int>(r.new_to_old.size());
    for (int i = 0; i < n.num_parts(); ++i) {
      if (!theta.Contains(i)) r.new_to_old.push_back(i);
    }
    return r;
  }

  PartIndexSet FrontAsOld() const {
    PartIndexSet out;
    for (int k = 0; k < front; ++k) out.Insert(new_to_old[k]);
    return out;
  }
};

class ThetaSearch {
 public:
  ThetaSearch(const Matroid& m, const PartitionMatroid& n, ElementSet current)
      : m_(m), n_(n), current_(current), theta_(Theta(m, n, current)) {}

  PartIndexSet theta() const { return theta_; }

  // span_M(k) ⊇ current and Θ(k) ⊋ Θ(current). Valid for any k ⊆ E.
  bool Improves(ElementSet k) const {
    if (!m_.Spans(k, current_)) return false;
    return Theta(m_, n_, k) != theta_;
  }

  // Canonically least improving common independent set, by depth-first
  // search in canonical order. A subtree is skipped when even the union of
  // all its admissible elements does not improve, since span and Θ are
  // monotone.
  std::optional<ElementSet> Exhaustive() const {
    return Search(ElementSet(), 0);
  }

  std::optional<ElementSet> Randomized(Rng& rng, int restarts) const {
    std::vector<Element> order = m_.ground().ToVector();
    for (int r = 0; r < restarts; ++r) {
      rng.Shuffle(order);
      ElementSet k = (r % 2 == 0) ? current_ : ElementSet();
      for (Element e : order) {
        if (!k.Contains(e) && CommonIndependent(m_, n_, k.With(e))) {
          k.Insert(e);
        }
      }
      if (Improves(k)) return k;
    }
    return std::nullopt;
  }

 private:
  std::optional<ElementSet> Search(ElementSet k, Element min_next) const {
    if (Improves(k)) return k;
    ElementSet candidates;
    for (Element e : m_.ground()) {
      if (e < min_next) continue;
      if (CommonIndependent(m_, n_, k.With(e))) candidates.Insert(e);
    }
    if (candidates.empty() || !Improves(k | candidates)) return std::nullopt;
    for (Element e : candidates) {
      if (auto found = Search(k.With(e), e + 1)) return found;
    }
    return std::nullopt;
  }

  const Matroid& m_;
  const PartitionMatroid& n_;
  ElementSet current_;
  PartIndexSet theta_;
};

bool SideHolds(const Matroid& m, const PartitionMatroid& n, ElementSet j,
               ElementSet b) {
  return m.IsIndependent(b) && n.IsBase(b) && m.Spans(b, j);
}

SideResult SideImpl(const MatroidPtr& m, const PartitionMatroid& n,
                    ElementSet j, const IntersectionOptions& options,
                    RunLog* log, int depth) {
  if (n.ground().empty()) {
    Record(log, depth, "side_base_case", {{"J", j}});
    return {ElementSet(), true};
  }
  const ThetaResult best = MaximizeTheta(*m, n, j, options, log);
  if (best.theta == PartIndexSet::FromMask(AllParts(n))) {
    // E ⊆ span_M(I) would make I an N-independent base of M.
    throw std::logic_error(
        "FindSpanningCommonBase: every part is M-spanned; the part-union "
        "condition does not hold");
  }
  const PartRelabeling relabel = PartRelabeling::ThetaFirst(n, best.theta);
  const ElementSet sub_ground = n.UnionOfParts(relabel.FrontAsOld().mask());
  Record(log, depth, "side_theta",
         {{"J", j}, {"I", best.common}, {"theta", best.theta},
          {"E'", sub_ground}});

  const auto sub_m = Restrict(m, sub_ground);
  const auto sub_n = n.KeepParts(relabel.FrontAsOld().mask());
  const SideResult sub =
      SideImpl(sub_m, *sub_n, best.common & sub_ground, options, log,
               depth + 1);

  const ElementSet seeded =
      m->ExtendIndependent(sub.base, best.common - sub_ground);
  const ElementSet base = ExtendToMaximalCommon(m, n, seeded);
  Record(log, depth, "side_extend",
         {{"B'", sub.base}, {"seeded", seeded}, {"B", base}});
  return {base, best.exact && sub.exact};
}

// Checks the preconditions, runs the recursion, and repeats it with the
// exhaustive Θ search if a heuristic run misses a postcondition.
SideResult SideWithFallback(const MatroidPtr& m, const PartitionMatroid& n,
                            ElementSet j, const IntersectionOptions& options,
                            RunLog* log, int depth) {
  CheckCommonIndependent(*m, n, j, "FindSpanningCommonBase");
  const ConditionReport cond = CheckPartUnionCondition(m, n);
  if (!cond.holds) {
    throw ConditionViolatedError(
        "FindSpanningCommonBase: M restricted to " +
            cond.violating_union->ToString() + " has the N-independent base " +
            cond.base->ToString(),
        *cond.violating_union);
  }
  SideResult result = SideImpl(m, n, j, options, log, depth);
  if (SideHolds(*m, n, j, result.base)) return result;
  if (result.exact) {
    throw std::logic_error("FindSpanningCommonBase: exact search produced " +
                           result.base.ToString() +
                           ", which fails the postconditions");
  }
  if (log != nullptr) log->exact_fallback = true;
  IntersectionOptions strict = options;
  strict.thresholds.theta = std::numeric_limits<int>::max();
  result = SideImpl(m, n, j, strict, log, depth);
  if (!SideHolds(*m, n, j, result.base)) {
    throw std::logic_error("FindSpanningCommonBase: postconditions fail");
  }
  return result;
}

Witness WitnessImpl(const MatroidPtr& m, const PartitionMatroid& n,
                    const IntersectionOptions& options, RunLog* log,
                    int depth) {
  if (n.num_parts() == 0) {
    Record(log, depth, "witness_base_case", {});
    return {};
  }
  const ConditionReport cond = CheckPartUnionCondition(m, n);
  if (!cond.holds) {
    const ElementSet w = *cond.violating_union;
    const ElementSet b = *cond.base;
    Record(log, depth, "witness_contract",
           {{"parts", *cond.violating_parts}, {"W", w}, {"B", b}});
    // N − W = N / W, so the contracted pair keeps N in partition form.
    const auto contracted = Contract(m, w);
    const auto remaining = n.RemoveParts(cond.violating_parts->mask());
    const Witness sub = WitnessImpl(contracted, *remaining, options, log,
                                    depth + 1);
    return {sub.common | b, sub.m_side | b, sub.n_side};
  }
  const SideResult side =
      SideWithFallback(m, n, ElementSet(), options, log, depth);
  Record(log, depth, "witness_side", {{"B", side.base}});
  return {side.base, ElementSet(), side.base};
}

}  // namespace

void CheckCommonIndependent(const Matroid& m, const PartitionMatroid& n,
                            ElementSet i, const char* op) {
  CheckSameGround(m, n, op);
  if (!i.IsSubsetOf(m.ground())) {
    throw InvalidInputError(std::string(op) + ": " + i.ToString() +
                            " is not a subset of the ground set");
  }
  if (!m.IsIndependent(i)) {
    throw InvalidInputError(std::string(op) + ": " + i.ToString() +
                            " is dependent in M");
  }
  if (!n.IsIndependent(i)) {
    throw InvalidInputError(std::string(op) + ": " + i.ToString() +
                            " is dependent in N");
  }
}

ElementSet ExtendToMaximalCommon(const MatroidPtr& m, const PartitionMatroid& n,
                                 ElementSet i) {
  CheckCommonIndependent(*m, n, i, "ExtendToMaximalCommon");
  const ElementSet ground = m->ground();
  for (const Part& part : n.parts()) {
    const ElementSet rest = part.elements - i;
    // (M / I) restricted to E_i − I, against U_i / (I ∩ E_i).
    const auto local_m = Minor(m, i, ground - i - rest);
    const UniformMatroid local_u(rest, part.cap - (i & part.elements).size());
    i |= BaseExchangeWithUniform(*local_m, local_u).set;
  }
  return i;
}

bool IsMaximalCommon(const Matroid& m, const PartitionMatroid& n,
                     ElementSet i) {
  CheckCommonIndependent(m, n, i, "IsMaximalCommon");
  for (const Part& part : n.parts()) {
    if (!m.Spans(i, part.elements) && !n.Spans(i, part.elements)) {
      return false;
    }
  }
  return true;
}

ConditionReport CheckPartUnionCondition(const MatroidPtr& m,
                                        const PartitionMatroid& n) {
  CheckSameGround(*m, n, "CheckPartUnionCondition");
  if (n.num_parts() > kMaxConditionParts) {
    throw CapacityError("CheckPartUnionCondition: " +
                        std::to_string(n.num_parts()) +
                        " parts, above the limit " +
                        std::to_string(kMaxConditionParts));
  }
  ConditionReport report;
  for (uint64_t mask = 1; mask <= AllParts(n); ++mask) {
    const ElementSet w = n.UnionOfParts(mask);
    if (w.empty()) continue;
    const auto restricted_m = Restrict(m, w);
    const auto restricted_n = n.KeepParts(mask);
    // M↾W has an N-independent base iff the maximum common independent set
    // of the restrictions reaches rank_M(W).
    const CertifiedOptimum opt =
        MaxCommonIndependent(*restricted_m, *restricted_n);
    if (opt.common.size() == m->Rank(w)) {
      report.holds = false;
      report.violating_parts = PartIndexSet::FromMask(mask);
      report.violating_union = w;
      report.base = opt.common;
      return report;
    }
  }
  return report;
}

PartIndexSet Theta(const Matroid& m, const PartitionMatroid& n, ElementSet i) {
  PartIndexSet theta;
  for (int k = 0; k < n.num_parts(); ++k) {
    if (m.Spans(i, n.part(k).elements)) theta.Insert(k);
  }
  return theta;
}

ThetaResult MaximizeTheta(const Matroid& m, const PartitionMatroid& n,
                          ElementSet j, const IntersectionOptions& options,
                          RunLog* log) {
  CheckCommonIndependent(m, n, j, "MaximizeTheta");
  ThetaResult result;
  result.common = j;
  const bool exact = m.ground().size() <= options.thresholds.theta;
  result.exact = exact;
  if (!exact && log != nullptr) log->heuristic_theta = true;
  Rng rng(options.heuristic_seed);
  // Θ strictly grows with every improvement, so there are at most n rounds.
  for (int round = 0; round <= n.num_parts(); ++round) {
    const ThetaSearch search(m, n, result.common);
    result.theta = search.theta();
    const std::optional<ElementSet> better =
        exact ? search.Exhaustive()
              : search.Randomized(rng, options.thresholds.theta_restarts);
    if (!better) break;
    result.common = *better;
    ++result.improvements;
  }
  result.theta = Theta(m, n, result.common);
  return result;
}

SideResult FindSpanningCommonBase(const MatroidPtr& m,
                                  const PartitionMatroid& n, ElementSet j,
                                  const IntersectionOptions& options,
                                  RunLog* log) {
  return SideWithFallback(m, n, j, options, log, 0);
}

Witness BuildWitness(const MatroidPtr& m, const PartitionMatroid& n,
                     const IntersectionOptions& options, RunLog* log) {
  CheckSameGround(*m, n, "BuildWitness");
  return WitnessImpl(m, n, options, log, 0);
}

bool VerificationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

std::string VerificationReport::ToString() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

VerificationReport VerifyWitness(const Matroid& m, const PartitionMatroid& n,
                                 const Witness& w) {
  VerificationReport report;
  auto add = [&](std::string name, bool passed, std::string detail = "") {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const ElementSet ground = m.ground();
  if (ground != n.ground()) {
    add("ground", false,
        "M has ground " + ground.ToString() + ", N has " +
            n.ground().ToString());
    return report;
  }
  const ElementSet all = w.common | w.m_side | w.n_side;
  if (!all.IsSubsetOf(ground)) {
    add("subsets", false,
        "elements " + (all - ground).ToString() + " are outside the ground");
    return report;
  }
  add("subsets", true);

  const bool disjoint = !w.m_side.Intersects(w.n_side);
  const bool covers = (w.m_side | w.n_side) == w.common;
  std::string detail;
  if (!disjoint) detail = "I_M and I_N share " + (w.m_side & w.n_side).ToString();
  if (!covers) {
    if (!detail.empty()) detail += "; ";
    detail += "I_M ∪ I_N = " + (w.m_side | w.n_side).ToString() +
              " differs from I = " + w.common.ToString();
  }
  add("bipartition", disjoint && covers, detail);
  add("independent_in_M", m.IsIndependent(w.common),
      m.IsIndependent(w.common) ? "" : w.common.ToString() + " is dependent");
  add("independent_in_N", n.IsIndependent(w.common),
      n.IsIndependent(w.common) ? "" : w.common.ToString() + " is dependent");

  const ElementSet m_span = m.Span(w.m_side);
  const ElementSet covered = m_span | n.Span(w.n_side);
  add("span_cover", covered == ground,
      covered == ground ? "" : "uncovered " + (ground - covered).ToString());

  report.certificate = m_span;
  const int lhs = m.Rank(m_span) + n.Rank(ground - m_span);
  std::ostringstream mm;
  mm << "rank_M(A) + rank_N(E - A) = " << lhs << ", |I| = "
     << w.common.size();
  add("min_max", lhs == w.common.size(), mm.str());
  return report;
}

}  // namespace matroid_forge
