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

#include "tools/run.h"

#include <sstream>

#include "tools/json_format.h"

namespace matroid_forge {
namespace {

Json VerificationJson(const VerificationReport& report) {
  Json v;
  v["ok"] = report.ok();
  v["checks"] = Json::array();
  for (const auto& c : report.checks) {
    v["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return v;
}

}  // namespace

IntersectResult RunIntersect(const MatroidPair& pair,
                             const IntersectionOptions& options) {
  IntersectResult result;
  result.witness = BuildWitness(pair.m, *pair.n, options, &result.log);
  result.verification = VerifyWitness(*pair.m, *pair.n, result.witness);
  result.size = result.witness.common.size();
  result.edmonds_size = MaxCommonIndependent(*pair.m, *pair.n).common.size();
  result.agreement =
      result.verification.ok() && result.size == result.edmonds_size;
  return result;
}

std::string FormatIntersect(const IntersectResult& r, OutputFormat format,
                            bool trace) {
  const ElementSet certificate = r.verification.certificate.value_or(ElementSet());
  if (format == OutputFormat::kText) {
    std::ostringstream os;
    os << "I   = " << r.witness.common.ToString() << "\n"
       << "I_M = " << r.witness.m_side.ToString() << "\n"
       << "I_N = " << r.witness.n_side.ToString() << "\n"
       << "A   = " << certificate.ToString() << "\n"
       << "size " << r.size << ", augmenting-path size " << r.edmonds_size
       << ", agreement " << (r.agreement ? "true" : "false") << "\n";
    if (r.log.heuristic_theta) os << "note: heuristic theta search used\n";
    if (r.log.exact_fallback) os << "note: exact theta fallback ran\n";
    os << r.verification.ToString();
    if (trace) {
      for (const TraceEvent& e : r.log.events) {
        os << std::string(2 * e.depth, ' ') << e.step;
        for (const auto& [name, set] : e.sets) {
          os << " " << name << "=" << set.ToString();
        }
        os << "\n";
      }
    }
    return os.str();
  }
  Json doc;
  doc["witness"] = {{"I", SetToJson(r.witness.common)},
                    {"I_M", SetToJson(r.witness.m_side)},
                    {"I_N", SetToJson(r.witness.n_side)}};
  doc["certificate"] = SetToJson(certificate);
  doc["size"] = r.size;
  doc["edmonds_size"] = r.edmonds_size;
  doc["agreement"] = r.agreement;
  doc["heuristic_theta"] = r.log.heuristic_theta;
  doc["exact_fallback"] = r.log.exact_fallback;
  doc["verification"] = VerificationJson(r.verification);
  if (trace) {
    Json events = Json::array();
    for (const TraceEvent& e : r.log.events) {
      Json sets = Json::object();
      for (const auto& [name, set] : e.sets) sets[name] = SetToJson(set);
      events.push_back({{"depth", e.depth}, {"step", e.step}, {"sets", sets}});
    }
    doc["trace"] = events;
  }
  return FormatJson(doc);
}

std::string FormatVerification(const VerificationReport& report,
                               OutputFormat format) {
  if (format == OutputFormat::kText) {
    return report.ToString() + (report.ok() ? "verified\n" : "FAILED\n");
  }
  return FormatJson(VerificationJson(report));
}

std::string FormatEdmonds(const CertifiedOptimum& opt, bool certified,
                          OutputFormat format) {
  if (format == OutputFormat::kText) {
    std::ostringstream os;
    os << "I* = " << opt.common.ToString() << "\n"
       << "A  = " << opt.certificate.ToString() << "\n"
       << "size " << opt.common.size() << ", certified "
       << (certified ? "true" : "false") << "\n";
    return os.str();
  }
  Json doc;
  doc["common"] = SetToJson(opt.common);
  doc["certificate"] = SetToJson(opt.certificate);
  doc["size"] = opt.common.size();
  doc["certified"] = certified;
  doc["phase_sizes"] = opt.phase_sizes;
  return FormatJson(doc);
}

}  // namespace matroid_forge
