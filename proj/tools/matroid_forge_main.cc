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

// matroid-forge: witnesses, oracles, and generators for matroid pairs.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
// 3 capacity exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "matroid_forge/edmonds.h"
#include "matroid_forge/errors.h"
#include "matroid_forge/explicit_matroid.h"
#include "matroid_forge/intersection.h"
#include "matroid_forge/thresholds.h"
#include "matroid_forge/uniform_ops.h"
#include "tools/generator.h"
#include "tools/instance.h"
#include "tools/json_format.h"
#include "tools/run.h"
#include "tools/suites.h"

namespace matroid_forge {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitCapacity = 3;

struct GlobalFlags {
  std::string format = "json";
  bool trace = false;
  std::optional<uint64_t> seed;
  std::optional<int> threshold_brute;
  std::optional<int> threshold_theta;

  OutputFormat output_format() const {
    return format == "text" ? OutputFormat::kText : OutputFormat::kJson;
  }
};

Thresholds ResolveThresholds(const GlobalFlags& flags) {
  Thresholds t;
  if (const char* env = std::getenv("MATROID_FORGE_THRESHOLDS")) {
    t = ParseThresholds(env, t);
  }
  if (flags.threshold_brute) t.brute_force = *flags.threshold_brute;
  if (flags.threshold_theta) t.theta = *flags.threshold_theta;
  return t;
}

IntersectionOptions ResolveOptions(const GlobalFlags& flags) {
  IntersectionOptions options;
  options.thresholds = ResolveThresholds(flags);
  if (flags.seed) options.heuristic_seed = *flags.seed;
  return options;
}

MatroidPair Load(const std::string& path, const Thresholds& thresholds) {
  return Instantiate(ParseInstance(ReadFile(path)), thresholds);
}

int RunIntersectCommand(const GlobalFlags& flags, const std::string& input) {
  const IntersectionOptions options = ResolveOptions(flags);
  const MatroidPair pair = Load(input, options.thresholds);
  const IntersectResult result = RunIntersect(pair, options);
  std::cout << FormatIntersect(result, flags.output_format(), flags.trace);
  return result.agreement ? kExitOk : kExitVerification;
}

int RunEdmondsCommand(const GlobalFlags& flags, const std::string& input,
                      bool brute) {
  const Thresholds thresholds = ResolveThresholds(flags);
  const MatroidPair pair = Load(input, thresholds);
  const CertifiedOptimum opt = MaxCommonIndependent(*pair.m, *pair.n);
  const bool certified = Certify(*pair.m, *pair.n, opt.common, opt.certificate);
  std::string out = FormatEdmonds(opt, certified, flags.output_format());
  bool agree = true;
  if (brute) {
    const ElementSet b =
        BruteForceMaxCommon(*pair.m, *pair.n, thresholds.brute_force);
    agree = b.size() == opt.common.size();
    if (flags.output_format() == OutputFormat::kText) {
      out += "brute force " + b.ToString() + "\n";
    } else {
      Json doc = Json::parse(out);
      doc["brute_force"] = SetToJson(b);
      out = FormatJson(doc);
    }
  }
  std::cout << out;
  return certified && agree ? kExitOk : kExitVerification;
}

int RunVerifyCommand(const GlobalFlags& flags, const std::string& input,
                     const std::string& witness_path) {
  const MatroidPair pair = Load(input, ResolveThresholds(flags));
  const Witness w = ParseWitness(ReadFile(witness_path));
  const VerificationReport report = VerifyWitness(*pair.m, *pair.n, w);
  std::cout << FormatVerification(report, flags.output_format());
  return report.ok() ? kExitOk : kExitVerification;
}

int RunCheckAxiomsCommand(const GlobalFlags& flags, const std::string& input) {
  const Thresholds thresholds = ResolveThresholds(flags);
  const Instance inst = ParseInstance(ReadFile(input));
  std::vector<ElementSet> family;
  if (inst.m.type == MatroidDescriptor::Type::kExplicit) {
    family = inst.m.independent_sets;
  } else {
    if (inst.elements.size() > thresholds.axioms) {
      throw CapacityError("check-axioms: " +
                          std::to_string(inst.elements.size()) +
                          " elements exceed the axiom-check threshold " +
                          std::to_string(thresholds.axioms));
    }
    family = ExplicitMatroid::Materialize(*Load(input, thresholds).m)
                 ->independent_sets();
  }
  const AxiomReport report =
      CheckAxioms(inst.elements, family, thresholds.axioms);
  if (flags.output_format() == OutputFormat::kText) {
    std::cout << (report.ok() ? "all axioms hold\n" : report.ToString());
  } else {
    Json doc;
    doc["ok"] = report.ok();
    doc["violations"] = Json::array();
    for (const AxiomViolation& v : report.violations) {
      Json j;
      j["axiom"] = AxiomName(v.axiom);
      j["first"] = SetToJson(v.first);
      j["second"] = SetToJson(v.second);
      if (v.restriction) j["restriction"] = SetToJson(*v.restriction);
      doc["violations"].push_back(j);
    }
    std::cout << FormatJson(doc);
  }
  return report.ok() ? kExitOk : kExitVerification;
}

int RunClassifyCommand(const GlobalFlags& flags, const std::string& input) {
  const Thresholds thresholds = ResolveThresholds(flags);
  const MatroidPair pair = Load(input, thresholds);
  const UniformClass cls = ClassifyUniform(*pair.m, thresholds.exhaustive);
  if (flags.output_format() == OutputFormat::kText) {
    std::cout << cls.ToString() << "\n";
    return kExitOk;
  }
  Json doc;
  switch (cls.kind) {
    case UniformClass::Kind::kFree:
      doc["kind"] = "free";
      doc["rank"] = cls.rank;
      break;
    case UniformClass::Kind::kUniformRank:
      doc["kind"] = "uniform";
      doc["rank"] = cls.rank;
      break;
    case UniformClass::Kind::kNotUniform:
      doc["kind"] = "not_uniform";
      doc["neither"] = SetToJson(cls.neither);
      if (cls.exchange) {
        doc["exchange"] = {{"independent", SetToJson(cls.exchange->independent)},
                           {"removed", cls.exchange->removed},
                           {"added", cls.exchange->added}};
      }
      break;
  }
  std::cout << FormatJson(doc);
  return kExitOk;
}

int RunGenCommand(const GlobalFlags& flags, GeneratorSpec spec,
                  const std::string& family, const std::string& output) {
  const std::optional<Family> f = FamilyFromName(family);
  if (!f) throw ArgumentError("gen: unknown family \"" + family + "\"");
  spec.family = *f;
  if (flags.seed) spec.seed = *flags.seed;
  const std::string text = SerializeInstance(Generate(spec));
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ParseError(output, "cannot open file for writing");
    out << text;
  }
  return kExitOk;
}

int RunSelftestCommand(const GlobalFlags& flags, int max_elements,
                       int random_count) {
  const IntersectionOptions options = ResolveOptions(flags);
  const uint64_t seed = flags.seed.value_or(1);
  const ExhaustiveLemmaReports lemma =
      ExhaustiveLemmaSuite(max_elements, 3, true, options);
  const RandomSuiteReports random =
      RandomSuite(random_count, seed, true, options);
  SuiteReport side{"spanning common base"};
  side.Merge(lemma.side);
  side.Merge(random.side);
  std::vector<SuiteReport> reports = {
      lemma.extend,
      lemma.maximal,
      UniformSuite(max_elements),
      ClosureSuite(max_elements),
      KernelSuite(std::min(max_elements, 5), std::min(max_elements + 1, 8))};
  if (random_count > 0) {
    reports.push_back(random.witness);
    reports.push_back(random.optimality);
  }
  reports.push_back(side);
  bool ok = true;
  Json doc = Json::array();
  for (const SuiteReport& r : reports) {
    ok = ok && r.ok();
    if (flags.output_format() == OutputFormat::kText) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.Summary() << "\n";
    } else {
      doc.push_back({{"suite", r.name},
                     {"ok", r.ok()},
                     {"checks", r.cases},
                     {"failures", r.failures},
                     {"examples", r.examples}});
    }
  }
  if (flags.output_format() == OutputFormat::kJson) {
    std::cout << FormatJson(doc);
  }
  return ok ? kExitOk : kExitVerification;
}

int Main(int argc, char** argv) {
  CLI::App app{"Intersection-property witnesses for a matroid and a "
               "partition matroid"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--trace", flags.trace, "Include the recursion trace");
  app.add_option("--seed", flags.seed, "Generator or heuristic seed");
  app.add_option("--threshold-brute", flags.threshold_brute,
                 "Largest ground set for brute-force enumeration");
  app.add_option("--threshold-theta", flags.threshold_theta,
                 "Largest ground set for the exact theta search");

  std::string input;
  std::string witness;
  bool brute = false;

  auto* intersect = app.add_subcommand(
      "intersect", "Build, verify, and cross-check a witness");
  intersect->add_option("--input", input, "Instance file")->required();

  auto* edmonds = app.add_subcommand(
      "edmonds", "Maximum common independent set with a certificate");
  edmonds->add_option("--input", input, "Instance file")->required();
  edmonds->add_flag("--brute", brute, "Also enumerate every subset");

  auto* verify = app.add_subcommand("verify", "Check a witness file");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--witness", witness, "Witness file")->required();

  auto* axioms = app.add_subcommand(
      "check-axioms", "Check the independence axioms for M");
  axioms->add_option("--input", input, "Instance file")->required();

  auto* classify =
      app.add_subcommand("classify-uniform", "Decide whether M is uniform");
  classify->add_option("--input", input, "Instance file")->required();

  GeneratorSpec spec;
  std::string family = "graphic";
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", family, "graphic|linear_gf2|uniform|explicit");
  gen->add_option("--elements", spec.elements, "Ground-set size");
  gen->add_option("--parts", spec.parts, "Number of parts of N");
  gen->add_option("--min-cap", spec.min_cap, "Smallest part cap");
  gen->add_option("--max-cap", spec.max_cap, "Largest part cap");
  gen->add_option("--vertices", spec.vertices, "Graph vertices");
  gen->add_option("--edge-prob", spec.edge_probability, "Graph edge probability");
  gen->add_option("--dim", spec.dimension, "Row count of the GF(2) matrix");
  gen->add_option("--output", output, "Write to a file instead of stdout");

  int max_elements = 5;
  int random_count = 200;
  auto* selftest =
      app.add_subcommand("selftest", "Run the small exhaustive suites");
  selftest->add_option("--max-elements", max_elements,
                       "Largest enumerated ground set")
      ->check(CLI::Range(0, 7));
  selftest->add_option("--random", random_count, "Random instances")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*intersect) return RunIntersectCommand(flags, input);
    if (*edmonds) return RunEdmondsCommand(flags, input, brute);
    if (*verify) return RunVerifyCommand(flags, input, witness);
    if (*axioms) return RunCheckAxiomsCommand(flags, input);
    if (*classify) return RunClassifyCommand(flags, input);
    if (*gen) return RunGenCommand(flags, spec, family, output);
    if (*selftest) return RunSelftestCommand(flags, max_elements, random_count);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace matroid_forge

int main(int argc, char** argv) { return matroid_forge::Main(argc, argv); }
