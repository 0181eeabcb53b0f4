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

// powereq: equation systems over finite structures and their direct powers.
//
// Exit status: 0 on success or a passing verdict, 1 on a failing verdict
// (invalid structure, NOT_NOETHERIAN, inconsistent system, unverified wrap),
// 2 on input errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "powereq/fixtures.h"
#include "powereq/json_io.h"
#include "powereq/noetherian.h"
#include "powereq/power.h"
#include "powereq/signatures.h"
#include "powereq/solver.h"
#include "powereq/wrap.h"

namespace powereq {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string structure_path;
  std::string system_path;
  std::string kind_name;
  std::string format = "text";
  std::size_t coordinate = 0;
  std::size_t depth = 10;
  bool example = false;
};

bool JsonOutput(const Options& o) { return o.format == "json"; }

void Emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

StructureFile LoadStructure(const Options& o) {
  StructureFile file = StructureFromJson(ReadJsonFile(o.structure_path));
  if (!o.kind_name.empty()) {
    auto kind = ParseKind(o.kind_name);
    if (!kind) throw InputError("unknown kind '" + o.kind_name + "'");
    file.kind = *kind;
  }
  return file;
}

std::string FormatPoint(std::span<const int> point, const FiniteStructure& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) out += (i ? "," : "") + s.label(point[i]);
  return out + ")";
}

int RunValidate(const Options& o) {
  const StructureFile file = LoadStructure(o);
  const ValidationReport report = Validate(file.structure, file.kind);
  if (JsonOutput(o)) {
    Emit(ToJson(report, file.structure));
  } else {
    std::cout << KindName(file.kind) << ": " << (report.passed ? "valid" : "invalid") << "\n";
    for (const Violation& v : report.violations) {
      std::cout << "  " << v.axiom << " fails at " << FormatPoint(v.witness, file.structure)
                << "\n";
    }
  }
  return report.passed ? kOk : kFailed;
}

int RunSolve(const Options& o) {
  const StructureFile file = LoadStructure(o);
  const FiniteStructure& s = file.structure;
  const EquationSystem system = SystemFromJson(ReadJsonFile(o.system_path), s);
  const AlgebraicSet solutions = Solve(s, system);
  std::optional<EquationSystem> core;
  if (solutions.empty()) core = MinimalInconsistentSubset(s, system);
  if (JsonOutput(o)) {
    Json out = ToJson(solutions, system.variables, s);
    if (core) out["minimal_inconsistent_subset"] = ToJson(*core, s);
    Emit(out);
  } else {
    std::cout << solutions.count() << " solution(s)\n";
    for (const auto& p : solutions.Points()) std::cout << "  " << FormatPoint(p, s) << "\n";
    if (core) {
      std::cout << "minimal inconsistent subset:\n";
      for (const Equation& eq : core->equations) {
        std::cout << "  " << FormatEquation(eq, system.variables, s) << "\n";
      }
    }
  }
  return solutions.empty() ? kFailed : kOk;
}

int RunProject(const Options& o) {
  const StructureFile file = LoadStructure(o);
  const FiniteStructure& s = file.structure;
  const PowerSystem system = PowerSystemFromJson(ReadJsonFile(o.system_path), s);
  CheckWellFormed(s, system);
  const EquationSystem projected = ProjectToBase(system, o.coordinate);
  const AlgebraicSet solutions = Solve(s, projected);
  if (JsonOutput(o)) {
    Emit({{"coordinate", o.coordinate},
          {"system", ToJson(projected, s)},
          {"solutions", ToJson(solutions, system.variables, s)}});
  } else {
    std::cout << "coordinate " << o.coordinate << ":\n";
    for (const Equation& eq : projected.equations) {
      std::cout << "  " << FormatEquation(eq, system.variables, s) << "\n";
    }
    std::cout << solutions.count() << " solution(s)\n";
    for (const auto& p : solutions.Points()) std::cout << "  " << FormatPoint(p, s) << "\n";
  }
  return kOk;
}

int RunConsistent(const Options& o) {
  const StructureFile file = LoadStructure(o);
  const FiniteStructure& s = file.structure;
  const PowerSystem system = PowerSystemFromJson(ReadJsonFile(o.system_path), s);
  const ConsistencyVerdict verdict = CheckConsistency(s, system);
  if (JsonOutput(o)) {
    Emit(ToJson(verdict, system, s));
  } else if (verdict.consistent) {
    std::cout << "CONSISTENT\n";
  } else {
    const InconsistencyCertificate& c = *verdict.certificate;
    std::cout << "INCONSISTENT at coordinate " << c.coordinate << "\n";
    for (std::size_t i = 0; i < c.equations.size(); ++i) {
      std::cout << "  " << FormatEquation(c.equations[i], system.variables, s) << "  projects to  "
                << FormatEquation(c.projected_core[i], system.variables, s) << "\n";
    }
  }
  return verdict.consistent ? kOk : kFailed;
}

std::string FormatCertificate(const Certificate& c, const FiniteStructure& s) {
  switch (c.kind) {
    case Certificate::Kind::kTranscript:
      return c.transcript;
    case Certificate::Kind::kQuadruple:
      return "quadruple " + FormatPoint(c.elements, s);
    case Certificate::Kind::kTriple:
      return "triple " + FormatPoint(c.elements, s);
    case Certificate::Kind::kPair:
      return "pair " + FormatPoint(c.elements, s);
  }
  return {};
}

std::optional<WitnessPackage> WitnessFor(const StructureFile& file,
                                         const NoetherianVerdict& verdict) {
  if (verdict.status != NoetherianStatus::kNotNoetherian) return std::nullopt;
  return BuildWitnessFamily(file.structure, file.kind, verdict.certificate);
}

void PrintFamily(const WitnessPackage& w, const FiniteStructure& s) {
  const PowerSystem full = w.FullSystem();
  for (const StaircaseFamily& f : full.families) {
    std::cout << "  family over " << s.signature().symbol(f.relation).name << ", members "
              << FormatEquation(StaircaseMember(f, 1), full.variables, s) << ", "
              << FormatEquation(StaircaseMember(f, 2), full.variables, s) << ", "
              << FormatEquation(StaircaseMember(f, 3), full.variables, s) << ", ...\n";
  }
  std::cout << "  witness point n: " << s.label(w.lead) << " repeated n-1 times, then "
            << s.label(w.rest) << "\n";
}

int RunNoetherian(const Options& o) {
  const StructureFile file = LoadStructure(o);
  const NoetherianVerdict verdict = PowerNoetherian(file.structure, file.kind);
  const auto witness = WitnessFor(file, verdict);
  if (JsonOutput(o)) {
    Emit(ToJson(verdict, file.structure, witness));
  } else {
    std::cout << StatusName(verdict.status) << "\n"
              << "  certificate: " << FormatCertificate(verdict.certificate, file.structure)
              << "\n";
    if (witness) PrintFamily(*witness, file.structure);
  }
  return verdict.status == NoetherianStatus::kNotNoetherian ? kFailed : kOk;
}

int RunWitness(const Options& o) {
  const StructureFile file = LoadStructure(o);
  const FiniteStructure& s = file.structure;
  const NoetherianVerdict verdict = PowerNoetherian(s, file.kind);
  const auto witness = WitnessFor(file, verdict);
  Json checks = Json::array();
  bool all_ok = true;
  if (witness) {
    for (std::size_t n = 1; n <= o.depth; ++n) {
      const WitnessCheck check = CheckWitness(s, *witness, n);
      all_ok = all_ok && check.ok();
      Json entry = {{"n", n},
                    {"satisfies_first_n", check.satisfies_first_n},
                    {"violates_next", check.violates_next}};
      if (check.violated_coordinate) entry["violated_coordinate"] = *check.violated_coordinate;
      checks.push_back(entry);
    }
  }
  if (JsonOutput(o)) {
    Json out = ToJson(verdict, s, witness);
    out["depth"] = o.depth;
    out["checks"] = checks;
    out["verified"] = witness.has_value() && all_ok;
    Emit(out);
  } else if (!witness) {
    std::cout << StatusName(verdict.status) << ": no witness family\n";
  } else {
    std::cout << "witness family for " << FormatCertificate(verdict.certificate, s) << "\n";
    PrintFamily(*witness, s);
    for (const Json& c : checks) {
      std::cout << "  n=" << c["n"].get<std::size_t>() << ": "
                << (c["satisfies_first_n"].get<bool>() && c["violates_next"].get<bool>() ? "ok"
                                                                                         : "FAIL")
                << "\n";
    }
    std::cout << (all_ok ? "verified" : "NOT verified") << " for n <= " << o.depth << "\n";
  }
  if (!witness) return kOk;
  return all_ok ? kOk : kFailed;
}

int RunWrap(const Options& o) {
  std::optional<StructureFile> file;
  PowerSystem system;
  if (o.example) {
    file = StructureFile{StructureKind::kGraph, fixtures::K3()};
    system = fixtures::WrapExampleSystem();
  } else {
    file = LoadStructure(o);
    system = PowerSystemFromJson(ReadJsonFile(o.system_path), file->structure);
  }
  const FiniteStructure& s = file->structure;
  const WrapResult result = Wrap(s, system);
  if (JsonOutput(o)) {
    Emit(ToJson(result, s));
  } else {
    std::cout << "S' (" << result.s_prime.equations.size() << " equations):\n";
    for (const PowerEquation& eq : result.s_prime.equations) {
      std::cout << "  " << FormatEquation(eq, system.variables, s) << "\n";
    }
    std::cout << "classes |M| = " << result.trace.m.size() << ", horizon p="
              << result.trace.horizon.stabilization << " q=" << result.trace.horizon.period
              << "\n"
              << "verified=" << (result.verified ? "true" : "false")
              << " over " << result.verification.checked << " coordinates, bound "
              << (result.bound_ok ? "holds" : "FAILS") << "\n";
  }
  return result.verified ? kOk : kFailed;
}

}  // namespace
}  // namespace powereq

int main(int argc, char** argv) {
  using namespace powereq;
  CLI::App app{"Equations over finite structures and their direct powers"};
  app.require_subcommand(1);
  Options o;

  auto add_structure = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--structure", o.structure_path, "structure JSON file")
                    ->check(CLI::ExistingFile);
    if (required) opt->required();
    cmd->add_option("--kind", o.kind_name, "override the kind: graph, poset, matroid, generic")
        ->check(CLI::IsMember({"graph", "poset", "matroid", "generic"}));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_system = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--system", o.system_path, "system JSON file")
                    ->check(CLI::ExistingFile);
    if (required) opt->required();
  };

  auto* validate = app.add_subcommand("validate", "check the axioms of the structure's kind");
  add_structure(validate, true);
  auto* solve = app.add_subcommand("solve", "solve a system over the structure");
  add_structure(solve, true);
  add_system(solve, true);
  auto* project = app.add_subcommand("project", "project a power system to one coordinate");
  add_structure(project, true);
  add_system(project, true);
  project->add_option("--coordinate", o.coordinate, "coordinate index")->required();
  auto* consistent = app.add_subcommand("consistent", "decide consistency of a power system");
  add_structure(consistent, true);
  add_system(consistent, true);
  auto* noetherian = app.add_subcommand("noetherian", "decide the Noetherian property of A^N");
  add_structure(noetherian, true);
  auto* witness = app.add_subcommand("witness", "build and check a non-Noetherian witness");
  add_structure(witness, true);
  witness->add_option("--depth", o.depth, "check members 1..depth")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  auto* wrap = app.add_subcommand("wrap", "compress a power system into a finite one");
  add_structure(wrap, false);
  add_system(wrap, false);
  wrap->add_flag("--builtin-example", o.example, "use the built-in K3 staircase example");

  try {
    app.parse(argc, argv);
    if (wrap->parsed() && !o.example && (o.structure_path.empty() || o.system_path.empty())) {
      throw CLI::RequiredError("--structure and --system (or --builtin-example)");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (validate->parsed()) return RunValidate(o);
    if (solve->parsed()) return RunSolve(o);
    if (project->parsed()) return RunProject(o);
    if (consistent->parsed()) return RunConsistent(o);
    if (noetherian->parsed()) return RunNoetherian(o);
    if (witness->parsed()) return RunWitness(o);
    if (wrap->parsed()) return RunWrap(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
