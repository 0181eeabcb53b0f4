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

#include "powereq/json_io.h"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>

namespace powereq {
namespace {

[[noreturn]] void Fail(const std::string& message) { throw InputError(message); }

void ExpectObject(const Json& j, std::string_view where) {
  if (!j.is_object()) Fail(std::string(where) + ": expected an object");
}

void ExpectKeys(const Json& j, std::initializer_list<std::string_view> allowed,
                std::string_view where) {
  ExpectObject(j, where);
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Fail(std::string(where) + ": unknown key '" + key + "'");
    }
  }
}

const Json& Required(const Json& j, const char* key, std::string_view where) {
  auto it = j.find(key);
  if (it == j.end()) Fail(std::string(where) + ": missing key '" + key + "'");
  return *it;
}

std::string String(const Json& j, std::string_view where) {
  if (!j.is_string()) Fail(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> Strings(const Json& j, std::string_view where) {
  if (!j.is_array()) Fail(std::string(where) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const Json& e : j) out.push_back(String(e, where));
  return out;
}

int Element(const Json& j, const FiniteStructure& s, std::string_view where) {
  const std::string label = String(j, where);
  auto index = s.IndexOf(label);
  if (!index) Fail(std::string(where) + ": unknown element '" + label + "'");
  return *index;
}

std::vector<int> Elements(const Json& j, const FiniteStructure& s, std::string_view where) {
  if (!j.is_array()) Fail(std::string(where) + ": expected an array of elements");
  std::vector<int> out;
  for (const Json& e : j) out.push_back(Element(e, s, where));
  return out;
}

Json Labels(std::span<const int> elements, const FiniteStructure& s) {
  Json out = Json::array();
  for (int e : elements) out.push_back(s.label(e));
  return out;
}

// Parses {"rel": ..., "args": [...]} or {"eq": [lhs, rhs]} with the constant
// parser supplied by the caller.
template <typename C, typename ParseConstant>
Atom<C> AtomFromJson(const Json& j, const FiniteStructure& s,
                     const std::vector<std::string>& variables, ParseConstant&& parse_constant) {
  auto term = [&](const Json& t) -> Term<C> {
    ExpectObject(t, "argument");
    if (t.contains("var")) {
      ExpectKeys(t, {"var"}, "argument");
      const std::string name = String(t["var"], "variable");
      auto it = std::find(variables.begin(), variables.end(), name);
      if (it == variables.end()) Fail("undeclared variable '" + name + "'");
      return Variable{static_cast<int>(it - variables.begin())};
    }
    return parse_constant(t);
  };

  ExpectObject(j, "equation");
  Atom<C> atom;
  if (j.contains("eq")) {
    ExpectKeys(j, {"eq"}, "equation");
    const Json& args = j["eq"];
    if (!args.is_array() || args.size() != 2) Fail("equality needs exactly two arguments");
    atom.relation = kEquality;
    for (const Json& t : args) atom.args.push_back(term(t));
    return atom;
  }
  ExpectKeys(j, {"rel", "args"}, "equation");
  const std::string name = String(Required(j, "rel", "equation"), "relation");
  auto id = s.signature().Find(name);
  if (!id) Fail("unknown relation '" + name + "'");
  atom.relation = *id;
  const Json& args = Required(j, "args", "equation");
  if (!args.is_array()) Fail("equation: 'args' must be an array");
  for (const Json& t : args) atom.args.push_back(term(t));
  if (static_cast<int>(atom.args.size()) != s.signature().symbol(*id).arity) {
    Fail(name + " expects " + std::to_string(s.signature().symbol(*id).arity) + " arguments");
  }
  return atom;
}

template <typename C, typename EmitConstant>
Json AtomToJson(const Atom<C>& atom, const FiniteStructure& s,
                const std::vector<std::string>& variables, EmitConstant&& emit_constant) {
  Json args = Json::array();
  for (const auto& t : atom.args) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      args.push_back({{"var", variables.at(v->index)}});
    } else {
      args.push_back(emit_constant(std::get<C>(t)));
    }
  }
  if (atom.is_equality()) return {{"eq", args}};
  return {{"rel", s.signature().symbol(atom.relation).name}, {"args", args}};
}

Json SourceToJson(const SourceRef& source) {
  if (source.kind == SourceRef::Kind::kExplicit) return {{"explicit", source.index}};
  return {{"family", source.index}, {"member", source.member}};
}

Json IndexSetToJson(const IndexSet& set) {
  Json prefix = Json::array(), cycle = Json::array();
  for (bool b : set.prefix()) prefix.push_back(b);
  for (bool b : set.cycle()) cycle.push_back(b);
  return {{"prefix", prefix}, {"cycle", cycle}};
}

Json PointsToJson(const AlgebraicSet& set, const FiniteStructure& s) {
  Json points = Json::array();
  for (const auto& p : set.Points()) points.push_back(Labels(p, s));
  return points;
}

template <typename C, typename F>
std::string FormatAtom(const Atom<C>& atom, const std::vector<std::string>& variables,
                       const FiniteStructure& s, F&& constant) {
  std::vector<std::string> parts;
  for (const auto& t : atom.args) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      parts.push_back(v->index < static_cast<int>(variables.size())
                          ? variables[v->index]
                          : "#" + std::to_string(v->index));
    } else {
      parts.push_back(constant(std::get<C>(t)));
    }
  }
  if (atom.is_equality()) return parts[0] + " = " + parts[1];
  std::string out = s.signature().symbol(atom.relation).name + "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ")";
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << "line " << line << ", column " << column << ": " << e.what();
    throw InputError(msg.str());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseJson(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

StructureFile StructureFromJson(const Json& j) {
  ExpectKeys(j, {"kind", "universe", "relations"}, "structure");
  const std::string kind_name = String(Required(j, "kind", "structure"), "kind");
  auto kind = ParseKind(kind_name);
  if (!kind) Fail("structure: unknown kind '" + kind_name + "'");
  std::vector<std::string> universe = Strings(Required(j, "universe", "structure"), "universe");

  const Json& relations = Required(j, "relations", "structure");
  ExpectObject(relations, "relations");
  std::vector<Symbol> symbols;
  std::map<std::string, std::vector<std::vector<std::string>>> tables;
  for (const auto& [name, rel] : relations.items()) {
    const std::string where = "relation " + name;
    ExpectKeys(rel, {"arity", "tuples"}, where);
    const Json& arity = Required(rel, "arity", where);
    if (!arity.is_number_integer() || arity.get<int>() < 1) Fail(where + ": arity must be >= 1");
    symbols.push_back({name, arity.get<int>()});
    const Json& tuples = Required(rel, "tuples", where);
    if (!tuples.is_array()) Fail(where + ": 'tuples' must be an array");
    auto& rows = tables[name];
    for (const Json& t : tuples) rows.push_back(Strings(t, where));
  }
  // Canonical symbol order for the known kinds, so P1..Pm come out sorted.
  std::sort(symbols.begin(), symbols.end(), [](const Symbol& x, const Symbol& y) {
    return std::pair(x.arity, x.name) < std::pair(y.arity, y.name);
  });
  try {
    return {*kind, FiniteStructure::FromLabels(Signature(std::move(symbols)),
                                               std::move(universe), tables)};
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("structure: ") + e.what());
  }
}

Json ToJson(const StructureFile& file) {
  const FiniteStructure& s = file.structure;
  Json relations = Json::object();
  for (int id = 0; id < s.signature().size(); ++id) {
    Json tuples = Json::array();
    for (const Tuple& t : s.tuples(id)) tuples.push_back(Labels(t, s));
    relations[s.signature().symbol(id).name] = {{"arity", s.signature().symbol(id).arity},
                                                {"tuples", tuples}};
  }
  return {{"kind", KindName(file.kind)}, {"universe", s.universe()}, {"relations", relations}};
}

EquationSystem SystemFromJson(const Json& j, const FiniteStructure& s) {
  ExpectKeys(j, {"variables", "equations"}, "system");
  EquationSystem system;
  system.variables = Strings(Required(j, "variables", "system"), "variables");
  const Json& eqs = Required(j, "equations", "system");
  if (!eqs.is_array()) Fail("system: 'equations' must be an array");
  for (const Json& e : eqs) {
    system.equations.push_back(AtomFromJson<int>(e, s, system.variables, [&](const Json& t) {
      ExpectKeys(t, {"const"}, "argument");
      return Element(t["const"], s, "constant");
    }));
  }
  return system;
}

Json ToJson(const EquationSystem& system, const FiniteStructure& s) {
  Json eqs = Json::array();
  for (const Equation& eq : system.equations) {
    eqs.push_back(AtomToJson(eq, s, system.variables,
                             [&](int c) { return Json{{"const", s.label(c)}}; }));
  }
  return {{"variables", system.variables}, {"equations", eqs}};
}

PowerElement PowerElementFromJson(const Json& j, const FiniteStructure& s) {
  ExpectObject(j, "power constant");
  if (j.contains("const")) {
    ExpectKeys(j, {"const"}, "power constant");
    return PowerElement::Constant(Element(j["const"], s, "constant"));
  }
  ExpectKeys(j, {"prefix", "cycle"}, "power constant");
  std::vector<int> prefix = Elements(Required(j, "prefix", "power constant"), s, "prefix");
  std::vector<int> cycle = Elements(Required(j, "cycle", "power constant"), s, "cycle");
  if (cycle.empty()) Fail("power constant: cycle must be nonempty");
  return PowerElement(std::move(prefix), std::move(cycle));
}

Json ToJson(const PowerElement& e, const FiniteStructure& s) {
  return {{"prefix", Labels(e.prefix(), s)}, {"cycle", Labels(e.cycle(), s)}};
}

PowerSystem PowerSystemFromJson(const Json& j, const FiniteStructure& s) {
  ExpectKeys(j, {"variables", "equations"}, "power system");
  PowerSystem system;
  system.variables = Strings(Required(j, "variables", "power system"), "variables");
  const Json& eqs = Required(j, "equations", "power system");
  if (!eqs.is_array()) Fail("power system: 'equations' must be an array");
  for (const Json& e : eqs) {
    ExpectObject(e, "equation");
    if (e.contains("family")) {
      ExpectKeys(e, {"family"}, "family entry");
      system.families.push_back(
          AtomFromJson<Staircase>(e["family"], s, system.variables, [&](const Json& t) {
            ExpectKeys(t, {"staircase"}, "family argument");
            const Json& st = t["staircase"];
            ExpectKeys(st, {"generator", "tail"}, "staircase");
            Staircase stair;
            stair.generator = Elements(Required(st, "generator", "staircase"), s, "generator");
            if (stair.generator.empty()) Fail("staircase: generator must be nonempty");
            stair.tail = PowerElementFromJson(Required(st, "tail", "staircase"), s);
            return stair;
          }));
    } else {
      system.equations.push_back(AtomFromJson<PowerElement>(
          e, s, system.variables, [&](const Json& t) { return PowerElementFromJson(t, s); }));
    }
  }
  return system;
}

Json ToJson(const PowerSystem& system, const FiniteStructure& s) {
  Json eqs = Json::array();
  auto constant = [&](const PowerElement& c) { return ToJson(c, s); };
  for (const PowerEquation& eq : system.equations) {
    eqs.push_back(AtomToJson(eq, s, system.variables, constant));
  }
  for (const StaircaseFamily& family : system.families) {
    eqs.push_back({{"family", AtomToJson(family, s, system.variables, [&](const Staircase& st) {
                      return Json{{"staircase",
                                   {{"generator", Labels(st.generator, s)},
                                    {"tail", ToJson(st.tail, s)}}}};
                    })}});
  }
  return {{"variables", system.variables}, {"equations", eqs}};
}

Json ToJson(const ValidationReport& report, const FiniteStructure& s) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"axiom", v.axiom}, {"witness", Labels(v.witness, s)}});
  }
  return {{"kind", KindName(report.kind)}, {"passed", report.passed}, {"violations", violations}};
}

Json ToJson(const AlgebraicSet& set, const std::vector<std::string>& variables,
            const FiniteStructure& s) {
  return {{"variables", variables},
          {"points", PointsToJson(set, s)},
          {"count", set.count()},
          {"inconsistent", set.empty()}};
}

Json ToJson(const ConsistencyVerdict& verdict, const PowerSystem& system,
            const FiniteStructure& s) {
  Json out = {{"status", verdict.consistent ? "CONSISTENT" : "INCONSISTENT"}};
  if (verdict.certificate) {
    const InconsistencyCertificate& c = *verdict.certificate;
    Json sources = Json::array(), equations = Json::array(), core = Json::array();
    for (const SourceRef& r : c.sources) sources.push_back(SourceToJson(r));
    for (const PowerEquation& eq : c.equations) {
      equations.push_back(AtomToJson(eq, s, system.variables,
                                     [&](const PowerElement& e) { return ToJson(e, s); }));
    }
    for (const Equation& eq : c.projected_core) {
      core.push_back(AtomToJson(eq, s, system.variables,
                                [&](int v) { return Json{{"const", s.label(v)}}; }));
    }
    out["certificate"] = {{"coordinate", c.coordinate},
                          {"sources", sources},
                          {"equations", equations},
                          {"projected_core", core}};
  }
  return out;
}

Json ToJson(const WitnessPackage& package, const FiniteStructure& s) {
  const PowerSystem full = package.FullSystem();
  return {{"system", ToJson(full, s)},
          {"witness_point",
           {{"leading", s.label(package.lead)},
            {"leading_count", "n-1"},
            {"then", s.label(package.rest)}}}};
}

Json ToJson(const NoetherianVerdict& verdict, const FiniteStructure& s,
            const std::optional<WitnessPackage>& witness) {
  Json certificate;
  switch (verdict.certificate.kind) {
    case Certificate::Kind::kTranscript:
      certificate = {{"transcript", verdict.certificate.transcript}};
      break;
    case Certificate::Kind::kQuadruple:
      certificate = {{"quadruple", Labels(verdict.certificate.elements, s)}};
      break;
    case Certificate::Kind::kTriple:
      certificate = {{"triple", Labels(verdict.certificate.elements, s)}};
      break;
    case Certificate::Kind::kPair:
      certificate = {{"pair", Labels(verdict.certificate.elements, s)}};
      break;
  }
  Json out = {{"kind", KindName(verdict.kind)},
              {"status", StatusName(verdict.status)},
              {"certificate", certificate}};
  if (witness) out["witness_family"] = ToJson(*witness, s);
  return out;
}

NoetherianVerdict VerdictFromJson(const Json& j, const FiniteStructure& s) {
  ExpectKeys(j, {"kind", "status", "certificate", "witness_family"}, "verdict");
  NoetherianVerdict verdict;
  const std::string kind = String(Required(j, "kind", "verdict"), "kind");
  const std::string status = String(Required(j, "status", "verdict"), "status");
  auto k = ParseKind(kind);
  auto st = ParseStatus(status);
  if (!k) Fail("verdict: unknown kind '" + kind + "'");
  if (!st) Fail("verdict: unknown status '" + status + "'");
  verdict.kind = *k;
  verdict.status = *st;
  const Json& c = Required(j, "certificate", "verdict");
  ExpectKeys(c, {"transcript", "quadruple", "triple", "pair"}, "certificate");
  if (c.size() != 1) Fail("certificate: expected exactly one entry");
  const auto& [key, value] = *c.items().begin();
  if (key == "transcript") {
    verdict.certificate = {Certificate::Kind::kTranscript, {}, String(value, "transcript")};
  } else {
    const auto kind_of = key == "quadruple" ? Certificate::Kind::kQuadruple
                         : key == "triple"  ? Certificate::Kind::kTriple
                                            : Certificate::Kind::kPair;
    verdict.certificate = {kind_of, Elements(value, s, key), ""};
  }
  return verdict;
}

Json ToJson(const WrapResult& result, const FiniteStructure& s) {
  const auto& vars = result.s_prime.variables;
  auto base = [&](const Equation& eq) {
    return AtomToJson(eq, s, vars, [&](int v) { return Json{{"const", s.label(v)}}; });
  };
  auto power = [&](const PowerEquation& eq) {
    return AtomToJson(eq, s, vars, [&](const PowerElement& e) { return ToJson(e, s); });
  };
  auto pair = [&](const SourcePair& p) {
    return Json{{"coordinate", p.coordinate}, {"source", SourceToJson(p.source)}};
  };

  const WrapTrace& t = result.trace;
  Json m = Json::array(), k = Json::array(), s0 = Json::array(), steps = Json::array();
  for (const MEntry& e : t.m) {
    m.push_back({{"representative", base(e.representative)},
                 {"solutions", PointsToJson(e.cls.solutions, s)},
                 {"source", pair(e.source)}});
  }
  for (const SourcePair& p : t.k) k.push_back(pair(p));
  for (const PowerEquation& eq : t.s0) s0.push_back(power(eq));
  for (const WrapStep& step : t.steps) {
    Json constants = Json::array();
    for (const PowerElement& c : step.constants) constants.push_back(ToJson(c, s));
    steps.push_back({{"m_index", step.m_index},
                     {"I0", IndexSetToJson(step.in_class)},
                     {"I1", IndexSetToJson(step.outside)},
                     {"constants", constants},
                     {"equation", power(step.equation)}});
  }
  Json mismatches = Json::array();
  for (const CoordinateMismatch& mm : result.verification.mismatches) {
    mismatches.push_back({{"coordinate", mm.coordinate},
                          {"original", PointsToJson(mm.original, s)},
                          {"wrapped", PointsToJson(mm.wrapped, s)}});
  }
  return {{"s_prime", ToJson(result.s_prime, s)},
          {"size", result.s_prime.equations.size()},
          {"verified", result.verified},
          {"bound_ok", result.bound_ok},
          {"trace",
           {{"horizon", {{"stabilization", t.horizon.stabilization}, {"period", t.horizon.period}}},
            {"M", m},
            {"K", k},
            {"S0", s0},
            {"steps", steps}}},
          {"verification",
           {{"passed", result.verification.passed},
            {"checked_coordinates", result.verification.checked},
            {"mismatches", mismatches}}}};
}

std::string FormatElement(const PowerElement& e, const FiniteStructure& s) {
  std::string out = "[";
  bool first = true;
  auto put = [&](int v) {
    out += (first ? "" : ",") + s.label(v);
    first = false;
  };
  for (int v : e.prefix()) put(v);
  for (int rep = 0; rep < 2; ++rep) {
    for (int v : e.cycle()) put(v);
  }
  return out + ",...]";
}

std::string FormatEquation(const Equation& eq, const std::vector<std::string>& variables,
                           const FiniteStructure& s) {
  return FormatAtom(eq, variables, s, [&](int c) { return s.label(c); });
}

std::string FormatEquation(const PowerEquation& eq, const std::vector<std::string>& variables,
                           const FiniteStructure& s) {
  return FormatAtom(eq, variables, s, [&](const PowerElement& c) { return FormatElement(c, s); });
}

}  // namespace powereq
