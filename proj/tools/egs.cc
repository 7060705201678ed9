// Copyright 2026 The EGS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 ok, 1 negative verdict, 2 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "egs/dominance.h"
#include "egs/dot.h"
#include "egs/generate.h"
#include "egs/io.h"
#include "egs/strategy.h"
#include "egs/transform.h"
#include "egs/validate.h"

namespace egs {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw EgsError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EgsDocument Load(const std::string& path) { return ParseEgs(ReadFile(path)); }

// Payoffs survive a transformation when the input carried them.
void PrintTransformed(const EgsDocument& doc, const Transformed& t) {
  if (doc.payoffs.empty()) {
    std::cout << SerializeStructure(t.structure);
  } else {
    std::cout << Serialize(ToDocument(TransportGame(MakeGame(doc), t)));
  }
}

int Validate(const std::string& path) {
  ValidationReport r = ValidateStructure(Load(path).structure);
  if (r.ok()) {
    std::cout << "valid\n";
    return kOk;
  }
  for (const auto& v : r.violations) std::cout << v.axiom << ": " << v.witness << "\n";
  return kNegative;
}

int Check(const std::string& what, const std::string& path) {
  Structure g = Load(path).structure;
  RequireValid(g);
  if (what == "uo") {
    UoCheck c = CheckUo(g);
    if (c.ok) {
      std::cout << "UO holds\n";
      return kOk;
    }
    std::cout << "UO fails: " << FormatInfoSet(g.infoset(c.witness->first))
              << " is both before and after "
              << FormatInfoSet(g.infoset(c.witness->second)) << "\n";
    return kNegative;
  }
  VnmCheck c = CheckVnm(g);
  if (c.ok) {
    std::cout << "vNM holds\n";
    return kOk;
  }
  std::cout << "vNM fails: " << FormatInfoSet(g.infoset(*c.witness))
            << " has members of different lengths\n";
  return kNegative;
}

int Rnf(const std::string& path) {
  Structure g = Load(path).structure;
  RequireValid(g);
  ReducedNormalForm r = ReducedNormalFormOf(g);
  for (size_t j = 0; j < r.players.size(); ++j) {
    std::cout << "player " << r.players[j] << " plans";
    for (const std::string& l : r.Labels(j)) std::cout << " [" << l << "]";
    std::cout << "\n";
  }
  for (size_t idx = 0; idx < r.num_profiles(); ++idx) {
    std::vector<int> s = r.ProfileAt(idx);
    std::cout << "outcome";
    for (size_t j = 0; j < s.size(); ++j) {
      std::cout << " [" << r.Labels(j)[s[j]] << "]";
    }
    std::cout << " -> \"" << FormatHistory(g.history(g.terminals()[r.outcome[idx]]))
              << "\"\n";
  }
  return kOk;
}

int Equiv(const std::string& a, const std::string& b, bool via_minimal) {
  EquivalenceReport r =
      BehaviorallyEquivalent(Load(a).structure, Load(b).structure, via_minimal);
  std::cout << (r.equivalent ? "equivalent" : "not equivalent") << "\n";
  if (r.via_minimal.has_value()) {
    std::cout << "minimal forms " << (*r.via_minimal ? "isomorphic" : "differ")
              << "\n";
    if (!r.routes_agree()) {
      std::cout << "routes disagree\n";
      return kError;
    }
  }
  return r.equivalent ? kOk : kNegative;
}

int Minimize(const std::string& path, std::optional<uint64_t> seed) {
  Structure g = Load(path).structure;
  RequireValid(g);
  std::cout << SerializeStructure(MinimizeUo(g, seed));
  return kOk;
}

int Opps(const std::string& path, const std::string& kind) {
  Structure g = Load(path).structure;
  RequireValid(g);
  int k = 0;
  if (kind == "all" || kind == "coalescing" || kind == "is") {
    if (kind != "is") {
      for (const auto& o : FindCoalescing(g))
        std::cout << k++ << " " << Describe(o) << "\n";
    } else {
      k = static_cast<int>(FindCoalescing(g).size());
    }
    if (kind != "coalescing") {
      for (const auto& o : FindIs(g)) {
        std::cout << k++ << " " << Describe(o)
                  << (IsNonCrossing(g, o) ? " non-crossing" : " crossing") << "\n";
      }
    }
  } else if (kind == "ico") {
    for (const Ico& t : FindCompleteIcos(g)) std::cout << k++ << " " << Describe(t) << "\n";
  } else if (kind == "synth") {
    for (const SynthOpp& s : FindSynthesized(g))
      std::cout << k++ << " " << Describe(s) << "\n";
  }
  return kOk;
}

int Apply(const std::string& path, int index, bool force) {
  EgsDocument doc = Load(path);
  const Structure& g = doc.structure;
  RequireValid(g);
  auto co = FindCoalescing(g);
  auto is = FindIs(g);
  if (index < 0 || index >= static_cast<int>(co.size() + is.size())) {
    throw EgsError("no opportunity " + std::to_string(index));
  }
  if (index < static_cast<int>(co.size())) {
    PrintTransformed(doc, ApplyCoalescing(g, co[index]));
    return kOk;
  }
  const IsOpp& o = is[index - co.size()];
  if (!force && !IsNonCrossing(g, o)) {
    std::cerr << "opportunity " << index
              << " is a crossing IS and may break UO; pass --force to apply\n";
    return kNegative;
  }
  PrintTransformed(doc, ApplyIs(g, o));
  return kOk;
}

int Compact(const std::string& path) {
  EgsDocument doc = Load(path);
  RequireValid(doc.structure);
  Compaction c = BackwardCompactify(doc.structure);
  for (const Ico& t : c.schedule) std::cout << "# step " << Describe(t) << "\n";
  PrintTransformed(doc, {c.structure, c.map});
  return kOk;
}

int RunBd(const std::string& path) {
  SolvedForm f(MakeGame(Load(path)));
  std::cout << FormatTrace(f, Bd(f));
  return kOk;
}

int Monotonic(const std::string& path, int index) {
  Game g = MakeGame(Load(path));
  auto icos = FindCompleteIcos(g.structure);
  if (index < 0 || index >= static_cast<int>(icos.size())) {
    throw EgsError("no complete ICO " + std::to_string(index));
  }
  MonotonicityReport r = CheckMonotonic(g, icos[index]);
  if (r.ok()) {
    std::cout << "monotonic\n";
    return kOk;
  }
  for (const auto& v : r.violations) {
    std::cout << "player " << g.structure.players()[v.player_pos] << " plan ["
              << v.plan << "] eliminated in round " << v.round
              << " survives after the transformation\n";
  }
  return kNegative;
}

int Dot(const std::string& path) {
  EgsDocument doc = Load(path);
  RequireValid(doc.structure);
  if (doc.payoffs.empty()) {
    std::cout << ToDot(doc.structure);
  } else {
    std::cout << ToDot(MakeGame(doc));
  }
  return kOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Extensive game structures: validation, transformations, "
               "equivalence and backward dominance"};
  app.require_subcommand(1);
  std::string file, file2, what, kind = "all";
  bool via_minimal = false, force = false, backward = false;
  int index = 0;
  std::optional<uint64_t> seed;
  GenParams gp;
  int code = kOk;

  auto* validate = app.add_subcommand("validate", "check the structure axioms");
  validate->add_option("file", file)->required();
  validate->callback([&] { code = Validate(file); });

  auto* check = app.add_subcommand("check", "check UO or vNM");
  check->add_option("property", what)->required()->check(CLI::IsMember({"uo", "vnm"}));
  check->add_option("file", file)->required();
  check->callback([&] { code = Check(what, file); });

  auto* rnf = app.add_subcommand("rnf", "print the reduced normal form");
  rnf->add_option("file", file)->required();
  rnf->callback([&] { code = Rnf(file); });

  auto* equiv = app.add_subcommand("equiv", "decide behavioral equivalence");
  equiv->add_option("first", file)->required();
  equiv->add_option("second", file2)->required();
  equiv->add_flag("--via-minimal", via_minimal, "also compare minimal forms");
  equiv->callback([&] { code = Equiv(file, file2, via_minimal); });

  auto* minimize = app.add_subcommand("minimize", "reduce to the minimal structure");
  minimize->add_option("file", file)->required();
  minimize->add_option("--seed", seed, "random reduction order");
  minimize->callback([&] { code = Minimize(file, seed); });

  auto* opps = app.add_subcommand("opps", "list transformation opportunities");
  opps->add_option("file", file)->required();
  opps->add_option("--kind", kind)
      ->check(CLI::IsMember({"all", "coalescing", "is", "ico", "synth"}));
  opps->callback([&] { code = Opps(file, kind); });

  auto* apply = app.add_subcommand("apply", "apply a coalescing or IS opportunity");
  apply->add_option("file", file)->required();
  apply->add_option("--opp", index, "index in the `opps` listing")->required();
  apply->add_flag("--force", force, "allow a crossing IS");
  apply->callback([&] { code = Apply(file, index, force); });

  auto* compact = app.add_subcommand("compact", "backward compactification");
  compact->add_option("file", file)->required();
  compact->add_flag("--backward", backward)->required();
  compact->callback([&] { code = Compact(file); });

  auto* bd = app.add_subcommand("bd", "run backward dominance");
  bd->add_option("file", file)->required();
  bd->callback([&] { code = RunBd(file); });

  auto* mono = app.add_subcommand("monotonic", "compare BD across a complete ICO");
  mono->add_option("file", file)->required();
  mono->add_option("--ico", index, "index in `opps --kind ico`")->required();
  mono->callback([&] { code = Monotonic(file, index); });

  auto* gen = app.add_subcommand("gen", "generate a random structure");
  gen->add_option("--seed", gp.seed)->required();
  gen->add_option("--depth", gp.max_depth);
  gen->add_option("--branching", gp.max_branching);
  gen->add_option("--players", gp.players);
  gen->add_option("--simultaneity", gp.simultaneity);
  gen->add_option("--merge", gp.merge);
  gen->add_option("--stop", gp.stop);
  gen->add_option("--budget", gp.budget);
  gen->add_flag("--uo", gp.require_uo);
  gen->add_flag("--vnm", gp.require_vnm);
  bool payoffs = false;
  gen->add_flag("--payoffs", payoffs, "attach random rational payoffs");
  gen->callback([&] {
    Structure g = GenerateStructure(gp);
    std::cout << (payoffs ? Serialize(ToDocument(RandomGame(g, gp.seed)))
                          : SerializeStructure(g));
  });

  auto* dot = app.add_subcommand("dot", "emit Graphviz");
  dot->add_option("file", file)->required();
  dot->callback([&] { code = Dot(file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return code;
}

}  // namespace
}  // namespace egs

int main(int argc, char** argv) { return egs::Main(argc, argv); }
