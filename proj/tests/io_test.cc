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


#include "doctest.h"
#include "egs/dominance.h"
#include "egs/generate.h"
#include "egs/io.h"
#include "egs/validate.h"
#include "fixtures.h"

namespace egs {
namespace {

using fixtures::H;
using fixtures::Load;

const char* const kAll[] = {
    fixtures::kRed1,    fixtures::kRed2,     fixtures::kChain,   fixtures::kChainSolo,
    fixtures::kSim,     fixtures::kSim3,     fixtures::kEnt,     fixtures::kBeforeAfter,
    fixtures::kCoalesce, fixtures::kNc,      fixtures::kMud,     fixtures::kNul,
    fixtures::kIcot,    fixtures::kTwoIcos,      fixtures::kOverlap, fixtures::kNoPart,
    fixtures::kInterp,  fixtures::kAbsentMinded};

void CheckRoundTrip(const Structure& g) {
  const std::string once = SerializeStructure(g);
  Structure back = ParseStructure(once);
  REQUIRE(back == g);
  REQUIRE(SerializeStructure(back) == once);
}

TEST_CASE("round trip on every fixture") {
  for (const char* text : kAll) CheckRoundTrip(Load(text));
}

TEST_CASE("round trip on generated structures") {
  for (uint64_t seed = 0; seed < 500; ++seed) {
    GenParams p;
    p.seed = seed;
    p.players = 1 + seed % 4;
    p.max_depth = 2 + seed % 3;
    p.max_branching = 2 + seed % 2;
    p.simultaneity = 0.4;
    CheckRoundTrip(GenerateStructure(p));
  }
}

TEST_CASE("round trip with payoffs") {
  Game g = fixtures::NulGame();
  EgsDocument doc = ToDocument(g);
  doc.payoffs.begin()->second[2] = Rational(-7, 3);
  const std::string text = Serialize(doc);
  EgsDocument back = ParseEgs(text);
  CHECK(back.payoffs == doc.payoffs);
  CHECK(Serialize(back) == text);
  CHECK(text.find("2=-7/3") != std::string::npos);
}

TEST_CASE("the reduction example parses into its formal components") {
  Structure g = Load(fixtures::kRed1);
  CHECK(g.players() == std::vector<PlayerId>{1, 2});
  CHECK(g.num_nodes() == 12);
  CHECK(g.terminals().size() == 8);
  CHECK(g.num_infosets() == 4);
  const int a = g.Find(H(g, "1=A"));
  CHECK(g.active(a) == std::vector<PlayerId>{1, 2});
  CHECK(g.feasible(a, 1) == std::vector<ActionId>{"E", "F"});
  CHECK(g.feasible(a, 2) == std::vector<ActionId>{"c", "d"});
  CHECK(g.feasible(g.root(), 1) == std::vector<ActionId>{"A", "B", "O"});
  CHECK(g.FindInfoSet(fixtures::Set(g, 2, {"1=O", "1=B"})) >= 0);
  CHECK(g.IsTerminal(g.Find(H(g, "1=O/2=h"))));
  CHECK(g.Find(H(g, "1=A/(1=E,2=c)")) >= 0);
}

TEST_CASE("profile entries are ordered by player") {
  Structure g = Load(fixtures::kRed1);
  CHECK(FormatHistory(H(g, "1=A/(2=c,1=E)")) == "1=A/(1=E,2=c)");
}

TEST_CASE("comments and blank lines are ignored") {
  Structure g = ParseStructure(
      "# chain\negs 1\n\nplayer 1 actions L,R  # root\nplayer 2 actions a,b\n"
      "node \"\" 1:L|R\nnode \"1=L\" 2:a|b\ninfoset 1 {\"\"}\ninfoset 2 {\"1=L\"}\n");
  CHECK(g == Load(fixtures::kChain));
}

TEST_CASE("diagnostics carry line and column") {
  try {
    ParseStructure("egs 1\nplayer 1 actions L,R\nnode \"\" 1:L|R\nnode \"1=Q\" 1\n");
    FAIL("accepted bad input");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() > 1);
  }
  try {
    ParseStructure("player 1 actions L,R\n");
    FAIL("accepted missing header");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(ParseEgs("egs 1\nplayer 1 actions a,b\npayoff \"\" 1=1/0\n"), ParseError);
  CHECK_THROWS_AS(ParseEgs("egs 1\nfrobnicate\n"), ParseError);
}

TEST_CASE("semantic errors are left to validation") {
  Structure g = ParseStructure(R"egs(egs 1
player 1 actions L,R
node "" 1:L|R
infoset 1 {""}
infoset 1 {""}
)egs");
  CHECK_FALSE(ValidateStructure(g).ok());
}

TEST_CASE("games need a payoff for every player at every terminal") {
  EgsDocument doc = ParseEgs(std::string(fixtures::kChain) + "payoff \"1=R\" 1=1 2=0\n");
  CHECK_THROWS_AS(MakeGame(doc), EgsError);
  doc = ParseEgs(std::string(fixtures::kChain) +
                 "payoff \"1=R\" 1=1 2=0\npayoff \"1=L/2=a\" 1=0 2=1\n"
                 "payoff \"1=L/2=b\" 1=1/2 2=-1\npayoff \"1=L\" 1=0 2=0\n");
  CHECK_THROWS_AS(MakeGame(doc), EgsError);
  doc.payoffs.erase(doc.payoffs.find(H(doc.structure, "1=L")));
  Game game = MakeGame(doc);
  CHECK(game.payoffs[0][game.structure.terminal_index(game.structure.Find(H(game.structure, "1=L/2=b")))] ==
        Rational(1, 2));
}

}  // namespace
}  // namespace egs
