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


#include <algorithm>
#include <set>

#include "doctest.h"
#include "egs/generate.h"
#include "egs/strategy.h"
#include "egs/transform.h"
#include "egs/validate.h"
#include "fixtures.h"
#include "properties.h"
#include "oracles.h"

namespace egs {
namespace {

using fixtures::H;
using fixtures::Load;
using fixtures::Node;
using fixtures::Set;
using fixtures::SetIndex;

const IsOpp* FindPart(const std::vector<IsOpp>& opps, const Structure& g, const std::string& anchor,
                      PlayerId owner) {
  for (const IsOpp& o : opps) {
    if (o.anchor == H(g, anchor) && o.owner() == owner) return &o;
  }
  return nullptr;
}

bool Isomorphic(const Structure& a, const Structure& b) {
  return StructureIsomorphic(a, b).has_value();
}

TEST_CASE("control") {
  Structure g = Load(fixtures::kRed1);
  CHECK(Controls(g, Set(g, 1, {""}), Set(g, 1, {"1=A"})) == std::optional<ActionId>("A"));
  CHECK_FALSE(Controls(g, Set(g, 2, {"1=A"}), Set(g, 2, {"1=O", "1=B"})).has_value());
  CHECK_THROWS_AS(Controls(g, Set(g, 1, {""}), Set(g, 2, {"1=A"})), EgsError);
  Structure chain = Load(fixtures::kChainSolo);
  CHECK(Controls(chain, Set(chain, 1, {""}), Set(chain, 1, {"1=L"})) == std::optional<ActionId>("L"));
}

TEST_CASE("dictation") {
  Structure nc = Load(fixtures::kNc);
  CHECK(Dictates(nc, H(nc, "1=B/2=c"), 4, {H(nc, "1=B/2=c/2=E"), H(nc, "1=B/2=c/2=F")}));
  CHECK_FALSE(Dictates(nc, H(nc, "1=B"), 4, {H(nc, "1=B/2=c/2=E"), H(nc, "1=B/2=c/2=F")}));
  Structure g = Load(fixtures::kRed1);
  CHECK_FALSE(Dictates(g, H(g, "1=O"), 1, {H(g, "1=A")}));
  CHECK_THROWS_AS(Dictates(g, H(g, "1=A"), 1, {H(g, "1=A")}), EgsError);
}

TEST_CASE("coalescing opportunities") {
  Structure g = Load(fixtures::kRed1);
  auto co = FindCoalescing(g);
  REQUIRE(co.size() == 1);
  CHECK(co[0] == CoalescingOpp{Set(g, 1, {""}), Set(g, 1, {"1=A"}), "A"});
  CHECK(FindCoalescing(Load(fixtures::kSim)).empty());
  Structure f = Load(fixtures::kCoalesce);
  auto fc = FindCoalescing(f);
  REQUIRE(fc.size() == 1);
  CHECK(fc[0] == CoalescingOpp{Set(f, 2, {"1=R"}), Set(f, 2, {"1=R/2=b"}), "b"});
}

TEST_CASE("coalescing replicates the histories in between") {
  Structure g = Load(fixtures::kCoalesce);
  Transformed t = ApplyCoalescing(g, FindCoalescing(g)[0]);
  const Structure& a = t.structure;
  CHECK(ValidateStructure(a).ok());
  CHECK(a.Find(H(a, "1=R/2=q/3=H/1=v")) >= 0);
  CHECK(a.Find(H(a, "1=R/2=b")) < 0);
  std::vector<int> want{a.Find(H(a, "1=R/2=p")), a.Find(H(a, "1=R/2=q"))};
  std::sort(want.begin(), want.end());
  CHECK(t.map.forward[Node(g, "1=R/2=b")] == want);
  CHECK(properties::CoalescingCardinalities(g, FindCoalescing(g)[0], t).empty());
  CHECK(BehaviorallyEquivalent(g, a).equivalent);
}

TEST_CASE("coalescing a one-player chain flattens it") {
  Structure g = Load(fixtures::kChainSolo);
  Transformed t = ApplyCoalescing(g, FindCoalescing(g).at(0));
  const Structure& a = t.structure;
  CHECK(a.num_nodes() == 4);
  CHECK(a.feasible(a.root(), 1) == std::vector<ActionId>{"R", "a", "b"});
  for (int c : a.children(a.root())) CHECK(a.IsTerminal(c));
  CHECK(RnfIsomorphic(ReducedNormalFormOf(g), ReducedNormalFormOf(a)).has_value());
}

TEST_CASE("coalescing the reduction example gives its reduced twin") {
  Structure g = Load(fixtures::kRed1);
  Structure a = ApplyCoalescing(g, FindCoalescing(g)[0]).structure;
  CHECK(a == Load(fixtures::kRed2));
}

TEST_CASE("an absorbed mover inherits the relations of its base") {
  Structure g = Load(fixtures::kRed1);
  const CoalescingOpp o = FindCoalescing(g)[0];
  Transformed t = ApplyCoalescing(g, o);
  const int mover = g.InfoSetIndex(o.mover);
  const int h22 = SetIndex(g, 2, {"1=B", "1=O"});
  CHECK_FALSE(Relation(g, mover, h22).related());
  CHECK(t.map.infoset_map[mover] == t.map.infoset_map[g.InfoSetIndex(o.base)]);
  CHECK(Relation(t.structure, t.map.infoset_map[mover], t.map.infoset_map[h22]).before);
  CHECK(properties::RelationsConserved(g, o, t).empty());
  CHECK_FALSE(properties::RelationsConserved(g, t).empty());
}

TEST_CASE("non-crossing and crossing interchanges") {
  Structure g = Load(fixtures::kNc);
  auto is = FindIs(g);
  const IsOpp* first = FindPart(is, g, "1=B/2=c", 4);
  REQUIRE(first != nullptr);
  CHECK(first->submover == std::vector<History>{H(g, "1=B/2=c/2=E"), H(g, "1=B/2=c/2=F")});
  CHECK(IsNonCrossing(g, *first));
  Transformed t1 = ApplyIs(g, *first);
  CHECK(properties::IsCardinalities(g, *first, t1).empty());
  const Structure& g1 = t1.structure;
  REQUIRE(CheckUo(g1).ok);
  auto is1 = FindIs(g1);
  const IsOpp* second = FindPart(is1, g1, "1=B", 4);
  REQUIRE(second != nullptr);
  CHECK(second->submover ==
        std::vector<History>{H(g1, "1=B/2=c"), H(g1, "1=B/2=d/3=g"), H(g1, "1=B/2=d/3=h")});
  CHECK_FALSE(IsNonCrossing(g1, *second));
  CHECK_FALSE(CheckUo(ApplyIs(g1, *second).structure).ok);
}

TEST_CASE("a crossing interchange on a minimal structure breaks UO") {
  Structure g = Load(fixtures::kMud);
  REQUIRE(CheckUo(g).ok);
  auto is = FindIs(g);
  const IsOpp* o = FindPart(is, g, "1=B", 3);
  REQUIRE(o != nullptr);
  CHECK_FALSE(IsNonCrossing(g, *o));
  CHECK_FALSE(CheckUo(ApplyIs(g, *o).structure).ok);
  CHECK(Isomorphic(MinimizeUo(g), g));
}

TEST_CASE("lifting a simultaneous pair to the root") {
  Structure g = Load(fixtures::kNul);
  auto is = FindIs(g);
  const IsOpp* o = FindPart(is, g, "", 2);
  REQUIRE(o != nullptr);
  CHECK(IsNonCrossing(g, *o));
  Transformed t = ApplyIs(g, *o);
  CHECK(ValidateStructure(t.structure).ok());
  CHECK(t.structure.active(t.structure.root()) == std::vector<PlayerId>{1, 2});
  CHECK(CheckUo(t.structure).ok);
}

TEST_CASE("structures without interchanges") {
  CHECK(FindIs(Load(fixtures::kChain)).empty());
}

TEST_CASE("minimization") {
  Structure g = Load(fixtures::kRed1);
  Structure m = MinimizeUo(g);
  for (uint64_t seed = 0; seed < 10; ++seed) CHECK(Isomorphic(MinimizeUo(g, seed), m));
  CHECK(FindCoalescing(m).empty());
  Structure sim = Load(fixtures::kSim);
  CHECK(MinimizeUo(sim) == sim);
  CHECK_THROWS_AS(MinimizeUo(Load(fixtures::kEnt)), EgsError);
}

TEST_CASE("complete compactification lifting two sets together") {
  Structure g = Load(fixtures::kIcot);
  auto icos = FindCompleteIcos(g);
  REQUIRE(icos.size() == 1);
  const Ico& t = icos[0];
  CHECK(t.coalescings.empty());
  REQUIRE(t.is_parts.size() == 2);
  std::set<PlayerId> owners;
  for (const IsOpp& p : t.is_parts) {
    CHECK(p.anchor == H(g, "1=B/2=C"));
    CHECK(p.submover == std::vector<History>{H(g, "1=B/2=C/3=x"), H(g, "1=B/2=C/3=y")});
    owners.insert(p.owner());
  }
  CHECK(owners == std::set<PlayerId>{4, 5});
  CHECK(CheckIco(g, t).complete);

  bool broken_en_route = false;
  for (const IsOpp& p : t.is_parts) broken_en_route |= !CheckUo(ApplyIs(g, p).structure).ok;
  CHECK(broken_en_route);

  Transformed r = ApplyTau(g, t);
  CHECK(properties::TauProperties(g, r).empty());
  CHECK(properties::RelationsConserved(g, r).empty());
  Ico reversed = t;
  std::reverse(reversed.is_parts.begin(), reversed.is_parts.end());
  CHECK(Isomorphic(ApplyTau(g, reversed).structure, r.structure));

  Compaction c = BackwardCompactify(g);
  CHECK(c.schedule == icos);
  CHECK(Isomorphic(c.structure, r.structure));
  CHECK(BehaviorallyEquivalent(g, c.structure).equivalent);
}

TEST_CASE("a bundle of coalescings is their iteration") {
  Structure g = Load(fixtures::kChainSolo);
  Ico t{{FindCoalescing(g).at(0)}, {}};
  REQUIRE(CheckIco(g, t).complete);
  CHECK(ApplyTau(g, t).structure == ApplyCoalescing(g, t.coalescings[0]).structure);
}

TEST_CASE("backward compactification prefers the deepest class") {
  Structure g = Load(fixtures::kTwoIcos);
  auto icos = FindCompleteIcos(g);
  REQUIRE(icos.size() == 2);
  const Ico* root_lift = nullptr;
  const Ico* b_lift = nullptr;
  for (const Ico& t : icos) {
    REQUIRE(t.is_parts.size() == 1);
    if (t.is_parts[0].anchor.empty()) root_lift = &t;
    if (t.is_parts[0].anchor == H(g, "1=B")) b_lift = &t;
  }
  REQUIRE(root_lift != nullptr);
  REQUIRE(b_lift != nullptr);
  CHECK(root_lift->is_parts[0].owner() == 2);
  CHECK(b_lift->is_parts[0].owner() == 3);

  Structure lifted_root = ApplyTau(g, *root_lift).structure;
  Structure lifted_b = ApplyTau(g, *b_lift).structure;
  CHECK_FALSE(Isomorphic(lifted_root, lifted_b));
  CHECK(FindCompleteIcos(lifted_root).empty());
  CHECK(FindCompleteIcos(lifted_b).empty());

  Compaction c = BackwardCompactify(g);
  REQUIRE(c.schedule.size() == 1);
  CHECK(c.schedule[0] == *b_lift);
  CHECK(Isomorphic(c.structure, lifted_b));

  Compaction fixed = BackwardCompactify(lifted_b);
  CHECK(fixed.schedule.empty());
  CHECK(fixed.structure == lifted_b);
}

TEST_CASE("a simultaneous set left behind blocks completeness") {
  Structure g = Load(fixtures::kNoPart);
  auto is = FindIs(g);
  const IsOpp* o = FindPart(is, g, "1=R/4=A", 2);
  REQUIRE(o != nullptr);
  IcoCheck c = CheckIco(g, Ico{{}, {*o}});
  CHECK(c.ico);
  CHECK_FALSE(c.complete);
  CHECK(c.reason.find("does not participate") != std::string::npos);
  CHECK(c.reason.find("{\"1=L/2=X\",\"1=R/4=A/5=C\"}") != std::string::npos);
  CHECK(FindCompleteIcos(g).empty());
}

TEST_CASE("an interpolating history blocks immediacy") {
  Structure g = Load(fixtures::kInterp);
  auto is = FindIs(g);
  const IsOpp* p2 = FindPart(is, g, "", 2);
  const IsOpp* p3 = FindPart(is, g, "", 3);
  REQUIRE(p2 != nullptr);
  REQUIRE(p3 != nullptr);
  CHECK_FALSE(IsImmediate(g, *p2));
  IcoCheck c = CheckIco(g, Ico{{}, {*p2, *p3}});
  CHECK_FALSE(c.ico);
  CHECK(c.reason.find("not immediate: history \"1=B\"") != std::string::npos);
  CHECK(FindCompleteIcos(g).empty());
}

TEST_CASE("an overlap that does not move as a whole breaks UO when forced") {
  Structure g = Load(fixtures::kOverlap);
  auto is = FindIs(g);
  const IsOpp* a4 = FindPart(is, g, "1=A", 4);
  const IsOpp* b5 = FindPart(is, g, "1=B/3=C", 5);
  REQUIRE(a4 != nullptr);
  REQUIRE(b5 != nullptr);
  Ico t{{}, {*a4, *b5}};
  IcoCheck c = CheckIco(g, t);
  CHECK(c.ico);
  CHECK_FALSE(c.complete);
  CHECK(c.reason.find("overlap") != std::string::npos);
  CHECK_THROWS_AS(ApplyTau(g, t), EgsError);
  Transformed forced = ApplyTau(g, t, false);
  const int h4 = forced.map.infoset_map[SetIndex(g, 4, {"1=A/2=C", "1=A/2=D", "1=B/3=C/6=x"})];
  const int h5 = forced.map.infoset_map[SetIndex(g, 5, {"1=A/2=C/4=u", "1=B/3=C/6=x", "1=B/3=C/6=y"})];
  RelationSet r = Relation(forced.structure, h4, h5);
  CHECK(r.before);
  CHECK(r.after);
  CHECK_FALSE(CheckUo(forced.structure).ok);
}

TEST_CASE("synthesized opportunities move dependent sets together") {
  Structure g = Load(fixtures::kSynth);
  REQUIRE(CheckVnm(g).ok);
  auto co = FindCoalescing(g);
  REQUIRE(co.size() == 2);
  const CoalescingOpp g22 = co[0], g32 = co[1];
  CHECK(g22.owner() == 2);
  CHECK(g32.owner() == 3);
  const CompleteControl c31{{H(g, "1=B")}, Set(g, 3, {"1=B/2=x", "1=B/2=y"})};
  const CompleteControl c22{{H(g, "1=A/2=x"), H(g, "1=B/2=x")},
                            Set(g, 2, {"1=A/2=x/4=e", "1=A/2=x/4=f", "1=B/2=x/3=c", "1=B/2=x/3=d"})};
  const SynthOpp l1{{g22, g32}, {}};
  const SynthOpp l2{{g22, g32}, {c31}};
  CHECK(IsSynthesized(g, l1));
  CHECK(IsSynthesized(g, l2));
  CHECK_FALSE(IsSynthesized(g, SynthOpp{{g22}, {}}));
  CHECK_FALSE(IsSynthesized(g, SynthOpp{{g32}, {}}));
  CHECK_FALSE(IsSynthesized(g, SynthOpp{{}, {c31}}));
  CHECK_FALSE(IsSynthesized(g, SynthOpp{{g22}, {c31}}));

  // The non-immediate coalescing has a complete-control twin with the same
  // mover. The twin's anchors vanish when the set above them moves.
  auto found = FindSynthesized(g);
  CHECK(found.size() == 3);
  CHECK(std::count(found.begin(), found.end(), l1) == 1);
  CHECK(std::count(found.begin(), found.end(), l2) == 1);
  CHECK(std::count(found.begin(), found.end(), SynthOpp{{g32}, {c22}}) == 1);
  CHECK_FALSE(IsSynthesized(g, SynthOpp{{g32}, {c22, c31}}));
  for (const SynthOpp& s : found) CHECK(properties::PhiProperties(g, ApplyPhi(g, s)).empty());

  Structure after = ApplyPhi(g, l2).structure;
  CHECK(RnfIsomorphic(ReducedNormalFormOf(g), ReducedNormalFormOf(after)).has_value());
  CHECK(after.num_infosets() == g.num_infosets() - 2);
  CHECK(after.active(after.root()) == std::vector<PlayerId>{1});
  CHECK(after.active(after.Find(H(after, "1=B"))) == std::vector<PlayerId>{2, 3});
}

TEST_CASE("synthesized opportunities need equal lengths") {
  CHECK_THROWS_AS(FindSynthesized(Load(fixtures::kEnt)), EgsError);
}

TEST_CASE("coalescings and non-crossing interchanges keep UO and relations") {
  int applied = 0;
  for (uint64_t seed = 0; seed < 120; ++seed) {
    Structure g = oracle::RandomUo(seed);
    for (const auto& o : FindCoalescing(g)) {
      Transformed t = ApplyCoalescing(g, o);
      REQUIRE(ValidateStructure(t.structure).ok());
      REQUIRE(CheckUo(t.structure).ok);
      REQUIRE(properties::RelationsConserved(g, o, t) == "");
      REQUIRE(properties::CoalescingCardinalities(g, o, t) == "");
      ++applied;
    }
    for (const auto& o : FindIs(g)) {
      Transformed t = ApplyIs(g, o);
      REQUIRE(ValidateStructure(t.structure).ok());
      if (IsNonCrossing(g, o)) REQUIRE(CheckUo(t.structure).ok);
      REQUIRE(properties::RelationsConserved(g, t) == "");
      REQUIRE(properties::IsCardinalities(g, o, t) == "");
      ++applied;
    }
  }
  CHECK(applied > 200);
}

TEST_CASE("complete compactifications keep simultaneity and order") {
  int checked = 0;
  for (uint64_t seed = 0; seed < 150 && checked < 40; ++seed) {
    Structure g = oracle::RandomUo(seed, 3, 3);
    for (const Ico& t : FindCompleteIcos(g)) {
      REQUIRE(properties::TauProperties(g, ApplyTau(g, t)) == "");
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("minimal forms do not depend on the reduction order") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    Structure g = oracle::RandomUo(seed);
    Structure first = MinimizeUo(g, seed * 10);
    for (uint64_t r = 1; r < 4; ++r) REQUIRE(Isomorphic(first, MinimizeUo(g, seed * 10 + r)));
  }
}

TEST_CASE("synthesized transformations keep equal lengths and the normal form") {
  int applied = 0;
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Structure g = oracle::RandomVnm(seed);
    for (const SynthOpp& s : FindSynthesized(g)) {
      REQUIRE(IsSynthesized(g, s));
      REQUIRE(properties::PhiProperties(g, ApplyPhi(g, s)) == "");
      ++applied;
    }
  }
  CHECK(applied > 20);
}

}  // namespace
}  // namespace egs
