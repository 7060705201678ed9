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


// Property checks over a single transformation, shared by the unit tests
// and the acceptance suite. Each returns an empty string on success and a
// description of the first failure otherwise.

#ifndef EGS_TESTS_PROPERTIES_H_
#define EGS_TESTS_PROPERTIES_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "egs/core.h"
#include "egs/io.h"
#include "egs/strategy.h"
#include "egs/transform.h"
#include "egs/validate.h"
#include "oracles.h"

namespace egs::properties {

inline std::string Pair(const Structure& g, int a, int b) {
  return FormatInfoSet(g.infoset(a)) + " / " + FormatInfoSet(g.infoset(b));
}

// Related sets stay related. Conversely, sets related afterwards were
// related before, except pairs involving `deleted`, a coalescing mover that
// is absorbed into its base and takes over the base's relations.
inline std::string RelationsConserved(const Structure& g, const Transformed& t,
                                      int deleted = -1) {
  const auto& m = t.map.infoset_map;
  if (static_cast<int>(m.size()) != g.num_infosets()) return "information-set map has the wrong size";
  for (int a = 0; a < g.num_infosets(); ++a) {
    for (int b = 0; b < g.num_infosets(); ++b) {
      const bool before = oracle::Relation(g.infoset(a), g.infoset(b)).related();
      const bool after =
          oracle::Relation(t.structure.infoset(m[a]), t.structure.infoset(m[b])).related();
      if (before && !after) return "relation lost for " + Pair(g, a, b);
      if (!before && after && a != deleted && b != deleted) {
        return "relation created for " + Pair(g, a, b);
      }
    }
  }
  return "";
}

inline std::string RelationsConserved(const Structure& g, const CoalescingOpp& o,
                                      const Transformed& t) {
  return RelationsConserved(g, t, g.InfoSetIndex(o.mover));
}

// Histories strictly between an endpoint pair are replicated once per
// action of the moved set; every other surviving history maps to one.
inline std::string Cardinalities(const Structure& g, const HistoryMap& map,
                                 const std::vector<int>& tops,
                                 const std::vector<int>& movers, size_t k) {
  std::vector<bool> is_mover(g.num_nodes(), false);
  for (int v : movers) is_mover[v] = true;
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (is_mover[v]) continue;
    bool between = false;
    for (int a : tops) {
      for (int m : movers) between = between || (g.IsStrictAncestor(a, v) && g.IsStrictAncestor(v, m));
    }
    const size_t want = between ? k : 1;
    if (map.forward[v].size() != want) {
      return "history \"" + FormatHistory(g.history(v)) + "\" has " +
             std::to_string(map.forward[v].size()) + " images, expected " + std::to_string(want);
    }
  }
  return "";
}

inline std::string CoalescingCardinalities(const Structure& g, const CoalescingOpp& o,
                                           const Transformed& t) {
  const int kb = g.InfoSetIndex(o.base);
  const int km = g.InfoSetIndex(o.mover);
  return Cardinalities(g, t.map, g.members(kb), g.members(km), g.InfoSetActions(km).size());
}

inline std::string IsCardinalities(const Structure& g, const IsOpp& o, const Transformed& t) {
  std::vector<int> sub;
  for (const History& h : o.submover) sub.push_back(g.Find(h));
  return Cardinalities(g, t.map, {g.Find(o.anchor)}, sub,
                       g.InfoSetActions(g.InfoSetIndex(o.mover)).size());
}

// UO after the compactification, simultaneity kept, and no following
// pair reversed.
inline std::string TauProperties(const Structure& g, const Transformed& t) {
  const Structure& a = t.structure;
  if (!ValidateStructure(a).ok()) return "result is not a valid structure";
  if (!CheckUo(a).ok) return "UO fails after the compactification";
  const auto& m = t.map.infoset_map;
  for (int f = 0; f < g.num_infosets(); ++f) {
    for (int e = 0; e < g.num_infosets(); ++e) {
      const RelationSet before = oracle::Relation(g.infoset(f), g.infoset(e));
      const RelationSet after = oracle::Relation(a.infoset(m[f]), a.infoset(m[e]));
      if (before.simultaneous && !after.simultaneous) return "simultaneity lost for " + Pair(g, f, e);
      if (before.before && !before.simultaneous && after.after) {
        return "following reversed for " + Pair(g, f, e);
      }
    }
  }
  return "";
}

// Per player: for each plan, the terminals it leaves possible.
inline std::vector<std::vector<std::set<int>>> PlanTerminals(const ReducedNormalForm& r) {
  std::vector<std::vector<std::set<int>>> out(r.players.size());
  for (size_t j = 0; j < r.players.size(); ++j) out[j].resize(r.strategies[j].size());
  for (size_t idx = 0; idx < r.num_profiles(); ++idx) {
    std::vector<int> s = r.ProfileAt(idx);
    for (size_t j = 0; j < s.size(); ++j) out[j][s[j]].insert(r.outcome[idx]);
  }
  return out;
}

// An isomorphism of reduced normal forms built from the transformation's
// terminal correspondence, then verified profile by profile.
inline std::optional<RnfIsomorphism> CarriedIsomorphism(const Structure& g, const Transformed& t) {
  ReducedNormalForm a = ReducedNormalFormOf(g), b = ReducedNormalFormOf(t.structure);
  if (a.players != b.players) return std::nullopt;
  RnfIsomorphism m;
  m.terminal_map = t.map.TerminalMap(g, t.structure);
  for (size_t j = 0; j < a.players.size(); ++j) m.player_map.push_back(static_cast<int>(j));
  auto ta = PlanTerminals(a), tb = PlanTerminals(b);
  for (size_t j = 0; j < ta.size(); ++j) {
    std::map<std::set<int>, int> index;
    for (size_t x = 0; x < tb[j].size(); ++x) index[tb[j][x]] = static_cast<int>(x);
    std::vector<int> sm;
    for (const auto& z : ta[j]) {
      std::set<int> image;
      for (int v : z) image.insert(m.terminal_map[v]);
      auto it = index.find(image);
      if (it == index.end()) return std::nullopt;
      sm.push_back(it->second);
    }
    m.strategy_map.push_back(std::move(sm));
  }
  if (!VerifyRnfIsomorphism(a, b, m)) return std::nullopt;
  return m;
}

// The result of a synthesized transformation is again a vNM with the same
// reduced normal form.
inline std::string PhiProperties(const Structure& g, const Transformed& t) {
  if (!ValidateStructure(t.structure).ok()) return "result is not a valid structure";
  if (!CheckVnm(t.structure).ok) return "equal length fails after the transformation";
  if (!CarriedIsomorphism(g, t)) return "reduced normal forms differ";
  return "";
}

}  // namespace egs::properties

#endif  // EGS_TESTS_PROPERTIES_H_
