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

#include "egs/validate.h"

#include <algorithm>
#include <map>

namespace egs {
namespace {

std::string Quote(const History& h) { return "\"" + FormatHistory(h) + "\""; }

void Add(ValidationReport& r, const std::string& axiom, std::string w) {
  r.violations.push_back({axiom, std::move(w)});
}

void CheckTreeShape(const Structure& g, ValidationReport& r) {
  if (g.root() < 0) Add(r, "root", "the empty history is missing");
  for (int v = 0; v < g.num_nodes(); ++v) {
    const History& h = g.history(v);
    if (!h.empty() && g.parent(v) < 0) {
      Add(r, "prefix closure",
          Quote(h) + " lacks its prefix " + Quote(h.Prefix(h.length() - 1)));
    }
  }
  for (int v = 0; v < g.num_nodes(); ++v) {
    const History& h = g.history(v);
    if (h.empty()) continue;
    const Profile& a = h.moves.back();
    if (a.empty()) {
      Add(r, "profile", Quote(h) + " ends with an empty profile");
      continue;
    }
    for (const auto& [p, act] : a) {
      if (!g.HasPlayer(p)) {
        Add(r, "profile", Quote(h) + " uses undeclared player " +
                              std::to_string(p));
      } else {
        const auto& acts = g.actions(p);
        if (!std::binary_search(acts.begin(), acts.end(), act)) {
          Add(r, "profile", Quote(h) + " uses action " + act +
                                " outside the alphabet of player " +
                                std::to_string(p));
        }
      }
    }
  }
}

void CheckActions(const Structure& g, ValidationReport& r) {
  for (int v = 0; v < g.num_nodes(); ++v) {
    for (int c : g.children(v)) {
      if (g.last_move(c).size() != g.active(v).size()) {
        Add(r, "active players", "children of " + Quote(g.history(v)) +
                                     " name different player sets");
        break;
      }
    }
  }
  for (int v = 0; v < g.num_nodes(); ++v) {
    for (PlayerId p : g.active(v)) {
      if (g.feasible(v, p).size() < 2) {
        Add(r, "feasible count", "player " + std::to_string(p) +
                                     " has one feasible action at " +
                                     Quote(g.history(v)));
      }
    }
  }
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (g.IsTerminal(v)) continue;
    size_t product = 1;
    for (PlayerId p : g.active(v)) product *= g.feasible(v, p).size();
    if (product != g.children(v).size()) {
      Add(r, "product closure",
          "children of " + Quote(g.history(v)) + " number " +
              std::to_string(g.children(v).size()) + ", expected " +
              std::to_string(product));
    }
  }

  // Partition: every member is an active history of its owner, and every
  // active history sits in exactly one block.
  std::map<std::pair<int, PlayerId>, int> cover;
  for (int k = 0; k < g.num_infosets(); ++k) {
    const InfoSet& s = g.infoset(k);
    if (!g.HasPlayer(s.owner)) {
      Add(r, "partition", "information set " + FormatInfoSet(s) +
                              " has an undeclared owner");
      continue;
    }
    if (s.members.empty()) {
      Add(r, "partition", "empty information set for player " +
                              std::to_string(s.owner));
    }
    for (size_t m = 0; m < s.members.size(); ++m) {
      const History& h = s.members[m];
      if (m > 0 && s.members[m - 1] == h) {
        Add(r, "partition", Quote(h) + " is listed twice in " +
                                FormatInfoSet(s));
        continue;
      }
      int v = g.Find(h);
      if (v < 0) {
        Add(r, "partition", Quote(h) + " in " + FormatInfoSet(s) +
                                " is not a history");
        continue;
      }
      if (!g.IsActive(v, s.owner)) {
        Add(r, "partition", Quote(h) + " in " + FormatInfoSet(s) +
                                " is not a move of its owner");
        continue;
      }
      ++cover[{v, s.owner}];
    }
  }
  for (int v = 0; v < g.num_nodes(); ++v) {
    for (PlayerId p : g.active(v)) {
      auto it = cover.find({v, p});
      int count = it == cover.end() ? 0 : it->second;
      if (count != 1) {
        Add(r, "partition", "player " + std::to_string(p) + " at " +
                                Quote(g.history(v)) + " is covered by " +
                                std::to_string(count) +
                                " information sets");
      }
    }
  }

  for (int k = 0; k < g.num_infosets(); ++k) {
    const auto& ms = g.members(k);
    for (size_t m = 1; m < ms.size(); ++m) {
      if (g.feasible(ms[m], g.owner(k)) != g.feasible(ms[0], g.owner(k))) {
        Add(r, "measurability",
            Quote(g.history(ms[0])) + " and " + Quote(g.history(ms[m])) +
                " offer player " + std::to_string(g.owner(k)) +
                " different actions");
        break;
      }
    }
  }
  for (int a = 0; a < g.num_infosets(); ++a) {
    for (int b = a + 1; b < g.num_infosets(); ++b) {
      if (g.owner(a) != g.owner(b)) continue;
      const auto& fa = g.InfoSetActions(a);
      const auto& fb = g.InfoSetActions(b);
      std::vector<ActionId> common;
      std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        Add(r, "disjoint actions", FormatInfoSet(g.infoset(a)) + " and " +
                                       FormatInfoSet(g.infoset(b)) +
                                       " share action " + common.front());
      }
    }
  }
  for (PlayerId p : g.players()) {
    bool moves = false;
    for (int v = 0; v < g.num_nodes() && !moves; ++v) {
      moves = g.IsActive(v, p);
    }
    if (!moves) Add(r, "idle player", "player " + std::to_string(p));
  }
}

void CheckRecall(const Structure& g, ValidationReport& r) {
  for (int k = 0; k < g.num_infosets(); ++k) {
    const auto& ms = g.members(k);
    if (ms.empty()) continue;
    Experience first = PlayerExperience(g, g.owner(k), ms[0]);
    for (size_t m = 1; m < ms.size(); ++m) {
      if (!(PlayerExperience(g, g.owner(k), ms[m]) == first)) {
        Add(r, "perfect recall",
            "player " + std::to_string(g.owner(k)) + " distinguishes " +
                Quote(g.history(ms[0])) + " from " + Quote(g.history(ms[m])));
        break;
      }
    }
  }
}

}  // namespace

bool ValidationReport::Has(const std::string& axiom) const {
  for (const Violation& v : violations) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

Experience PlayerExperience(const Structure& g, PlayerId i, int node) {
  Experience x;
  const History& h = g.history(node);
  for (size_t len = 0; len < h.length(); ++len) {
    int a = g.Find(h.Prefix(len));
    if (a < 0 || !g.IsActive(a, i)) continue;
    int k = g.InfoSetAt(a, i);
    auto it = h.moves[len].find(i);
    if (k < 0 || it == h.moves[len].end()) continue;
    x.pairs.emplace(k, it->second);
  }
  return x;
}

Experience PlayerExperience(const Structure& g, PlayerId i, const History& h) {
  int v = g.Find(h);
  if (v < 0) throw EgsError("not a history: \"" + FormatHistory(h) + "\"");
  if (!g.HasPlayer(i)) throw EgsError("unknown player " + std::to_string(i));
  return PlayerExperience(g, i, v);
}

ValidationReport ValidateStructure(const Structure& g) {
  ValidationReport r;
  CheckTreeShape(g, r);
  if (!r.ok()) return r;
  CheckActions(g, r);
  if (!r.ok()) return r;
  CheckRecall(g, r);
  return r;
}

void RequireValid(const Structure& g) {
  ValidationReport r = ValidateStructure(g);
  if (!r.ok()) {
    throw EgsError("invalid structure: " + r.violations.front().axiom + ": " +
                   r.violations.front().witness);
  }
}

UoCheck CheckUo(const Structure& g) {
  UoCheck out;
  for (int a = 0; a < g.num_infosets(); ++a) {
    for (int b = a + 1; b < g.num_infosets(); ++b) {
      RelationSet r = Relation(g, a, b);
      if (r.before && r.after) {
        out.ok = false;
        out.witness = std::make_pair(a, b);
        return out;
      }
    }
  }
  return out;
}

VnmCheck CheckVnm(const Structure& g) {
  VnmCheck out;
  for (int k = 0; k < g.num_infosets(); ++k) {
    const auto& ms = g.members(k);
    for (int v : ms) {
      if (g.depth(v) != g.depth(ms.front())) {
        out.ok = false;
        out.witness = k;
        return out;
      }
    }
  }
  return out;
}

}  // namespace egs
