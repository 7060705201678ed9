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

#include "egs/transform.h"
#include "egs/validate.h"

namespace egs {

namespace {

// Subsets examined before the search gives up on larger bundles.
constexpr size_t kMaxSubsets = 1 << 16;

bool OwnerMovesBetween(const Structure& g, PlayerId i, int top, int v) {
  for (int a = g.parent(v); a > top && a >= 0; a = g.parent(a)) {
    if (g.IsActive(a, i)) return true;
  }
  return false;
}

int AncestorAt(const Structure& g, int v, int depth) {
  while (g.depth(v) > depth) v = g.parent(v);
  return v;
}

// The parts of `cc` keyed by anchor node; empty when it is not a complete
// control with equal-length anchors.
std::vector<std::pair<int, std::vector<int>>> Parts(const Structure& g,
                                                    const CompleteControl& cc) {
  std::vector<std::pair<int, std::vector<int>>> out;
  const int k = g.FindInfoSet(cc.mover);
  if (k < 0 || cc.anchors.empty()) return {};
  const PlayerId i = cc.mover.owner;
  std::vector<int> anchors;
  for (const History& h : cc.anchors) {
    int a = g.Find(h);
    if (a < 0 || g.IsActive(a, i) || g.IsTerminal(a)) return {};
    if (g.depth(a) != g.depth(g.Find(cc.anchors.front()))) return {};
    anchors.push_back(a);
  }
  std::sort(anchors.begin(), anchors.end());
  if (std::adjacent_find(anchors.begin(), anchors.end()) != anchors.end()) {
    return {};
  }
  std::set<int> covered;
  for (int a : anchors) {
    std::vector<int> d;
    for (int m : g.members(k)) {
      if (g.IsStrictAncestor(a, m)) {
        if (OwnerMovesBetween(g, i, a, m)) return {};
        d.push_back(m);
        covered.insert(m);
      }
    }
    if (d.empty() || g.ZOf(d) != g.Z(a)) return {};
    out.push_back({a, std::move(d)});
  }
  if (covered.size() != g.members(k).size()) return {};
  return out;
}

std::vector<int> MoverIndices(const Structure& g, const SynthOpp& s) {
  std::vector<int> out;
  for (const auto& c : s.coalescings) out.push_back(g.FindInfoSet(c.mover));
  for (const auto& c : s.complete_controls) out.push_back(g.FindInfoSet(c.mover));
  return out;
}

// Every history keeps the same count of vanishing predecessors across
// each information set that does not move.
bool LengthsUniform(const Structure& g, const std::vector<int>& movers) {
  std::vector<bool> moving(g.num_infosets(), false);
  for (int k : movers) moving[k] = true;
  std::vector<int> lost(g.num_nodes(), 0);
  for (int v = 0; v < g.num_nodes(); ++v) {
    int p = g.parent(v);
    if (p < 0) continue;
    bool vanishes = !g.active(p).empty();
    for (PlayerId q : g.active(p)) vanishes = vanishes && moving[g.InfoSetAt(p, q)];
    lost[v] = lost[p] + (vanishes ? 1 : 0);
  }
  for (int k = 0; k < g.num_infosets(); ++k) {
    if (moving[k]) continue;
    for (int m : g.members(k)) {
      if (lost[m] != lost[g.members(k).front()]) return false;
    }
  }
  return true;
}

// A complete control moves its set to its anchors, so no anchor may vanish.
bool AnchorsSurvive(const Structure& g, const std::vector<int>& movers,
                    const std::vector<CompleteControl>& controls) {
  std::vector<bool> moving(g.num_infosets(), false);
  for (int k : movers) moving[k] = true;
  for (const auto& c : controls) {
    for (const History& h : c.anchors) {
      const int a = g.Find(h);
      bool vanishes = !g.active(a).empty();
      for (PlayerId q : g.active(a)) vanishes = vanishes && moving[g.InfoSetAt(a, q)];
      if (vanishes) return false;
    }
  }
  return true;
}

std::string Quote(const History& h) { return "\"" + FormatHistory(h) + "\""; }

}  // namespace

std::string Describe(const SynthOpp& s) {
  std::string out = "synthesized";
  for (const auto& c : s.coalescings) out += "\n  " + Describe(c);
  for (const auto& c : s.complete_controls) {
    out += "\n  complete control player " + std::to_string(c.mover.owner) +
           " anchors {";
    for (size_t a = 0; a < c.anchors.size(); ++a) {
      out += (a ? "," : "") + Quote(c.anchors[a]);
    }
    out += "} mover " + FormatInfoSet(c.mover);
  }
  return out;
}

SynthMoves FindSynthMoves(const Structure& g) {
  SynthMoves out;
  out.coalescings = FindCoalescing(g);
  for (int k = 0; k < g.num_infosets(); ++k) {
    const int len = g.InfoSetDepth(k);
    for (int l = 0; l < len; ++l) {
      std::set<int> anchors;
      for (int m : g.members(k)) anchors.insert(AncestorAt(g, m, l));
      CompleteControl cc{{}, g.infoset(k)};
      for (int a : anchors) cc.anchors.push_back(g.history(a));
      if (!Parts(g, cc).empty()) out.complete_controls.push_back(std::move(cc));
    }
  }
  return out;
}

bool IsSynthesized(const Structure& g, const SynthOpp& s) {
  if (s.coalescings.empty() && s.complete_controls.empty()) return false;
  for (const auto& c : s.coalescings) {
    if (g.FindInfoSet(c.base) < 0 || g.FindInfoSet(c.mover) < 0 ||
        c.base.owner != c.mover.owner) {
      return false;
    }
    auto link = Controls(g, c.base, c.mover);
    if (!link || *link != c.link) return false;
  }
  for (const auto& c : s.complete_controls) {
    if (Parts(g, c).empty()) return false;
  }
  std::vector<int> movers = MoverIndices(g, s);
  if (std::set<int>(movers.begin(), movers.end()).size() != movers.size()) {
    return false;
  }
  return AnchorsSurvive(g, movers, s.complete_controls) && LengthsUniform(g, movers);
}

std::vector<SynthOpp> FindSynthesized(const Structure& g) {
  if (auto v = CheckVnm(g); !v.ok) {
    throw EgsError("synthesized opportunities need a vNM structure; " +
                   FormatInfoSet(g.infoset(*v.witness)) +
                   " has members of different lengths");
  }
  SynthMoves moves = FindSynthMoves(g);
  const size_t nc = moves.coalescings.size();
  const size_t n = nc + moves.complete_controls.size();
  std::vector<int> mover(n);
  for (size_t m = 0; m < n; ++m) {
    mover[m] = g.FindInfoSet(m < nc ? moves.coalescings[m].mover
                                    : moves.complete_controls[m - nc].mover);
  }
  std::vector<SynthOpp> out;
  size_t examined = 0;
  for (size_t size = 1; size <= n; ++size) {
    std::vector<size_t> idx(size);
    for (size_t a = 0; a < size; ++a) idx[a] = a;
    while (true) {
      if (++examined > kMaxSubsets) return out;
      std::vector<int> ms;
      for (size_t a : idx) ms.push_back(mover[a]);
      std::vector<int> sorted = ms;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
          LengthsUniform(g, ms)) {
        SynthOpp s;
        for (size_t a : idx) {
          if (a < nc) {
            s.coalescings.push_back(moves.coalescings[a]);
          } else {
            s.complete_controls.push_back(moves.complete_controls[a - nc]);
          }
        }
        if (AnchorsSurvive(g, ms, s.complete_controls)) out.push_back(std::move(s));
      }
      size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (size_t a = pos; a < size; ++a) idx[a] = idx[a - 1] + 1;
    }
  }
  return out;
}

Transformed ApplyPhi(const Structure& g, const SynthOpp& s) {
  if (!IsSynthesized(g, s)) throw EgsError("not a synthesized opportunity");
  std::vector<IsOpp> parts;
  for (const auto& c : s.complete_controls) {
    for (const auto& [a, d] : Parts(g, c)) {
      IsOpp o{g.history(a), {}, c.mover};
      for (int m : d) o.submover.push_back(g.history(m));
      parts.push_back(std::move(o));
    }
  }
  return ApplySequence(g, parts, s.coalescings);
}

}  // namespace egs
