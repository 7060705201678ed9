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

#include "egs/transform.h"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <tuple>

#include "egs/validate.h"

namespace egs {

namespace {

std::string Members(const std::vector<History>& hs) {
  std::string out = "{";
  for (size_t m = 0; m < hs.size(); ++m) {
    if (m > 0) out += ",";
    out += "\"" + FormatHistory(hs[m]) + "\"";
  }
  return out + "}";
}

std::vector<int> Nodes(const Structure& g, const std::vector<History>& hs) {
  std::vector<int> out;
  for (const History& h : hs) {
    int v = g.Find(h);
    if (v < 0) throw EgsError("not a history: \"" + FormatHistory(h) + "\"");
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Terminals below the members of k where the owner picks a.
Bitset ZAfter(const Structure& g, int k, const ActionId& a) {
  Bitset z = g.EmptyTerminalSet();
  const PlayerId i = g.owner(k);
  for (int h : g.members(k)) {
    for (int c : g.children(h)) {
      if (g.last_move(c).at(i) == a) z |= g.Z(c);
    }
  }
  return z;
}

bool OwnerMovesBetween(const Structure& g, PlayerId i, int top, int v) {
  for (int a = g.parent(v); a > top && a >= 0; a = g.parent(a)) {
    if (g.IsActive(a, i)) return true;
  }
  return false;
}

// Copies subtrees below `owner`'s shifted decision, replicating them once
// per action in `replicas`.
class Rewriter {
 public:
  Rewriter(const Structure& g, PlayerId owner, std::vector<ActionId> replicas,
           std::vector<bool> mover)
      : g_(g),
        owner_(owner),
        replicas_(std::move(replicas)),
        mover_(std::move(mover)),
        images_(g.num_nodes()) {}

  void Keep(int v) { Emit(v, g_.history(v)); }

  void Replicate(int x, const std::function<Profile(const Profile&,
                                                    const ActionId&)>& edge,
                 const History& parent) {
    for (size_t t = 0; t < replicas_.size(); ++t) {
      Copy(x, parent.Child(edge(g_.last_move(x), replicas_[t])), t);
    }
  }

  const std::vector<History>& histories() const { return out_; }
  const std::vector<std::vector<History>>& images() const { return images_; }

 private:
  void Emit(int v, const History& h) {
    images_[v].push_back(h);
    out_.push_back(h);
  }

  void Copy(int x, const History& nh, size_t t) {
    Emit(x, nh);
    if (!mover_[x]) {
      for (int z : g_.children(x)) Copy(z, nh.Child(g_.last_move(z)), t);
      return;
    }
    const ActionId& c = replicas_[t];
    if (g_.active(x).size() == 1) {
      int y = g_.ChildWith(x, Profile{{owner_, c}});
      images_[y].push_back(nh);
      for (int z : g_.children(y)) Copy(z, nh.Child(g_.last_move(z)), t);
      return;
    }
    for (int z : g_.children(x)) {
      if (g_.last_move(z).at(owner_) != c) continue;
      Profile a = g_.last_move(z);
      a.erase(owner_);
      Copy(z, nh.Child(a), t);
    }
  }

  const Structure& g_;
  PlayerId owner_;
  std::vector<ActionId> replicas_;
  std::vector<bool> mover_;
  std::vector<History> out_;
  std::vector<std::vector<History>> images_;
};

// Builds the image structure and its node map. `info` lists the new
// partition with, per entry, the old information set it descends from.
Transformed Assemble(const Structure& g, const Rewriter& rw,
                     const std::vector<std::pair<int, InfoSet>>& info,
                     int dropped, int dropped_to) {
  std::vector<InfoSet> sets;
  for (const auto& [k, s] : info) sets.push_back(s);
  Transformed out{Structure(g.action_sets(), rw.histories(), sets), {}};
  const Structure& ng = out.structure;
  HistoryMap& m = out.map;
  m.forward.resize(g.num_nodes());
  for (int v = 0; v < g.num_nodes(); ++v) {
    for (const History& h : rw.images()[v]) m.forward[v].push_back(ng.Find(h));
    std::sort(m.forward[v].begin(), m.forward[v].end());
    m.forward[v].erase(std::unique(m.forward[v].begin(), m.forward[v].end()),
                       m.forward[v].end());
  }
  m.infoset_map.assign(g.num_infosets(), -1);
  for (const auto& [k, s] : info) {
    InfoSet sorted = s;
    std::sort(sorted.members.begin(), sorted.members.end());
    m.infoset_map[k] = ng.FindInfoSet(sorted);
  }
  if (dropped >= 0) m.infoset_map[dropped] = m.infoset_map[dropped_to];
  return out;
}

std::vector<History> ImagesOf(const Rewriter& rw, const std::vector<int>& vs) {
  std::vector<History> out;
  for (int v : vs) {
    for (const History& h : rw.images()[v]) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string Describe(const CoalescingOpp& o) {
  return "coalescing player " + std::to_string(o.owner()) + " base " +
         Members(o.base.members) + " mover " + Members(o.mover.members) +
         " link " + o.link;
}

std::string Describe(const IsOpp& o) {
  return "is player " + std::to_string(o.owner()) + " anchor \"" +
         FormatHistory(o.anchor) + "\" submover " + Members(o.submover) +
         " mover " + Members(o.mover.members);
}

HistoryMap HistoryMap::Identity(const Structure& g) {
  HistoryMap m;
  for (int v = 0; v < g.num_nodes(); ++v) m.forward.push_back({v});
  for (int k = 0; k < g.num_infosets(); ++k) m.infoset_map.push_back(k);
  return m;
}

std::vector<int> HistoryMap::TerminalMap(const Structure& before,
                                         const Structure& after) const {
  std::vector<int> out(before.terminals().size(), -1);
  std::vector<bool> hit(after.terminals().size(), false);
  for (size_t z = 0; z < before.terminals().size(); ++z) {
    const auto& f = forward[before.terminals()[z]];
    if (f.size() != 1 || !after.IsTerminal(f[0])) {
      throw EgsError("terminal map is not a bijection");
    }
    int t = after.terminal_index(f[0]);
    if (hit[t]) throw EgsError("terminal map is not a bijection");
    hit[t] = true;
    out[z] = t;
  }
  if (out.size() != hit.size()) throw EgsError("terminal map is not a bijection");
  return out;
}

HistoryMap Compose(const HistoryMap& first, const HistoryMap& second) {
  HistoryMap m;
  for (const auto& f : first.forward) {
    std::set<int> img;
    for (int w : f) img.insert(second.forward[w].begin(), second.forward[w].end());
    m.forward.emplace_back(img.begin(), img.end());
  }
  for (int k : first.infoset_map) {
    m.infoset_map.push_back(k < 0 ? -1 : second.infoset_map[k]);
  }
  for (const auto& [v, lift] : first.mover_lift) {
    std::set<int> img;
    for (int w : lift) img.insert(second.forward[w].begin(), second.forward[w].end());
    m.mover_lift[v] = {img.begin(), img.end()};
  }
  for (size_t v = 0; v < first.forward.size(); ++v) {
    std::set<int> img;
    for (int w : first.forward[v]) {
      auto it = second.mover_lift.find(w);
      if (it != second.mover_lift.end()) img.insert(it->second.begin(), it->second.end());
    }
    if (img.empty()) continue;
    auto& dst = m.mover_lift[v];
    img.insert(dst.begin(), dst.end());
    dst.assign(img.begin(), img.end());
  }
  return m;
}

std::optional<ActionId> Controls(const Structure& g, const InfoSet& base,
                                 const InfoSet& mover) {
  if (base.owner != mover.owner) {
    throw EgsError("control needs information sets of one player");
  }
  const int kb = g.InfoSetIndex(base);
  const int km = g.InfoSetIndex(mover);
  if (kb == km) return std::nullopt;
  const Bitset zm = g.ZOf(g.members(km));
  for (const ActionId& a : g.InfoSetActions(kb)) {
    if (ZAfter(g, kb, a) == zm) return a;
  }
  return std::nullopt;
}

bool Dictates(const Structure& g, const History& anchor, PlayerId owner,
              const std::vector<History>& candidate) {
  const int h = g.Find(anchor);
  if (h < 0) throw EgsError("not a history: \"" + FormatHistory(anchor) + "\"");
  if (g.IsActive(h, owner)) {
    throw EgsError("player " + std::to_string(owner) + " moves at the anchor");
  }
  if (candidate.empty()) return false;
  std::vector<int> vs = Nodes(g, candidate);
  const int k = g.InfoSetAt(vs.front(), owner);
  for (int v : vs) {
    if (k < 0 || g.InfoSetAt(v, owner) != k) {
      throw EgsError("candidate is not part of one information set");
    }
  }
  return g.Z(h) == g.ZOf(vs);
}

std::vector<CoalescingOpp> FindCoalescing(const Structure& g) {
  std::vector<CoalescingOpp> out;
  for (int km = 0; km < g.num_infosets(); ++km) {
    const PlayerId i = g.owner(km);
    for (int kb : g.InfoSetsOf(i)) {
      if (kb == km) continue;
      auto link = Controls(g, g.infoset(kb), g.infoset(km));
      if (link) out.push_back({g.infoset(kb), g.infoset(km), *link});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.base.owner, a.base.members, a.mover.members) <
           std::tie(b.base.owner, b.base.members, b.mover.members);
  });
  return out;
}

Transformed ApplyCoalescing(const Structure& g, const CoalescingOpp& opp) {
  const int kb = g.FindInfoSet(opp.base);
  const int km = g.FindInfoSet(opp.mover);
  if (kb < 0 || km < 0 || opp.base.owner != opp.mover.owner) {
    throw EgsError("stale coalescing opportunity");
  }
  auto link = Controls(g, opp.base, opp.mover);
  if (!link || *link != opp.link) throw EgsError("stale coalescing opportunity");
  const PlayerId i = opp.owner();

  std::vector<bool> mover(g.num_nodes(), false);
  for (int v : g.members(km)) mover[v] = true;
  std::vector<bool> replaced(g.num_nodes(), false);
  for (int h : g.members(kb)) {
    for (int c : g.children(h)) {
      if (g.last_move(c).at(i) == opp.link) replaced[c] = true;
    }
  }
  Rewriter rw(g, i, g.InfoSetActions(km), mover);
  auto edge = [i](const Profile& a, const ActionId& c) {
    Profile b = a;
    b[i] = c;
    return b;
  };
  for (int v = 0; v < g.num_nodes();) {
    if (replaced[v]) {
      rw.Replicate(v, edge, g.history(g.parent(v)));
      v = g.subtree_end(v);
    } else {
      rw.Keep(v);
      ++v;
    }
  }
  std::vector<std::pair<int, InfoSet>> info;
  for (int k = 0; k < g.num_infosets(); ++k) {
    if (k == km) continue;
    info.push_back({k, {g.owner(k), ImagesOf(rw, g.members(k))}});
  }
  Transformed out = Assemble(g, rw, info, km, kb);
  for (int x : g.members(km)) {
    int h = x;
    while (g.InfoSetAt(h, i) != kb) h = g.parent(h);
    out.map.mover_lift[x] = out.map.forward[h];
  }
  return out;
}

std::vector<IsOpp> FindIs(const Structure& g) {
  std::vector<IsOpp> out;
  for (int h = 0; h < g.num_nodes(); ++h) {
    if (g.IsTerminal(h)) continue;
    for (int k = 0; k < g.num_infosets(); ++k) {
      const PlayerId i = g.owner(k);
      if (g.IsActive(h, i)) continue;
      std::vector<int> d;
      for (int m : g.members(k)) {
        if (g.IsStrictAncestor(h, m)) d.push_back(m);
      }
      if (d.empty() || g.ZOf(d) != g.Z(h)) continue;
      bool nearest = true;
      for (int m : d) nearest = nearest && !OwnerMovesBetween(g, i, h, m);
      if (!nearest) continue;
      IsOpp o{g.history(h), {}, g.infoset(k)};
      for (int m : d) o.submover.push_back(g.history(m));
      out.push_back(std::move(o));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.mover.owner, a.mover.members, a.anchor) <
           std::tie(b.mover.owner, b.mover.members, b.anchor);
  });
  return out;
}

namespace {

struct ResolvedIs {
  int anchor;
  int mover;
  std::vector<int> sub;
};

ResolvedIs Resolve(const Structure& g, const IsOpp& opp) {
  ResolvedIs r;
  r.anchor = g.Find(opp.anchor);
  r.mover = g.FindInfoSet(opp.mover);
  if (r.anchor < 0 || r.mover < 0 || opp.submover.empty()) {
    throw EgsError("stale IS opportunity");
  }
  r.sub = Nodes(g, opp.submover);
  const PlayerId i = opp.owner();
  if (g.IsActive(r.anchor, i)) throw EgsError("stale IS opportunity");
  const auto& ms = g.members(r.mover);
  for (int v : r.sub) {
    if (!std::binary_search(ms.begin(), ms.end(), v)) {
      throw EgsError("stale IS opportunity");
    }
  }
  if (g.ZOf(r.sub) != g.Z(r.anchor)) throw EgsError("stale IS opportunity");
  return r;
}

bool Before(const Structure& g, int k, int v) {
  for (int m : g.members(k)) {
    if (g.IsStrictAncestor(m, v)) return true;
  }
  return false;
}

}  // namespace

bool IsNonCrossing(const Structure& g, const IsOpp& opp) {
  ResolvedIs r = Resolve(g, opp);
  std::vector<int> rest;
  for (int m : g.members(r.mover)) {
    if (!std::binary_search(r.sub.begin(), r.sub.end(), m)) rest.push_back(m);
  }
  for (int k = 0; k < g.num_infosets(); ++k) {
    if (k == r.mover) continue;
    const auto& ms = g.members(k);
    bool over = false;
    for (int v : r.sub) {
      for (int m : ms) {
        over = over || (g.IsStrictAncestor(r.anchor, m) &&
                        (m == v || g.IsStrictAncestor(m, v)));
      }
    }
    if (!over) continue;
    for (int v : rest) {
      if (Before(g, k, v)) return false;
    }
  }
  return true;
}

Transformed ApplyIs(const Structure& g, const IsOpp& opp) {
  ResolvedIs r = Resolve(g, opp);
  const PlayerId i = opp.owner();
  std::vector<bool> mover(g.num_nodes(), false);
  for (int v : r.sub) mover[v] = true;
  Rewriter rw(g, i, g.InfoSetActions(r.mover), mover);
  auto edge = [i](const Profile& a, const ActionId& c) {
    Profile b = a;
    b[i] = c;
    return b;
  };
  for (int v = 0; v < g.num_nodes();) {
    rw.Keep(v);
    if (v == r.anchor) {
      for (int x : g.children(v)) rw.Replicate(x, edge, g.history(v));
      v = g.subtree_end(v);
    } else {
      ++v;
    }
  }
  std::vector<std::pair<int, InfoSet>> info;
  for (int k = 0; k < g.num_infosets(); ++k) {
    if (k != r.mover) {
      info.push_back({k, {g.owner(k), ImagesOf(rw, g.members(k))}});
      continue;
    }
    std::vector<int> rest;
    for (int m : g.members(k)) {
      if (!mover[m]) rest.push_back(m);
    }
    InfoSet s{i, ImagesOf(rw, rest)};
    s.members.push_back(g.history(r.anchor));
    info.push_back({k, s});
  }
  Transformed out = Assemble(g, rw, info, -1, -1);
  for (int x : r.sub) out.map.mover_lift[x] = out.map.forward[r.anchor];
  return out;
}

CoalescingOpp RelocateCoalescing(const Structure& after, const HistoryMap& map,
                                 const CoalescingOpp& opp,
                                 const Structure& before) {
  const int kb = before.FindInfoSet(opp.base);
  const int km = before.FindInfoSet(opp.mover);
  if (kb < 0 || km < 0) throw EgsError("stale part: " + Describe(opp));
  const int nb = map.infoset_map[kb];
  const int nm = map.infoset_map[km];
  if (nb < 0 || nm < 0 || nb == nm) throw EgsError("stale part: " + Describe(opp));
  CoalescingOpp o{after.infoset(nb), after.infoset(nm), {}};
  auto link = Controls(after, o.base, o.mover);
  if (!link) throw EgsError("stale part: " + Describe(opp));
  o.link = *link;
  return o;
}

std::vector<IsOpp> RelocateIs(const Structure& after, const HistoryMap& map,
                              const IsOpp& opp, const Structure& before) {
  const int a = before.Find(opp.anchor);
  const int k = before.FindInfoSet(opp.mover);
  if (a < 0 || k < 0 || map.infoset_map[k] < 0) {
    throw EgsError("stale part: " + Describe(opp));
  }
  std::vector<int> sub = Nodes(before, opp.submover);
  const InfoSet& mover = after.infoset(map.infoset_map[k]);
  std::vector<IsOpp> out;
  for (int na : map.forward[a]) {
    IsOpp o{after.history(na), {}, mover};
    for (int v : sub) {
      for (int w : map.forward[v]) {
        if (after.IsStrictAncestor(na, w)) o.submover.push_back(after.history(w));
      }
    }
    std::sort(o.submover.begin(), o.submover.end());
    o.submover.erase(std::unique(o.submover.begin(), o.submover.end()),
                     o.submover.end());
    if (o.submover.empty() || after.IsActive(na, opp.owner()) ||
        !Dictates(after, o.anchor, opp.owner(), o.submover)) {
      throw EgsError("stale part: " + Describe(opp));
    }
    out.push_back(std::move(o));
  }
  if (out.empty()) throw EgsError("stale part: " + Describe(opp));
  return out;
}

Transformed ApplySequence(const Structure& g, std::vector<IsOpp> is_parts,
                          std::vector<CoalescingOpp> coalescings) {
  Transformed cur{g, HistoryMap::Identity(g)};
  auto advance = [&](Transformed step, size_t skip_is, size_t skip_co) {
    std::vector<IsOpp> is_next;
    for (size_t p = skip_is; p < is_parts.size(); ++p) {
      for (IsOpp& q : RelocateIs(step.structure, step.map, is_parts[p],
                                 cur.structure)) {
        is_next.push_back(std::move(q));
      }
    }
    std::vector<CoalescingOpp> co_next;
    for (size_t c = skip_co; c < coalescings.size(); ++c) {
      co_next.push_back(RelocateCoalescing(step.structure, step.map,
                                           coalescings[c], cur.structure));
    }
    is_parts = std::move(is_next);
    coalescings = std::move(co_next);
    cur.map = Compose(cur.map, step.map);
    cur.structure = std::move(step.structure);
  };
  while (!is_parts.empty()) {
    advance(ApplyIs(cur.structure, is_parts.front()), 1, 0);
  }
  while (!coalescings.empty()) {
    advance(ApplyCoalescing(cur.structure, coalescings.front()), 0, 1);
  }
  return cur;
}

Structure MinimizeUo(const Structure& g, std::optional<uint64_t> seed) {
  if (auto uo = CheckUo(g); !uo.ok) {
    throw EgsError("minimization needs UO; violated by " +
                   FormatInfoSet(g.infoset(uo.witness->first)) + " and " +
                   FormatInfoSet(g.infoset(uo.witness->second)));
  }
  std::mt19937_64 rng(seed.value_or(0));
  Structure cur = g;
  while (true) {
    std::vector<Structure> next;
    for (const CoalescingOpp& o : FindCoalescing(cur)) {
      next.push_back(ApplyCoalescing(cur, o).structure);
      if (!seed) break;
    }
    if (next.empty() || seed) {
      for (const IsOpp& o : FindIs(cur)) {
        Structure s = ApplyIs(cur, o).structure;
        if (!CheckUo(s).ok) continue;
        next.push_back(std::move(s));
        if (!seed) break;
      }
    }
    if (next.empty()) return cur;
    size_t pick = 0;
    if (seed) pick = std::uniform_int_distribution<size_t>(0, next.size() - 1)(rng);
    cur = std::move(next[pick]);
  }
}

}  // namespace egs
