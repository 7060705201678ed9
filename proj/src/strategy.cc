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

#include "egs/strategy.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace egs {

std::string PlanLabel(const Plan& s) {
  std::string out;
  for (const auto& [k, a] : s.choices) {
    if (!out.empty()) out += ",";
    out += a;
  }
  return out;
}

std::optional<std::pair<int, ActionId>> OwnPredecessor(const Structure& g,
                                                       int k) {
  const auto& ms = g.members(k);
  if (ms.empty()) return std::nullopt;
  const PlayerId i = g.owner(k);
  const int m = ms.front();
  for (int a = g.parent(m); a >= 0; a = g.parent(a)) {
    if (!g.IsActive(a, i)) continue;
    return std::make_pair(g.InfoSetAt(a, i),
                          g.history(m).moves[g.depth(a)].at(i));
  }
  return std::nullopt;
}

namespace {

void ExpandPlans(const Structure& g,
                 const std::map<std::pair<int, ActionId>, std::vector<int>>& next,
                 std::set<int> pending, Plan& cur, std::vector<Plan>& out) {
  if (pending.empty()) {
    out.push_back(cur);
    return;
  }
  int k = *pending.begin();
  pending.erase(pending.begin());
  for (const ActionId& a : g.InfoSetActions(k)) {
    std::set<int> p2 = pending;
    auto it = next.find({k, a});
    if (it != next.end()) p2.insert(it->second.begin(), it->second.end());
    cur.choices[k] = a;
    ExpandPlans(g, next, std::move(p2), cur, out);
    cur.choices.erase(k);
  }
}

}  // namespace

std::vector<Plan> Plans(const Structure& g, PlayerId i) {
  if (!g.HasPlayer(i)) throw EgsError("unknown player " + std::to_string(i));
  std::map<std::pair<int, ActionId>, std::vector<int>> next;
  std::set<int> minimal;
  for (int k : g.InfoSetsOf(i)) {
    auto pred = OwnPredecessor(g, k);
    if (pred) {
      next[*pred].push_back(k);
    } else {
      minimal.insert(k);
    }
  }
  std::vector<Plan> out;
  Plan cur;
  cur.owner = i;
  ExpandPlans(g, next, minimal, cur, out);
  return out;
}

int Play(const Structure& g, const std::vector<Plan>& profile) {
  const auto& players = g.players();
  if (profile.size() != players.size()) {
    throw EgsError("profile needs one plan per player");
  }
  int v = g.root();
  if (v < 0) throw EgsError("structure has no root");
  while (!g.IsTerminal(v)) {
    Profile a;
    for (PlayerId p : g.active(v)) {
      size_t pos = std::lower_bound(players.begin(), players.end(), p) -
                   players.begin();
      int k = g.InfoSetAt(v, p);
      auto it = profile[pos].choices.find(k);
      if (it == profile[pos].choices.end()) {
        throw EgsError("plan of player " + std::to_string(p) +
                       " is undefined at a crossed information set");
      }
      a[p] = it->second;
    }
    int c = g.ChildWith(v, a);
    if (c < 0) throw EgsError("plan chooses an infeasible action");
    v = c;
  }
  return v;
}

size_t ReducedNormalForm::ProfileIndex(const std::vector<int>& s) const {
  size_t idx = 0;
  for (size_t p = 0; p < strategies.size(); ++p) {
    idx = idx * strategies[p].size() + s[p];
  }
  return idx;
}

std::vector<int> ReducedNormalForm::ProfileAt(size_t index) const {
  std::vector<int> s(strategies.size());
  for (size_t p = strategies.size(); p-- > 0;) {
    s[p] = static_cast<int>(index % strategies[p].size());
    index /= strategies[p].size();
  }
  return s;
}

std::vector<std::string> ReducedNormalForm::Labels(size_t player_pos) const {
  std::vector<std::string> out;
  for (const Plan& s : strategies[player_pos]) out.push_back(PlanLabel(s));
  return out;
}

ReducedNormalForm ReducedNormalFormOf(const Structure& g) {
  ReducedNormalForm r;
  r.players = g.players();
  for (PlayerId p : r.players) r.strategies.push_back(Plans(g, p));
  r.num_terminals = static_cast<int>(g.terminals().size());
  size_t total = 1;
  for (const auto& s : r.strategies) total *= s.size();
  r.outcome.resize(total);
  std::vector<Plan> prof(r.players.size());
  for (size_t idx = 0; idx < total; ++idx) {
    std::vector<int> s = r.ProfileAt(idx);
    for (size_t p = 0; p < s.size(); ++p) prof[p] = r.strategies[p][s[p]];
    r.outcome[idx] = g.terminal_index(Play(g, prof));
  }
  return r;
}

bool VerifyRnfIsomorphism(const ReducedNormalForm& a,
                          const ReducedNormalForm& b,
                          const RnfIsomorphism& m) {
  const size_t n = a.strategies.size();
  if (b.strategies.size() != n || m.player_map.size() != n ||
      m.strategy_map.size() != n || a.num_terminals != b.num_terminals ||
      static_cast<int>(m.terminal_map.size()) != a.num_terminals) {
    return false;
  }
  std::vector<bool> used(n, false);
  for (size_t p = 0; p < n; ++p) {
    int q = m.player_map[p];
    if (q < 0 || q >= static_cast<int>(n) || used[q]) return false;
    used[q] = true;
    if (a.strategies[p].size() != b.strategies[q].size() ||
        m.strategy_map[p].size() != a.strategies[p].size()) {
      return false;
    }
    std::vector<bool> hit(a.strategies[p].size(), false);
    for (int x : m.strategy_map[p]) {
      if (x < 0 || x >= static_cast<int>(hit.size()) || hit[x]) return false;
      hit[x] = true;
    }
  }
  std::vector<bool> zhit(a.num_terminals, false);
  for (int z : m.terminal_map) {
    if (z < 0 || z >= a.num_terminals || zhit[z]) return false;
    zhit[z] = true;
  }
  std::vector<int> t(n);
  for (size_t idx = 0; idx < a.num_profiles(); ++idx) {
    std::vector<int> s = a.ProfileAt(idx);
    for (size_t p = 0; p < n; ++p) t[m.player_map[p]] = m.strategy_map[p][s[p]];
    if (b.outcome[b.ProfileIndex(t)] != m.terminal_map[a.outcome[idx]]) {
      return false;
    }
  }
  return true;
}

namespace {

uint64_t Mix(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

// Colour refinement over the incidence structure of strategies, terminals
// and profile cells. Strategy vertices come first, player by player, then
// terminal vertices.
class RnfMatcher {
 public:
  RnfMatcher(const ReducedNormalForm& a, const ReducedNormalForm& b)
      : a_(a), b_(b) {
    offset_.push_back(0);
    for (const auto& s : a.strategies) offset_.push_back(offset_.back() + s.size());
    num_strategies_ = offset_.back();
  }

  std::optional<RnfIsomorphism> Run() {
    if (a_.strategies.size() != b_.strategies.size() ||
        a_.num_terminals != b_.num_terminals ||
        a_.num_profiles() != b_.num_profiles()) {
      return std::nullopt;
    }
    for (size_t p = 0; p < a_.strategies.size(); ++p) {
      if (a_.strategies[p].size() != b_.strategies[p].size()) return std::nullopt;
    }
    std::vector<int> ca(num_vertices()), cb(num_vertices());
    for (size_t p = 0; p < a_.strategies.size(); ++p) {
      for (size_t v = offset_[p]; v < offset_[p + 1]; ++v) ca[v] = cb[v] = p;
    }
    for (size_t v = num_strategies_; v < num_vertices(); ++v) {
      ca[v] = cb[v] = static_cast<int>(a_.strategies.size());
    }
    return Search(std::move(ca), std::move(cb));
  }

 private:
  size_t num_vertices() const { return num_strategies_ + a_.num_terminals; }

  std::vector<std::vector<uint64_t>> Signatures(const ReducedNormalForm& r,
                                                const std::vector<int>& c) {
    const size_t n = r.strategies.size();
    std::vector<std::vector<uint64_t>> sig(num_vertices());
    for (size_t v = 0; v < num_vertices(); ++v) sig[v].push_back(c[v]);
    for (size_t idx = 0; idx < r.num_profiles(); ++idx) {
      std::vector<int> s = r.ProfileAt(idx);
      const int z = static_cast<int>(num_strategies_) + r.outcome[idx];
      uint64_t whole = 17;
      for (size_t p = 0; p < n; ++p) whole = Mix(whole, c[offset_[p] + s[p]]);
      sig[z].push_back(whole);
      for (size_t p = 0; p < n; ++p) {
        uint64_t h = Mix(31, c[z]);
        for (size_t q = 0; q < n; ++q) {
          h = Mix(h, q == p ? 0 : 1 + static_cast<uint64_t>(c[offset_[q] + s[q]]));
        }
        sig[offset_[p] + s[p]].push_back(h);
      }
    }
    for (auto& v : sig) std::sort(v.begin() + 1, v.end());
    return sig;
  }

  static int CountClasses(const std::vector<int>& c) {
    return static_cast<int>(std::set<int>(c.begin(), c.end()).size());
  }

  // Refines both colourings with a shared dictionary; false when the
  // colour histograms diverge.
  bool Refine(std::vector<int>& ca, std::vector<int>& cb) {
    int classes = CountClasses(ca);
    while (true) {
      auto sa = Signatures(a_, ca);
      auto sb = Signatures(b_, cb);
      std::map<std::vector<uint64_t>, int> dict;
      std::vector<int> na(num_vertices()), nb(num_vertices());
      for (size_t v = 0; v < num_vertices(); ++v) {
        na[v] = dict.emplace(sa[v], static_cast<int>(dict.size())).first->second;
      }
      for (size_t v = 0; v < num_vertices(); ++v) {
        auto it = dict.find(sb[v]);
        if (it == dict.end()) return false;
        nb[v] = it->second;
      }
      std::vector<int> ha(dict.size()), hb(dict.size());
      for (size_t v = 0; v < num_vertices(); ++v) {
        ++ha[na[v]];
        ++hb[nb[v]];
      }
      if (ha != hb) return false;
      ca = std::move(na);
      cb = std::move(nb);
      int now = CountClasses(ca);
      if (now == classes) return true;
      classes = now;
    }
  }

  std::optional<RnfIsomorphism> Search(std::vector<int> ca,
                                       std::vector<int> cb) {
    if (!Refine(ca, cb)) return std::nullopt;
    std::map<int, std::vector<int>> cls_a;
    for (size_t v = 0; v < num_vertices(); ++v) cls_a[ca[v]].push_back(v);
    int pick = -1;
    size_t best = 0;
    for (const auto& [c, vs] : cls_a) {
      if (vs.size() > 1 && (pick < 0 || vs.size() < best)) {
        pick = c;
        best = vs.size();
      }
    }
    if (pick < 0) return BuildMap(ca, cb);
    const int v = cls_a[pick].front();
    const int fresh = *std::max_element(ca.begin(), ca.end()) + 1;
    for (size_t w = 0; w < num_vertices(); ++w) {
      if (cb[w] != pick) continue;
      std::vector<int> ca2 = ca, cb2 = cb;
      ca2[v] = fresh;
      cb2[w] = fresh;
      if (auto m = Search(std::move(ca2), std::move(cb2))) return m;
    }
    return std::nullopt;
  }

  std::optional<RnfIsomorphism> BuildMap(const std::vector<int>& ca,
                                         const std::vector<int>& cb) {
    std::map<int, int> where_b;
    for (size_t v = 0; v < num_vertices(); ++v) where_b[cb[v]] = v;
    RnfIsomorphism m;
    const size_t n = a_.strategies.size();
    m.player_map.resize(n);
    std::iota(m.player_map.begin(), m.player_map.end(), 0);
    m.strategy_map.resize(n);
    for (size_t p = 0; p < n; ++p) {
      for (size_t v = offset_[p]; v < offset_[p + 1]; ++v) {
        int w = where_b.at(ca[v]);
        if (w < static_cast<int>(offset_[p]) || w >= static_cast<int>(offset_[p + 1])) {
          return std::nullopt;
        }
        m.strategy_map[p].push_back(w - static_cast<int>(offset_[p]));
      }
    }
    for (int z = 0; z < a_.num_terminals; ++z) {
      m.terminal_map.push_back(where_b.at(ca[num_strategies_ + z]) -
                               static_cast<int>(num_strategies_));
    }
    if (!VerifyRnfIsomorphism(a_, b_, m)) return std::nullopt;
    return m;
  }

  const ReducedNormalForm& a_;
  const ReducedNormalForm& b_;
  std::vector<size_t> offset_;
  size_t num_strategies_ = 0;
};

ReducedNormalForm PermuteAxes(const ReducedNormalForm& b,
                              const std::vector<int>& perm) {
  // perm[p] = position in b of the player placed at position p.
  ReducedNormalForm r;
  for (int q : perm) {
    r.players.push_back(b.players[q]);
    r.strategies.push_back(b.strategies[q]);
  }
  r.num_terminals = b.num_terminals;
  r.outcome.resize(b.outcome.size());
  std::vector<int> t(perm.size());
  for (size_t idx = 0; idx < r.outcome.size(); ++idx) {
    std::vector<int> s = r.ProfileAt(idx);
    for (size_t p = 0; p < perm.size(); ++p) t[perm[p]] = s[p];
    r.outcome[idx] = b.outcome[b.ProfileIndex(t)];
  }
  return r;
}

}  // namespace

std::optional<RnfIsomorphism> RnfIsomorphic(const ReducedNormalForm& a,
                                            const ReducedNormalForm& b,
                                            bool permute_players) {
  if (!permute_players) {
    if (a.players != b.players) return std::nullopt;
    return RnfMatcher(a, b).Run();
  }
  const size_t n = a.strategies.size();
  if (b.strategies.size() != n) return std::nullopt;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool sizes = true;
    for (size_t p = 0; p < n; ++p) {
      sizes = sizes && a.strategies[p].size() == b.strategies[perm[p]].size();
    }
    if (!sizes) continue;
    ReducedNormalForm bp = PermuteAxes(b, perm);
    bp.players = a.players;
    if (auto m = RnfMatcher(a, bp).Run()) {
      m->player_map = perm;
      return m;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

std::vector<uint64_t> ShapeHashes(const Structure& g) {
  std::vector<uint64_t> h(g.num_nodes());
  for (int v = g.num_nodes() - 1; v >= 0; --v) {
    uint64_t x = 7;
    for (PlayerId p : g.active(v)) {
      x = Mix(x, static_cast<uint64_t>(p));
      x = Mix(x, g.feasible(v, p).size());
      int k = g.InfoSetAt(v, p);
      x = Mix(x, k < 0 ? 0 : g.members(k).size());
    }
    std::vector<uint64_t> kids;
    for (int c : g.children(v)) kids.push_back(h[c]);
    std::sort(kids.begin(), kids.end());
    for (uint64_t k : kids) x = Mix(x, k);
    h[v] = x;
  }
  return h;
}

class StructureMatcher {
 public:
  StructureMatcher(const Structure& a, const Structure& b)
      : a_(a), b_(b), ha_(ShapeHashes(a)), hb_(ShapeHashes(b)) {}

  std::optional<StructureIsomorphism> Run() {
    if (a_.num_nodes() != b_.num_nodes() ||
        a_.num_infosets() != b_.num_infosets() ||
        a_.players() != b_.players() || a_.root() < 0 || b_.root() < 0 ||
        ha_[a_.root()] != hb_[b_.root()]) {
      return std::nullopt;
    }
    State s;
    s.node.assign(a_.num_nodes(), -1);
    s.node_used.assign(b_.num_nodes(), false);
    s.infoset.assign(a_.num_infosets(), -1);
    s.infoset_used.assign(b_.num_infosets(), false);
    s.perm.assign(a_.num_infosets(), {});
    s.node[a_.root()] = b_.root();
    s.node_used[b_.root()] = true;
    if (!Visit(0, std::move(s))) return std::nullopt;
    return result_;
  }

 private:
  struct State {
    std::vector<int> node;
    std::vector<bool> node_used;
    std::vector<int> infoset;
    std::vector<bool> infoset_used;
    // Per mapped information set: index into the image's actions.
    std::vector<std::vector<int>> perm;
  };

  bool Visit(int v, State s) {
    if (v == a_.num_nodes()) {
      Finish(s);
      return true;
    }
    const int w = s.node[v];
    if (w < 0) return false;
    if (a_.active(v) != b_.active(w) ||
        a_.children(v).size() != b_.children(w).size()) {
      return false;
    }
    return MapInfoSets(v, w, 0, std::move(s));
  }

  // Fixes the information-set and action correspondence for the active
  // players of v from position `pos` on, then maps the children.
  bool MapInfoSets(int v, int w, size_t pos, State s) {
    const auto& act = a_.active(v);
    if (pos == act.size()) return MapChildren(v, w, std::move(s));
    const PlayerId p = act[pos];
    const int k = a_.InfoSetAt(v, p);
    const int l = b_.InfoSetAt(w, p);
    if (k < 0 || l < 0) return false;
    if (s.infoset[k] >= 0) {
      if (s.infoset[k] != l) return false;
      return MapInfoSets(v, w, pos + 1, std::move(s));
    }
    if (s.infoset_used[l] || a_.members(k).size() != b_.members(l).size() ||
        a_.InfoSetActions(k).size() != b_.InfoSetActions(l).size()) {
      return false;
    }
    std::vector<int> perm(a_.InfoSetActions(k).size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      State t = s;
      t.infoset[k] = l;
      t.infoset_used[l] = true;
      t.perm[k] = perm;
      if (MapInfoSets(v, w, pos + 1, std::move(t))) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  bool MapChildren(int v, int w, State s) {
    for (int c : a_.children(v)) {
      Profile q;
      for (const auto& [p, act] : a_.last_move(c)) {
        int k = a_.InfoSetAt(v, p);
        const auto& fa = a_.InfoSetActions(k);
        size_t idx = std::lower_bound(fa.begin(), fa.end(), act) - fa.begin();
        q[p] = b_.InfoSetActions(s.infoset[k])[s.perm[k][idx]];
      }
      int d = b_.ChildWith(w, q);
      if (d < 0 || s.node_used[d] || ha_[c] != hb_[d]) return false;
      s.node[c] = d;
      s.node_used[d] = true;
    }
    return Visit(v + 1, std::move(s));
  }

  void Finish(const State& s) {
    result_.node_map = s.node;
    result_.infoset_map = s.infoset;
    for (int k = 0; k < a_.num_infosets(); ++k) {
      const auto& fa = a_.InfoSetActions(k);
      const auto& fb = b_.InfoSetActions(s.infoset[k]);
      for (size_t x = 0; x < fa.size(); ++x) {
        result_.action_map[a_.owner(k)][fa[x]] = fb[s.perm[k][x]];
      }
    }
  }

  const Structure& a_;
  const Structure& b_;
  std::vector<uint64_t> ha_;
  std::vector<uint64_t> hb_;
  StructureIsomorphism result_;
};

}  // namespace

std::optional<StructureIsomorphism> StructureIsomorphic(const Structure& a,
                                                        const Structure& b) {
  return StructureMatcher(a, b).Run();
}

}  // namespace egs
