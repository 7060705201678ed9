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

#include "egs/core.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace egs {

History History::Child(const Profile& a) const {
  History h = *this;
  h.moves.push_back(a);
  return h;
}

History History::Prefix(size_t n) const {
  History h;
  h.moves.assign(moves.begin(), moves.begin() + std::min(n, moves.size()));
  return h;
}

bool IsPrefix(const History& x, const History& y) {
  if (x.moves.size() > y.moves.size()) return false;
  return std::equal(x.moves.begin(), x.moves.end(), y.moves.begin());
}

bool IsStrictPrefix(const History& x, const History& y) {
  return x.moves.size() < y.moves.size() && IsPrefix(x, y);
}

std::string FormatProfile(const Profile& a) {
  std::string out;
  if (a.size() != 1) out += "(";
  bool first = true;
  for (const auto& [p, act] : a) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(p) + "=" + act;
  }
  if (a.size() != 1) out += ")";
  return out;
}

std::string FormatHistory(const History& h) {
  std::string out;
  for (size_t i = 0; i < h.moves.size(); ++i) {
    if (i > 0) out += "/";
    out += FormatProfile(h.moves[i]);
  }
  return out;
}

std::string FormatInfoSet(const InfoSet& s) {
  std::string out = std::to_string(s.owner) + ":{";
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + FormatHistory(s.members[i]) + "\"";
  }
  return out + "}";
}

Structure::Structure(std::map<PlayerId, std::vector<ActionId>> actions,
                     std::vector<History> histories,
                     std::vector<InfoSet> infosets)
    : actions_(std::move(actions)),
      histories_(std::move(histories)),
      infosets_(std::move(infosets)) {
  for (auto& [p, acts] : actions_) {
    std::sort(acts.begin(), acts.end());
    acts.erase(std::unique(acts.begin(), acts.end()), acts.end());
    players_.push_back(p);
  }
  std::sort(histories_.begin(), histories_.end());
  histories_.erase(std::unique(histories_.begin(), histories_.end()),
                   histories_.end());
  for (InfoSet& s : infosets_) std::sort(s.members.begin(), s.members.end());
  std::sort(infosets_.begin(), infosets_.end());

  const int n = num_nodes();
  parent_.assign(n, -1);
  children_.assign(n, {});
  subtree_end_.assign(n, 0);
  active_.assign(n, {});
  feasible_.assign(n, {});
  terminal_index_.assign(n, -1);
  infoset_at_.assign(n, {});

  root_ = Find(History{});
  for (int v = 0; v < n; ++v) {
    const History& h = histories_[v];
    if (!h.empty()) {
      parent_[v] = Find(h.Prefix(h.length() - 1));
      if (parent_[v] >= 0) children_[parent_[v]].push_back(v);
    }
    int e = v + 1;
    while (e < n && IsPrefix(h, histories_[e])) ++e;
    subtree_end_[v] = e;
  }
  for (int v = 0; v < n; ++v) {
    std::set<PlayerId> act;
    std::map<PlayerId, std::set<ActionId>> feas;
    for (int c : children_[v]) {
      for (const auto& [p, a] : last_move(c)) {
        act.insert(p);
        feas[p].insert(a);
      }
    }
    active_[v].assign(act.begin(), act.end());
    for (const auto& [p, s] : feas) {
      feasible_[v][p] = std::vector<ActionId>(s.begin(), s.end());
    }
    if (children_[v].empty()) {
      terminal_index_[v] = static_cast<int>(terminals_.size());
      terminals_.push_back(v);
    }
  }
  z_.assign(n, Bitset(terminals_.size()));
  for (int v = n - 1; v >= 0; --v) {
    if (terminal_index_[v] >= 0) z_[v].Set(terminal_index_[v]);
    for (int c : children_[v]) z_[v] |= z_[c];
  }
  member_nodes_.assign(infosets_.size(), {});
  for (int k = 0; k < num_infosets(); ++k) {
    for (const History& h : infosets_[k].members) {
      int v = Find(h);
      if (v < 0) continue;
      member_nodes_[k].push_back(v);
      PlayerId o = infosets_[k].owner;
      bool seen = false;
      for (const auto& [p, idx] : infoset_at_[v]) {
        if (p == o) seen = true;
      }
      if (!seen) infoset_at_[v].emplace_back(o, k);
    }
  }
}

const std::vector<ActionId>& Structure::actions(PlayerId i) const {
  auto it = actions_.find(i);
  if (it == actions_.end()) {
    throw EgsError("unknown player " + std::to_string(i));
  }
  return it->second;
}

int Structure::Find(const History& h) const {
  auto it = std::lower_bound(histories_.begin(), histories_.end(), h);
  if (it == histories_.end() || !(*it == h)) return -1;
  return static_cast<int>(it - histories_.begin());
}

bool Structure::IsActive(int n, PlayerId i) const {
  return std::binary_search(active_[n].begin(), active_[n].end(), i);
}

const std::vector<ActionId>& Structure::feasible(int n, PlayerId i) const {
  static const std::vector<ActionId> kEmpty;
  auto it = feasible_[n].find(i);
  return it == feasible_[n].end() ? kEmpty : it->second;
}

Bitset Structure::ZOf(const std::vector<int>& nodes) const {
  Bitset out(terminals_.size());
  for (int v : nodes) out |= z_[v];
  return out;
}

int Structure::InfoSetAt(int n, PlayerId i) const {
  for (const auto& [p, k] : infoset_at_[n]) {
    if (p == i) return k;
  }
  return -1;
}

int Structure::FindInfoSet(const InfoSet& s) const {
  InfoSet key = s;
  std::sort(key.members.begin(), key.members.end());
  auto it = std::lower_bound(infosets_.begin(), infosets_.end(), key);
  if (it == infosets_.end() || !(*it == key)) return -1;
  return static_cast<int>(it - infosets_.begin());
}

int Structure::InfoSetIndex(const InfoSet& s) const {
  int k = FindInfoSet(s);
  if (k < 0) throw EgsError("not an information set: " + FormatInfoSet(s));
  return k;
}

std::vector<int> Structure::InfoSetsOf(PlayerId i) const {
  std::vector<int> out;
  for (int k = 0; k < num_infosets(); ++k) {
    if (infosets_[k].owner == i) out.push_back(k);
  }
  return out;
}

const std::vector<ActionId>& Structure::InfoSetActions(int k) const {
  static const std::vector<ActionId> kEmpty;
  if (member_nodes_[k].empty()) return kEmpty;
  return feasible(member_nodes_[k].front(), infosets_[k].owner);
}

int Structure::InfoSetDepth(int k) const {
  int d = 0;
  for (int v : member_nodes_[k]) d = std::max(d, depth(v));
  return d;
}

int Structure::ChildWith(int n, const Profile& a) const {
  for (int c : children_[n]) {
    if (last_move(c) == a) return c;
  }
  return -1;
}

bool IsPrefix(const Structure& g, int x, int y) {
  return x == y || g.IsStrictAncestor(x, y);
}

RelationSet Relation(const Structure& g, int a, int b) {
  RelationSet r;
  const auto& ma = g.members(a);
  const auto& mb = g.members(b);
  for (int x : ma) {
    for (int y : mb) {
      if (x == y) r.simultaneous = true;
      if (g.IsStrictAncestor(x, y)) r.before = true;
      if (g.IsStrictAncestor(y, x)) r.after = true;
    }
  }
  return r;
}

RelationSet Relation(const Structure& g, const InfoSet& a, const InfoSet& b) {
  return Relation(g, g.InfoSetIndex(a), g.InfoSetIndex(b));
}

namespace {

int FindRoot(std::vector<int>& up, int x) {
  while (up[x] != x) {
    up[x] = up[up[x]];
    x = up[x];
  }
  return x;
}

std::vector<int> SimComponents(const Structure& g) {
  std::vector<int> up(g.num_infosets());
  std::iota(up.begin(), up.end(), 0);
  std::vector<int> first_at(g.num_nodes(), -1);
  for (int k = 0; k < g.num_infosets(); ++k) {
    for (int v : g.members(k)) {
      if (first_at[v] < 0) {
        first_at[v] = k;
      } else {
        up[FindRoot(up, k)] = FindRoot(up, first_at[v]);
      }
    }
  }
  for (int k = 0; k < g.num_infosets(); ++k) up[k] = FindRoot(up, k);
  return up;
}

}  // namespace

bool TransitivelySimultaneous(const Structure& g, int a, int b) {
  std::vector<int> comp = SimComponents(g);
  return comp[a] == comp[b];
}

bool TransitivelySimultaneous(const Structure& g, const InfoSet& a,
                              const InfoSet& b) {
  return TransitivelySimultaneous(g, g.InfoSetIndex(a), g.InfoSetIndex(b));
}

std::vector<std::vector<int>> SimClasses(const Structure& g) {
  std::vector<int> comp = SimComponents(g);
  std::map<int, std::vector<int>> by_root;
  for (int k = 0; k < g.num_infosets(); ++k) by_root[comp[k]].push_back(k);
  std::vector<std::vector<int>> out;
  for (auto& [r, ks] : by_root) out.push_back(std::move(ks));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace egs
