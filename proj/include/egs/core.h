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

#ifndef EGS_CORE_H_
#define EGS_CORE_H_

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "egs/bitset.h"

// Value types for extensive game structures with simultaneous moves: a
// structure is a prefix-closed set of histories, where each history is a
// sequence of action profiles, plus one information partition per player.
namespace egs {

using PlayerId = int;
using ActionId = std::string;

class EgsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One simultaneous move: the action chosen by each active player.
using Profile = std::map<PlayerId, ActionId>;

struct History {
  std::vector<Profile> moves;

  size_t length() const { return moves.size(); }
  bool empty() const { return moves.empty(); }
  History Child(const Profile& a) const;
  History Prefix(size_t n) const;

  auto operator<=>(const History&) const = default;
  bool operator==(const History&) const = default;
};

bool IsPrefix(const History& x, const History& y);
bool IsStrictPrefix(const History& x, const History& y);

// Canonical text: profiles joined by '/', a one-entry profile as `p=a`, a
// larger one as `(p=a,q=b)` with entries sorted by player id. The root is
// the empty string.
std::string FormatProfile(const Profile& a);
std::string FormatHistory(const History& h);

struct InfoSet {
  PlayerId owner = 0;
  // Sorted. Duplicates survive only in malformed input so validation can
  // report them.
  std::vector<History> members;

  auto operator<=>(const InfoSet&) const = default;
  bool operator==(const InfoSet&) const = default;
};

std::string FormatInfoSet(const InfoSet& s);

struct RelationSet {
  bool before = false;
  bool simultaneous = false;
  bool after = false;

  bool related() const { return before || simultaneous || after; }
  // The second argument weakly follows the first.
  bool weakly_followed() const { return before || simultaneous; }
  bool operator==(const RelationSet&) const = default;
};

// Immutable structure with derived indices. Any history set can be stored;
// the indices are computed tolerantly so that malformed input can still be
// inspected by the validator.
class Structure {
 public:
  Structure() = default;
  Structure(std::map<PlayerId, std::vector<ActionId>> actions,
            std::vector<History> histories, std::vector<InfoSet> infosets);

  const std::vector<PlayerId>& players() const { return players_; }
  bool HasPlayer(PlayerId i) const { return actions_.count(i) > 0; }
  const std::map<PlayerId, std::vector<ActionId>>& action_sets() const {
    return actions_;
  }
  const std::vector<ActionId>& actions(PlayerId i) const;

  int num_nodes() const { return static_cast<int>(histories_.size()); }
  const std::vector<History>& histories() const { return histories_; }
  const History& history(int n) const { return histories_[n]; }
  int Find(const History& h) const;
  int root() const { return root_; }
  int parent(int n) const { return parent_[n]; }
  const std::vector<int>& children(int n) const { return children_[n]; }
  // One past the last node of the subtree rooted at n; descendants occupy
  // (n, subtree_end(n)).
  int subtree_end(int n) const { return subtree_end_[n]; }
  bool IsStrictAncestor(int a, int b) const {
    return a < b && b < subtree_end_[a];
  }
  bool IsTerminal(int n) const { return children_[n].empty(); }
  int depth(int n) const { return static_cast<int>(histories_[n].length()); }
  const Profile& last_move(int n) const { return histories_[n].moves.back(); }

  const std::vector<PlayerId>& active(int n) const { return active_[n]; }
  bool IsActive(int n, PlayerId i) const;
  // Actions of i seen on edges out of n, sorted.
  const std::vector<ActionId>& feasible(int n, PlayerId i) const;

  const std::vector<int>& terminals() const { return terminals_; }
  int terminal_index(int n) const { return terminal_index_[n]; }
  const Bitset& Z(int n) const { return z_[n]; }
  Bitset ZOf(const std::vector<int>& nodes) const;
  Bitset EmptyTerminalSet() const { return Bitset(terminals_.size()); }

  int num_infosets() const { return static_cast<int>(infosets_.size()); }
  const std::vector<InfoSet>& infosets() const { return infosets_; }
  const InfoSet& infoset(int k) const { return infosets_[k]; }
  PlayerId owner(int k) const { return infosets_[k].owner; }
  // Member node ids, sorted; members missing from the history set are
  // dropped.
  const std::vector<int>& members(int k) const { return member_nodes_[k]; }
  // The information set of player i containing node n, or -1.
  int InfoSetAt(int n, PlayerId i) const;
  int FindInfoSet(const InfoSet& s) const;
  // Throws when s is not an information set of this structure.
  int InfoSetIndex(const InfoSet& s) const;
  std::vector<int> InfoSetsOf(PlayerId i) const;
  // F_i on an information set, read at its first member.
  const std::vector<ActionId>& InfoSetActions(int k) const;
  int InfoSetDepth(int k) const;

  int ChildWith(int n, const Profile& a) const;

  bool operator==(const Structure& o) const {
    return actions_ == o.actions_ && histories_ == o.histories_ &&
           infosets_ == o.infosets_;
  }

 private:
  std::map<PlayerId, std::vector<ActionId>> actions_;
  std::vector<PlayerId> players_;
  std::vector<History> histories_;
  std::vector<InfoSet> infosets_;

  int root_ = -1;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> subtree_end_;
  std::vector<std::vector<PlayerId>> active_;
  std::vector<std::map<PlayerId, std::vector<ActionId>>> feasible_;
  std::vector<int> terminals_;
  std::vector<int> terminal_index_;
  std::vector<Bitset> z_;
  std::vector<std::vector<int>> member_nodes_;
  std::vector<std::vector<std::pair<PlayerId, int>>> infoset_at_;
};

// x is a prefix of y.
bool IsPrefix(const Structure& g, int x, int y);

// Relations between information sets given by index or by value.
RelationSet Relation(const Structure& g, int a, int b);
RelationSet Relation(const Structure& g, const InfoSet& a, const InfoSet& b);

bool TransitivelySimultaneous(const Structure& g, int a, int b);
bool TransitivelySimultaneous(const Structure& g, const InfoSet& a,
                              const InfoSet& b);

// Classes of the transitive closure of simultaneity, each sorted, ordered
// by their smallest information-set index.
std::vector<std::vector<int>> SimClasses(const Structure& g);

}  // namespace egs

#endif  // EGS_CORE_H_
