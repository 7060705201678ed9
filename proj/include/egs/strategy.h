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

#ifndef EGS_STRATEGY_H_
#define EGS_STRATEGY_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "egs/core.h"

namespace egs {

// Plan of action: a partial map from own information sets (by index in the
// structure) to actions, defined exactly on the sets not excluded by the
// owner's earlier choices.
struct Plan {
  PlayerId owner = 0;
  std::map<int, ActionId> choices;

  bool operator==(const Plan&) const = default;
  auto operator<=>(const Plan&) const = default;
};

// Actions of the plan in information-set order, comma separated.
std::string PlanLabel(const Plan& s);

// The own information set preceding k on every path, with the action taken
// there, or nullopt for a minimal set.
std::optional<std::pair<int, ActionId>> OwnPredecessor(const Structure& g,
                                                       int k);

std::vector<Plan> Plans(const Structure& g, PlayerId i);

// `profile` holds one plan per player in players() order.
int Play(const Structure& g, const std::vector<Plan>& profile);

struct ReducedNormalForm {
  std::vector<PlayerId> players;
  std::vector<std::vector<Plan>> strategies;
  int num_terminals = 0;
  // Terminal index per profile; profiles are enumerated in mixed radix with
  // the last player varying fastest.
  std::vector<int> outcome;

  size_t num_profiles() const { return outcome.size(); }
  size_t ProfileIndex(const std::vector<int>& s) const;
  std::vector<int> ProfileAt(size_t index) const;
  std::vector<std::string> Labels(size_t player_pos) const;
};

ReducedNormalForm ReducedNormalFormOf(const Structure& g);

struct RnfIsomorphism {
  // Position of each player of the first form in the second.
  std::vector<int> player_map;
  // Per player of the first form: strategy index in the second.
  std::vector<std::vector<int>> strategy_map;
  std::vector<int> terminal_map;
};

bool VerifyRnfIsomorphism(const ReducedNormalForm& a,
                          const ReducedNormalForm& b,
                          const RnfIsomorphism& m);

// Identity on players unless `permute_players` is set.
std::optional<RnfIsomorphism> RnfIsomorphic(const ReducedNormalForm& a,
                                            const ReducedNormalForm& b,
                                            bool permute_players = false);

struct StructureIsomorphism {
  std::vector<int> node_map;
  std::vector<int> infoset_map;
  // Per player: action of the first structure to action of the second.
  std::map<PlayerId, std::map<ActionId, ActionId>> action_map;
};

// Players map by identity; actions and histories are matched so that the
// tree, the active players and the partitions correspond.
std::optional<StructureIsomorphism> StructureIsomorphic(const Structure& a,
                                                        const Structure& b);

struct EquivalenceReport {
  bool equivalent = false;
  std::optional<RnfIsomorphism> witness;
  // Set only when the minimal-form route ran.
  std::optional<bool> via_minimal;
  bool routes_agree() const {
    return !via_minimal.has_value() || *via_minimal == equivalent;
  }
};

// Decides equivalence by comparing reduced normal forms. With
// `via_minimal`, also minimizes both structures and compares them up to
// isomorphism; both inputs must then satisfy UO.
EquivalenceReport BehaviorallyEquivalent(const Structure& a,
                                         const Structure& b,
                                         bool via_minimal = false);

}  // namespace egs

#endif  // EGS_STRATEGY_H_
