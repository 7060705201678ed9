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

#ifndef EGS_TRANSFORM_H_
#define EGS_TRANSFORM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "egs/core.h"

namespace egs {

// Merge of `mover` into the own information set `base` that it controls
// through `link`.
struct CoalescingOpp {
  InfoSet base;
  InfoSet mover;
  ActionId link;

  PlayerId owner() const { return base.owner; }
  bool operator==(const CoalescingOpp&) const = default;
};

// Shift of `submover`, a part of `mover`, up to the opponent history
// `anchor` whose terminal set it covers.
struct IsOpp {
  History anchor;
  std::vector<History> submover;
  InfoSet mover;

  PlayerId owner() const { return mover.owner; }
  bool operator==(const IsOpp&) const = default;
};

std::string Describe(const CoalescingOpp& o);
std::string Describe(const IsOpp& o);

// Correspondence between the nodes of a structure and those of its image.
struct HistoryMap {
  // Old node -> new nodes, sorted.
  std::vector<std::vector<int>> forward;
  // Old information-set index -> new index. A coalesced mover maps to its
  // base.
  std::vector<int> infoset_map;
  // Mover (or sub-mover) node -> the new nodes where its owner now decides.
  std::map<int, std::vector<int>> mover_lift;

  static HistoryMap Identity(const Structure& g);
  // New terminal index per old terminal index; throws when the forward map
  // is not a bijection on terminals.
  std::vector<int> TerminalMap(const Structure& before,
                               const Structure& after) const;
};

// `second` applied after `first`.
HistoryMap Compose(const HistoryMap& first, const HistoryMap& second);

struct Transformed {
  Structure structure;
  HistoryMap map;
};

// The link action of base to a controlling mover, if any.
std::optional<ActionId> Controls(const Structure& g, const InfoSet& base,
                                 const InfoSet& mover);

// Whether `candidate`, a subset of one information set of `owner`, covers
// exactly the terminals below `anchor`.
bool Dictates(const Structure& g, const History& anchor, PlayerId owner,
              const std::vector<History>& candidate);

// Ordered by (owner, base members, mover members).
std::vector<CoalescingOpp> FindCoalescing(const Structure& g);
Transformed ApplyCoalescing(const Structure& g, const CoalescingOpp& opp);

// Ordered by (owner, mover members, anchor).
std::vector<IsOpp> FindIs(const Structure& g);
// False when some information set has a history strictly below the anchor
// and at or above a sub-mover history while another part of the mover
// still follows it.
bool IsNonCrossing(const Structure& g, const IsOpp& opp);
// Crossing opportunities are accepted here.
Transformed ApplyIs(const Structure& g, const IsOpp& opp);

// Re-expresses an opportunity of the structure before `map` in the
// structure after it. An IS part whose anchor was replicated splits into
// one part per replica. Throws when the opportunity no longer holds.
CoalescingOpp RelocateCoalescing(const Structure& after, const HistoryMap& map,
                                 const CoalescingOpp& opp,
                                 const Structure& before);
std::vector<IsOpp> RelocateIs(const Structure& after, const HistoryMap& map,
                              const IsOpp& opp, const Structure& before);

// Applies the IS parts and then the coalescings, each one relocated
// through the steps taken before it.
Transformed ApplySequence(const Structure& g, std::vector<IsOpp> is_parts,
                          std::vector<CoalescingOpp> coalescings);

// Applies coalescings and IS steps that keep UO until none is left. With a
// seed, every step picks uniformly among the available ones.
Structure MinimizeUo(const Structure& g,
                     std::optional<uint64_t> seed = std::nullopt);

// A bundle of coalescing and IS parts.
struct Ico {
  std::vector<CoalescingOpp> coalescings;
  std::vector<IsOpp> is_parts;

  bool empty() const { return coalescings.empty() && is_parts.empty(); }
  bool operator==(const Ico&) const = default;
};

std::string Describe(const Ico& t);

bool IsImmediate(const Structure& g, const CoalescingOpp& opp);
bool IsImmediate(const Structure& g, const IsOpp& opp);

struct IcoCheck {
  bool ico = false;
  bool complete = false;
  // Why the bundle fails, empty when complete.
  std::string reason;
};
IcoCheck CheckIco(const Structure& g, const Ico& t);

// Complete bundles per class of transitively simultaneous information
// sets, classes in SimClasses order; within a class larger IS selections
// come first.
std::vector<Ico> FindCompleteIcos(const Structure& g);
// Complete bundles whose movers lie in the given class; `limit` > 0 stops
// after that many.
std::vector<Ico> FindCompleteIcosIn(const Structure& g,
                                    const std::vector<int>& sim_class,
                                    size_t limit = 0);

// IS parts in order, then coalescings in order. Without `require_complete`
// the bundle only has to consist of valid opportunities.
Transformed ApplyTau(const Structure& g, const Ico& t,
                     bool require_complete = true);

struct Compaction {
  Structure structure;
  std::vector<Ico> schedule;
  HistoryMap map;
};
Compaction BackwardCompactify(const Structure& g);

// Shift of every member of `mover` up to the equal-length histories in
// `anchors`, which partition it by their subtrees.
struct CompleteControl {
  std::vector<History> anchors;
  InfoSet mover;

  bool operator==(const CompleteControl&) const = default;
};

struct SynthOpp {
  std::vector<CoalescingOpp> coalescings;
  std::vector<CompleteControl> complete_controls;

  bool operator==(const SynthOpp&) const = default;
};

std::string Describe(const SynthOpp& s);

// Candidate moves for synthesized bundles, coalescings first.
struct SynthMoves {
  std::vector<CoalescingOpp> coalescings;
  std::vector<CompleteControl> complete_controls;
};
SynthMoves FindSynthMoves(const Structure& g);

// Every valid bundle, ordered by size and then by move index. Requires a
// vNM structure.
std::vector<SynthOpp> FindSynthesized(const Structure& g);
bool IsSynthesized(const Structure& g, const SynthOpp& s);
// Complete controls first, then coalescings.
Transformed ApplyPhi(const Structure& g, const SynthOpp& s);

}  // namespace egs

#endif  // EGS_TRANSFORM_H_
