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

#ifndef EGS_GENERATE_H_
#define EGS_GENERATE_H_

#include <cstdint>

#include "egs/core.h"
#include "egs/dominance.h"

namespace egs {

struct GenParams {
  int max_depth = 3;
  // Each active player gets between 2 and max_branching actions.
  int max_branching = 2;
  int players = 2;
  // Chance that a non-terminal has two or more active players.
  double simultaneity = 0.25;
  // Chance that an active history joins an existing compatible information
  // set instead of opening a new one.
  double merge = 0.5;
  // Chance that a history above max_depth is terminal; the root never is.
  double stop = 0.3;
  uint64_t seed = 0;
  bool require_uo = false;
  // Also restricts merging to histories of equal length.
  bool require_vnm = false;
  // Sampling attempts before giving up.
  int budget = 1000;
};

// Player p moves with actions named by the p-th lowercase letter and a
// running index: a0, a1, ... for player 1, b0, ... for player 2. Histories
// are only merged when the owner's experience and action count agree, so
// every output has perfect recall. Deterministic per parameters.
Structure GenerateStructure(const GenParams& p);

// Payoffs p/q with |p| <= max_numerator and q in 1..3.
Game RandomGame(const Structure& g, uint64_t seed, int max_numerator = 6);

}  // namespace egs

#endif  // EGS_GENERATE_H_
