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

#ifndef EGS_DOT_H_
#define EGS_DOT_H_

#include <string>

#include "egs/core.h"
#include "egs/dominance.h"

namespace egs {

// Graphviz digraph: node n<id> per history, edges labeled with action
// profiles, and one dashed cluster per information set labeled
// "owner:index" with a 1-based index among the owner's sets. Graphviz draws
// a history shared by several sets inside the first cluster only.
std::string ToDot(const Structure& g);
// Terminals also show their payoff vectors.
std::string ToDot(const Game& g);

}  // namespace egs

#endif  // EGS_DOT_H_
