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

#ifndef EGS_VALIDATE_H_
#define EGS_VALIDATE_H_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "egs/core.h"

namespace egs {

struct Violation {
  std::string axiom;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool Has(const std::string& axiom) const;
};

// Own (information set index, action) pairs crossed on the way to a history.
struct Experience {
  std::set<std::pair<int, ActionId>> pairs;
  bool operator==(const Experience&) const = default;
};

Experience PlayerExperience(const Structure& g, PlayerId i, int node);
Experience PlayerExperience(const Structure& g, PlayerId i, const History& h);

// Axiom ids, in check order: "root", "prefix closure", "profile" (tree
// shape); "active players", "feasible count", "product closure",
// "partition", "measurability", "disjoint actions", "idle player" (actions
// and partitions); "perfect recall". A stage runs only when every earlier
// stage passed. Within an axiom, violations are listed in history order.
ValidationReport ValidateStructure(const Structure& g);

// Throws EgsError naming the first violation.
void RequireValid(const Structure& g);

struct UoCheck {
  bool ok = true;
  // Indices (a, b), a < b, with a both before and after b.
  std::optional<std::pair<int, int>> witness;
};
UoCheck CheckUo(const Structure& g);

struct VnmCheck {
  bool ok = true;
  std::optional<int> witness;
};
VnmCheck CheckVnm(const Structure& g);

}  // namespace egs

#endif  // EGS_VALIDATE_H_
