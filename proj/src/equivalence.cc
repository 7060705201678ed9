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
#include "egs/transform.h"
#include "egs/validate.h"

namespace egs {

EquivalenceReport BehaviorallyEquivalent(const Structure& a,
                                         const Structure& b,
                                         bool via_minimal) {
  RequireValid(a);
  RequireValid(b);
  EquivalenceReport r;
  if (via_minimal) {
    for (const Structure* g : {&a, &b}) {
      if (auto uo = CheckUo(*g); !uo.ok) {
        throw EgsError("the minimal-form route needs UO; violated by " +
                       FormatInfoSet(g->infoset(uo.witness->first)) + " and " +
                       FormatInfoSet(g->infoset(uo.witness->second)));
      }
    }
  }
  if (a.players() == b.players()) {
    r.witness = RnfIsomorphic(ReducedNormalFormOf(a), ReducedNormalFormOf(b));
  }
  r.equivalent = r.witness.has_value();
  if (via_minimal) {
    r.via_minimal =
        StructureIsomorphic(MinimizeUo(a), MinimizeUo(b)).has_value();
  }
  return r;
}

}  // namespace egs
