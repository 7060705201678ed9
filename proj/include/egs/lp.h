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

#ifndef EGS_LP_H_
#define EGS_LP_H_

#include <gmpxx.h>

#include <vector>

// Exact linear programming over the rationals: dense two-phase simplex with
// Bland's pivoting rule.
namespace egs {

enum class Sense { kLe, kEq, kGe };

// maximize c.x subject to a[r].x (sense[r]) b[r] for every row, x >= 0.
struct LinearProgram {
  std::vector<std::vector<mpq_class>> a;
  std::vector<Sense> sense;
  std::vector<mpq_class> b;
  std::vector<mpq_class> c;

  void AddRow(std::vector<mpq_class> row, Sense s, mpq_class rhs) {
    a.push_back(std::move(row));
    sense.push_back(s);
    b.push_back(std::move(rhs));
  }
};

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  mpq_class value;
  std::vector<mpq_class> x;

  bool optimal() const { return status == Status::kOptimal; }
};

LpResult SolveLp(const LinearProgram& lp);

}  // namespace egs

#endif  // EGS_LP_H_
