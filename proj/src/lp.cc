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

#include "egs/lp.h"

#include <stdexcept>

namespace egs {

namespace {

class Tableau {
 public:
  Tableau(size_t rows, size_t cols)
      : t_(rows, std::vector<mpq_class>(cols + 1)), basis_(rows, -1) {}

  mpq_class& at(size_t r, size_t c) { return t_[r][c]; }
  mpq_class& rhs(size_t r) { return t_[r].back(); }
  size_t rows() const { return t_.size(); }
  size_t cols() const { return t_.empty() ? 0 : t_[0].size() - 1; }
  std::vector<int>& basis() { return basis_; }

  void Pivot(size_t row, size_t col) {
    std::vector<mpq_class>& pr = t_[row];
    const mpq_class p = pr[col];
    for (mpq_class& x : pr) x /= p;
    for (size_t r = 0; r < t_.size(); ++r) {
      if (r == row || t_[r][col] == 0) continue;
      const mpq_class f = t_[r][col];
      for (size_t c = 0; c < pr.size(); ++c) {
        if (pr[c] != 0) t_[r][c] -= f * pr[c];
      }
    }
    basis_[row] = static_cast<int>(col);
  }

  // Maximizes cost.x over the columns allowed to enter. Returns false when
  // unbounded.
  bool Run(const std::vector<mpq_class>& cost, const std::vector<bool>& allowed) {
    const size_t n = cols();
    std::vector<mpq_class> d(cost);
    for (size_t r = 0; r < rows(); ++r) {
      const mpq_class& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (size_t c = 0; c < n; ++c) d[c] -= cb * t_[r][c];
    }
    while (true) {
      size_t enter = n;
      for (size_t c = 0; c < n; ++c) {
        if (allowed[c] && d[c] > 0) {
          enter = c;
          break;
        }
      }
      if (enter == n) return true;
      size_t leave = rows();
      mpq_class best;
      for (size_t r = 0; r < rows(); ++r) {
        if (t_[r][enter] <= 0) continue;
        mpq_class ratio = t_[r].back() / t_[r][enter];
        if (leave == rows() || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      Pivot(leave, enter);
      const mpq_class f = d[enter];
      for (size_t c = 0; c < n; ++c) {
        if (t_[leave][c] != 0) d[c] -= f * t_[leave][c];
      }
    }
  }

 private:
  std::vector<std::vector<mpq_class>> t_;
  std::vector<int> basis_;
};

}  // namespace

LpResult SolveLp(const LinearProgram& lp) {
  const size_t m = lp.a.size();
  const size_t n = lp.c.size();
  if (lp.sense.size() != m || lp.b.size() != m) {
    throw std::invalid_argument("linear program rows are inconsistent");
  }
  // Rows are normalized to a non-negative right-hand side.
  std::vector<Sense> sense = lp.sense;
  std::vector<int> sign(m, 1);
  for (size_t r = 0; r < m; ++r) {
    if (lp.a[r].size() != n) {
      throw std::invalid_argument("linear program row has the wrong width");
    }
    if (lp.b[r] < 0) {
      sign[r] = -1;
      if (sense[r] == Sense::kLe) {
        sense[r] = Sense::kGe;
      } else if (sense[r] == Sense::kGe) {
        sense[r] = Sense::kLe;
      }
    }
  }
  size_t slacks = 0, artificials = 0;
  for (Sense s : sense) {
    if (s != Sense::kEq) ++slacks;
    if (s != Sense::kLe) ++artificials;
  }
  const size_t total = n + slacks + artificials;
  Tableau t(m, total);
  size_t next_slack = n, next_art = n + slacks;
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < n; ++c) t.at(r, c) = sign[r] * lp.a[r][c];
    t.rhs(r) = sign[r] * lp.b[r];
    if (sense[r] == Sense::kLe) {
      t.at(r, next_slack) = 1;
      t.basis()[r] = static_cast<int>(next_slack++);
    } else {
      if (sense[r] == Sense::kGe) t.at(r, next_slack++) = -1;
      t.at(r, next_art) = 1;
      t.basis()[r] = static_cast<int>(next_art++);
    }
  }

  LpResult res;
  std::vector<bool> allowed(total, true);
  if (artificials > 0) {
    std::vector<mpq_class> cost(total);
    for (size_t c = n + slacks; c < total; ++c) cost[c] = -1;
    t.Run(cost, allowed);
    mpq_class infeas;
    for (size_t r = 0; r < m; ++r) {
      if (t.basis()[r] >= static_cast<int>(n + slacks)) infeas += t.rhs(r);
    }
    if (infeas != 0) return res;
    for (size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < static_cast<int>(n + slacks)) continue;
      for (size_t c = 0; c < n + slacks; ++c) {
        if (t.at(r, c) != 0) {
          t.Pivot(r, c);
          break;
        }
      }
    }
    for (size_t c = n + slacks; c < total; ++c) allowed[c] = false;
  }
  std::vector<mpq_class> cost(total);
  for (size_t c = 0; c < n; ++c) cost[c] = lp.c[c];
  if (!t.Run(cost, allowed)) {
    res.status = LpResult::Status::kUnbounded;
    return res;
  }
  res.status = LpResult::Status::kOptimal;
  res.x.assign(n, 0);
  for (size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < static_cast<int>(n)) res.x[t.basis()[r]] = t.rhs(r);
  }
  for (size_t c = 0; c < n; ++c) res.value += lp.c[c] * res.x[c];
  return res;
}

}  // namespace egs
