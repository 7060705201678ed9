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

#include "egs/dominance.h"

#include <algorithm>
#include <map>
#include <set>

#include "egs/lp.h"
#include "egs/validate.h"

namespace egs {

namespace {

size_t PlayerPos(const Structure& g, PlayerId p) {
  const auto& ps = g.players();
  return std::lower_bound(ps.begin(), ps.end(), p) - ps.begin();
}

std::vector<int> Survivors(const DecisionProblem& p, size_t j) {
  std::set<int> out;
  if (j == p.owner_pos) {
    if (p.others.empty()) return {};
    out.insert(p.own.begin(), p.own.end());
  } else if (!p.own.empty()) {
    for (const auto& s : p.others) out.insert(s[j]);
  }
  return {out.begin(), out.end()};
}

bool Contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<int> PlayerTerminals(const Structure& g, const Plan& s,
                                 size_t num_terminals) {
  std::vector<int> out;
  for (size_t z = 0; z < num_terminals; ++z) {
    Experience x = PlayerExperience(g, s.owner, g.terminals()[z]);
    bool ok = true;
    for (const auto& [k, a] : x.pairs) {
      auto it = s.choices.find(k);
      ok = ok && it != s.choices.end() && it->second == a;
    }
    if (ok) out.push_back(static_cast<int>(z));
  }
  return out;
}

}  // namespace

Game MakeGame(const EgsDocument& doc) {
  Game g{doc.structure, {}};
  const Structure& s = g.structure;
  RequireValid(s);
  const size_t nz = s.terminals().size();
  g.payoffs.assign(s.players().size(), std::vector<Rational>(nz));
  std::vector<std::vector<bool>> seen(s.players().size(), std::vector<bool>(nz));
  for (const auto& [h, row] : doc.payoffs) {
    int v = s.Find(h);
    if (v < 0 || !s.IsTerminal(v)) {
      throw EgsError("payoff at non-terminal \"" + FormatHistory(h) + "\"");
    }
    for (const auto& [p, x] : row) {
      if (!s.HasPlayer(p)) throw EgsError("payoff for unknown player " + std::to_string(p));
      size_t pos = PlayerPos(s, p);
      g.payoffs[pos][s.terminal_index(v)] = x;
      seen[pos][s.terminal_index(v)] = true;
    }
  }
  for (size_t pos = 0; pos < seen.size(); ++pos) {
    for (size_t z = 0; z < nz; ++z) {
      if (!seen[pos][z]) {
        throw EgsError("missing payoff for player " +
                       std::to_string(s.players()[pos]) + " at \"" +
                       FormatHistory(s.history(s.terminals()[z])) + "\"");
      }
    }
  }
  return g;
}

EgsDocument ToDocument(const Game& g) {
  EgsDocument doc{g.structure, {}};
  const Structure& s = g.structure;
  for (size_t z = 0; z < s.terminals().size(); ++z) {
    auto& row = doc.payoffs[s.history(s.terminals()[z])];
    for (size_t pos = 0; pos < s.players().size(); ++pos) {
      row[s.players()[pos]] = g.payoffs[pos][z];
    }
  }
  return doc;
}

SolvedForm::SolvedForm(Game g)
    : game_(std::move(g)), rnf_(ReducedNormalFormOf(game_.structure)) {}

Matrix SolvedForm::MatrixOf(const DecisionProblem& p) const {
  Matrix m;
  for (int k : p.own) {
    std::vector<Rational> row;
    for (std::vector<int> s : p.others) {
      s[p.owner_pos] = k;
      row.push_back(Utility(p.owner_pos, s));
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::vector<std::vector<int>> ReachingProfiles(const SolvedForm& f, int k) {
  const Structure& g = f.game().structure;
  if (k < 0 || k >= g.num_infosets()) throw EgsError("unknown information set");
  const Bitset z = g.ZOf(g.members(k));
  std::vector<std::vector<int>> out;
  const ReducedNormalForm& r = f.rnf();
  for (size_t idx = 0; idx < r.num_profiles(); ++idx) {
    if (z.Test(r.outcome[idx])) out.push_back(r.ProfileAt(idx));
  }
  return out;
}

DecisionProblem Reaching(const SolvedForm& f, int k) {
  const Structure& g = f.game().structure;
  DecisionProblem p;
  p.infoset = k;
  p.owner_pos = PlayerPos(g, g.owner(k));
  std::set<int> own;
  std::set<std::vector<int>> others;
  for (std::vector<int> s : ReachingProfiles(f, k)) {
    own.insert(s[p.owner_pos]);
    s[p.owner_pos] = -1;
    others.insert(std::move(s));
  }
  p.own.assign(own.begin(), own.end());
  p.others.assign(others.begin(), others.end());
  return p;
}

std::vector<int> StrictlyDominatedRows(const Matrix& m) {
  std::vector<int> out;
  const size_t rows = m.rows.size();
  if (rows < 2 || m.rows[0].empty()) return out;
  const size_t cols = m.rows[0].size();
  std::vector<Rational> colmax(cols);
  for (size_t s = 0; s < cols; ++s) {
    colmax[s] = m.rows[0][s];
    for (size_t k = 1; k < rows; ++k) colmax[s] = std::max(colmax[s], m.rows[k][s]);
  }
  for (size_t c = 0; c < rows; ++c) {
    bool attains = false;
    for (size_t s = 0; s < cols && !attains; ++s) attains = m.rows[c][s] == colmax[s];
    if (attains) continue;
    bool pure = false;
    for (size_t k = 0; k < rows && !pure; ++k) {
      bool all = true;
      for (size_t s = 0; s < cols && all; ++s) all = m.rows[k][s] > m.rows[c][s];
      pure = all;
    }
    if (pure) {
      out.push_back(static_cast<int>(c));
      continue;
    }
    // Variables: mixture weights, then the slack split into e1 - e2.
    LinearProgram lp;
    lp.c.assign(rows + 2, 0);
    lp.c[rows] = 1;
    lp.c[rows + 1] = -1;
    for (size_t s = 0; s < cols; ++s) {
      std::vector<Rational> row(rows + 2);
      for (size_t k = 0; k < rows; ++k) row[k] = m.rows[k][s];
      row[rows] = -1;
      row[rows + 1] = 1;
      lp.AddRow(std::move(row), Sense::kGe, m.rows[c][s]);
    }
    std::vector<Rational> simplex(rows + 2);
    for (size_t k = 0; k < rows; ++k) simplex[k] = 1;
    lp.AddRow(std::move(simplex), Sense::kEq, 1);
    LpResult res = SolveLp(lp);
    if (res.optimal() && res.value > 0) out.push_back(static_cast<int>(c));
  }
  return out;
}

std::vector<int> StrictlyDominated(const DecisionProblem& p, const SolvedForm& f) {
  if (p.others.empty()) return {};
  std::vector<int> out;
  for (int r : StrictlyDominatedRows(f.MatrixOf(p))) out.push_back(p.own[r]);
  return out;
}

BdTrace Bd(const SolvedForm& f) {
  const Structure& g = f.game().structure;
  if (auto uo = CheckUo(g); !uo.ok) {
    throw EgsError("backward dominance needs UO; violated by " +
                   FormatInfoSet(g.infoset(uo.witness->first)) + " and " +
                   FormatInfoSet(g.infoset(uo.witness->second)));
  }
  const int n = g.num_infosets();
  std::vector<std::vector<int>> follow(n);
  for (int h = 0; h < n; ++h) {
    for (int x = 0; x < n; ++x) {
      if (Relation(g, h, x).weakly_followed()) follow[h].push_back(x);
    }
  }
  BdTrace t;
  std::vector<DecisionProblem> cur;
  for (int k = 0; k < n; ++k) cur.push_back(Reaching(f, k));
  t.rounds.push_back(cur);
  while (true) {
    std::vector<std::vector<int>> sd(n);
    for (int k = 0; k < n; ++k) sd[k] = StrictlyDominated(cur[k], f);
    std::vector<DecisionProblem> next = cur;
    for (int h = 0; h < n; ++h) {
      DecisionProblem& p = next[h];
      for (int x : follow[h]) {
        if (sd[x].empty()) continue;
        const size_t j = cur[x].owner_pos;
        if (j == p.owner_pos) {
          std::erase_if(p.own, [&](int s) { return Contains(sd[x], s); });
        } else {
          std::erase_if(p.others, [&](const std::vector<int>& s) {
            return Contains(sd[x], s[j]);
          });
        }
      }
    }
    t.rounds.push_back(next);
    if (next == cur) break;
    cur = std::move(next);
  }

  std::vector<int> roots;
  for (int k = 0; k < n; ++k) {
    const auto& ms = g.members(k);
    if (!ms.empty() && ms.front() == g.root()) roots.push_back(k);
  }
  if (roots.empty()) throw EgsError("no information set contains the root");
  const size_t np = g.players().size();
  auto at_root = [&](const std::vector<DecisionProblem>& round) {
    std::vector<std::vector<int>> s(np);
    for (size_t j = 0; j < np; ++j) s[j] = Survivors(round[roots.front()], j);
    for (int k : roots) {
      for (size_t j = 0; j < np; ++j) {
        if (Survivors(round[k], j) != s[j]) {
          throw EgsError("root decision problems disagree on survivors");
        }
      }
    }
    return s;
  };
  t.survivors = at_root(t.rounds.back());
  t.eliminated_in.resize(np);
  for (size_t j = 0; j < np; ++j) {
    t.eliminated_in[j].assign(f.rnf().strategies[j].size(), -1);
  }
  for (size_t r = 0; r < t.rounds.size(); ++r) {
    auto s = at_root(t.rounds[r]);
    for (size_t j = 0; j < np; ++j) {
      for (size_t x = 0; x < t.eliminated_in[j].size(); ++x) {
        if (t.eliminated_in[j][x] < 0 && !Contains(s[j], static_cast<int>(x))) {
          t.eliminated_in[j][x] = static_cast<int>(r);
        }
      }
    }
  }
  return t;
}

std::string FormatTrace(const SolvedForm& f, const BdTrace& t) {
  const Structure& g = f.game().structure;
  const ReducedNormalForm& r = f.rnf();
  auto labels = [&](size_t j, const std::vector<int>& xs) {
    std::string out = "{";
    for (size_t a = 0; a < xs.size(); ++a) {
      out += (a ? " " : "") + PlanLabel(r.strategies[j][xs[a]]);
    }
    return out + "}";
  };
  std::string out;
  for (size_t n = 0; n < t.rounds.size(); ++n) {
    out += "round " + std::to_string(n) + "\n";
    for (const DecisionProblem& p : t.rounds[n]) {
      out += "  " + FormatInfoSet(g.infoset(p.infoset)) + " own " +
             labels(p.owner_pos, p.own) + " opponents " +
             std::to_string(p.others.size()) + "\n";
    }
  }
  for (size_t j = 0; j < t.survivors.size(); ++j) {
    out += "survivors " + std::to_string(g.players()[j]) + " " +
           labels(j, t.survivors[j]) + "\n";
  }
  return out;
}

Game TransportGame(const Game& g, const Transformed& t) {
  std::vector<int> rho = t.map.TerminalMap(g.structure, t.structure);
  Game out{t.structure, g.payoffs};
  for (size_t j = 0; j < g.payoffs.size(); ++j) {
    for (size_t z = 0; z < rho.size(); ++z) out.payoffs[j][rho[z]] = g.payoffs[j][z];
  }
  return out;
}

std::vector<std::vector<int>> TransportPlans(const SolvedForm& before,
                                             const SolvedForm& after,
                                             const std::vector<int>& rho) {
  const Structure& gb = before.game().structure;
  const Structure& ga = after.game().structure;
  const ReducedNormalForm& rb = before.rnf();
  const ReducedNormalForm& ra = after.rnf();
  if (rb.players != ra.players) throw EgsError("player sets differ");
  std::vector<std::vector<int>> out(rb.players.size());
  for (size_t j = 0; j < rb.players.size(); ++j) {
    std::map<std::vector<int>, int> index;
    for (size_t s = 0; s < ra.strategies[j].size(); ++s) {
      index[PlayerTerminals(ga, ra.strategies[j][s], ra.num_terminals)] =
          static_cast<int>(s);
    }
    if (index.size() != ra.strategies[j].size() ||
        ra.strategies[j].size() != rb.strategies[j].size()) {
      throw EgsError("plans do not correspond");
    }
    for (const Plan& s : rb.strategies[j]) {
      std::vector<int> zs;
      for (int z : PlayerTerminals(gb, s, rb.num_terminals)) zs.push_back(rho[z]);
      std::sort(zs.begin(), zs.end());
      auto it = index.find(zs);
      if (it == index.end()) throw EgsError("plan " + PlanLabel(s) + " has no image");
      out[j].push_back(it->second);
    }
  }
  std::vector<int> t(rb.players.size());
  for (size_t idx = 0; idx < rb.num_profiles(); ++idx) {
    std::vector<int> s = rb.ProfileAt(idx);
    for (size_t j = 0; j < s.size(); ++j) t[j] = out[j][s[j]];
    if (ra.outcome[ra.ProfileIndex(t)] != rho[rb.outcome[idx]]) {
      throw EgsError("plan transport does not commute with outcomes");
    }
  }
  return out;
}

MonotonicityReport CompareBd(const SolvedForm& before, const BdTrace& tb,
                             const SolvedForm& after, const BdTrace& ta,
                             const std::vector<std::vector<int>>& plan_map) {
  (void)after;
  MonotonicityReport r;
  for (size_t j = 0; j < plan_map.size(); ++j) {
    for (size_t s = 0; s < plan_map[j].size(); ++s) {
      if (Contains(tb.survivors[j], static_cast<int>(s))) continue;
      if (Contains(ta.survivors[j], plan_map[j][s])) {
        r.violations.push_back({j, PlanLabel(before.rnf().strategies[j][s]),
                                tb.eliminated_in[j][s]});
      }
    }
  }
  return r;
}

MonotonicityReport CheckTransformMonotonic(const Game& g, const Transformed& t) {
  SolvedForm fb(g);
  SolvedForm fa(TransportGame(g, t));
  std::vector<int> rho = t.map.TerminalMap(g.structure, t.structure);
  auto plans = TransportPlans(fb, fa, rho);
  return CompareBd(fb, Bd(fb), fa, Bd(fa), plans);
}

MonotonicityReport CheckMonotonic(const Game& g, const Ico& t) {
  if (t.empty()) return {};
  return CheckTransformMonotonic(g, ApplyTau(g.structure, t));
}

}  // namespace egs
