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

#ifndef EGS_DOMINANCE_H_
#define EGS_DOMINANCE_H_

#include <string>
#include <vector>

#include "egs/core.h"
#include "egs/io.h"
#include "egs/strategy.h"
#include "egs/transform.h"

namespace egs {

struct Game {
  Structure structure;
  // payoffs[player position][terminal index].
  std::vector<std::vector<Rational>> payoffs;
};

// Every terminal needs a payoff for every player; payoffs at non-terminal
// histories are rejected.
Game MakeGame(const EgsDocument& doc);
EgsDocument ToDocument(const Game& g);

// Strategies are indices into the reduced normal form of the game.
struct DecisionProblem {
  int infoset = -1;
  size_t owner_pos = 0;
  std::vector<int> own;
  // Opponent profiles, full length with the owner's slot set to -1, sorted.
  std::vector<std::vector<int>> others;

  bool operator==(const DecisionProblem&) const = default;
};

// The payoff matrix a decision problem induces for its owner.
struct Matrix {
  // rows[own index][column index].
  std::vector<std::vector<Rational>> rows;
};

// Game plus its reduced normal form, computed once.
class SolvedForm {
 public:
  explicit SolvedForm(Game g);
  const Game& game() const { return game_; }
  const ReducedNormalForm& rnf() const { return rnf_; }
  const Rational& Utility(size_t player_pos, const std::vector<int>& s) const {
    return game_.payoffs[player_pos][rnf_.outcome[rnf_.ProfileIndex(s)]];
  }
  Matrix MatrixOf(const DecisionProblem& p) const;

 private:
  Game game_;
  ReducedNormalForm rnf_;
};

// Initial decision problem at information set k: projections of the
// profiles whose outcome lies below k.
DecisionProblem Reaching(const SolvedForm& f, int k);
// Profiles reaching k, unprojected.
std::vector<std::vector<int>> ReachingProfiles(const SolvedForm& f, int k);

// Rows of `m` strictly dominated by a mixture of rows. An empty column set
// dominates nothing.
std::vector<int> StrictlyDominatedRows(const Matrix& m);
// The dominated members of p.own.
std::vector<int> StrictlyDominated(const DecisionProblem& p, const SolvedForm& f);

struct BdTrace {
  // rounds[n][k] is the decision problem at information set k after n
  // elimination rounds; the last two rounds are equal.
  std::vector<std::vector<DecisionProblem>> rounds;
  // Per player position: surviving strategy indices.
  std::vector<std::vector<int>> survivors;
  // Per player position and strategy: the first round in which it left the
  // root decision problems, or -1 for survivors.
  std::vector<std::vector<int>> eliminated_in;
};

// Requires UO.
BdTrace Bd(const SolvedForm& f);
std::string FormatTrace(const SolvedForm& f, const BdTrace& t);

// Payoffs carried to a transformed structure through its terminal map.
Game TransportGame(const Game& g, const Transformed& t);

// Per player position: strategy index in `after` for each strategy of
// `before`, matched by the terminals each plan leaves possible. Throws when
// no consistent bijection exists or the outcome map does not commute.
std::vector<std::vector<int>> TransportPlans(const SolvedForm& before,
                                             const SolvedForm& after,
                                             const std::vector<int>& terminal_map);

struct MonotonicityViolation {
  size_t player_pos = 0;
  std::string plan;
  // Round in which the plan was eliminated before the transformation.
  int round = 0;
};

struct MonotonicityReport {
  std::vector<MonotonicityViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Every plan eliminated in `before` must be eliminated in `after`.
MonotonicityReport CompareBd(const SolvedForm& before, const BdTrace& tb,
                             const SolvedForm& after, const BdTrace& ta,
                             const std::vector<std::vector<int>>& plan_map);

// Runs BD before and after the transformation and compares.
MonotonicityReport CheckTransformMonotonic(const Game& g, const Transformed& t);
MonotonicityReport CheckMonotonic(const Game& g, const Ico& t);

}  // namespace egs

#endif  // EGS_DOMINANCE_H_
