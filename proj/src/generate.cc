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

#include "egs/generate.h"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "egs/validate.h"

namespace egs {

namespace {

using Rng = std::mt19937_64;

// Abstract tree node: actions are indices until information sets are known.
struct Node {
  int parent = -1;
  int depth = 0;
  // Move on the edge from the parent: (player, action index).
  std::map<PlayerId, int> move;
  std::map<PlayerId, int> branching;
  std::vector<int> children;
};

bool Chance(Rng& rng, double p) {
  return std::bernoulli_distribution(std::clamp(p, 0.0, 1.0))(rng);
}

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Node> SampleShape(const GenParams& p, Rng& rng) {
  std::vector<Node> nodes(1);
  for (size_t n = 0; n < nodes.size(); ++n) {
    const int d = nodes[n].depth;
    if (d >= p.max_depth || (d > 0 && Chance(rng, p.stop))) continue;
    std::vector<PlayerId> active;
    if (p.players >= 2 && Chance(rng, p.simultaneity)) {
      std::vector<PlayerId> all;
      for (int i = 1; i <= p.players; ++i) all.push_back(i);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(Uniform(rng, 2, p.players));
      std::sort(all.begin(), all.end());
      active = all;
    } else {
      active = {Uniform(rng, 1, p.players)};
    }
    for (PlayerId i : active) {
      nodes[n].branching[i] = Uniform(rng, 2, std::max(2, p.max_branching));
    }
    // Children in product order, last player fastest.
    std::vector<std::map<PlayerId, int>> moves = {{}};
    for (const auto& [i, b] : nodes[n].branching) {
      std::vector<std::map<PlayerId, int>> next;
      for (const auto& m : moves) {
        for (int a = 0; a < b; ++a) {
          auto x = m;
          x[i] = a;
          next.push_back(std::move(x));
        }
      }
      moves = std::move(next);
    }
    for (auto& m : moves) {
      Node c;
      c.parent = static_cast<int>(n);
      c.depth = d + 1;
      c.move = std::move(m);
      nodes[n].children.push_back(static_cast<int>(nodes.size()));
      nodes.push_back(std::move(c));
    }
  }
  return nodes;
}

std::optional<Structure> Sample(const GenParams& p, Rng& rng) {
  std::vector<Node> nodes = SampleShape(p, rng);
  // Information set id per (node, player), in breadth-first order.
  std::vector<std::map<PlayerId, int>> iset(nodes.size());
  struct Block {
    PlayerId owner;
    int branching;
    int depth;
    std::set<std::pair<int, int>> experience;
    std::vector<int> members;
  };
  std::vector<Block> blocks;
  for (size_t n = 0; n < nodes.size(); ++n) {
    for (const auto& [i, b] : nodes[n].branching) {
      std::set<std::pair<int, int>> x;
      for (int c = static_cast<int>(n); nodes[c].parent >= 0; c = nodes[c].parent) {
        const int a = nodes[c].parent;
        if (nodes[a].branching.count(i)) x.insert({iset[a].at(i), nodes[c].move.at(i)});
      }
      std::vector<int> candidates;
      for (size_t k = 0; k < blocks.size(); ++k) {
        const Block& bl = blocks[k];
        if (bl.owner == i && bl.branching == b && bl.experience == x &&
            (!p.require_vnm || bl.depth == nodes[n].depth)) {
          candidates.push_back(static_cast<int>(k));
        }
      }
      int k;
      if (!candidates.empty() && Chance(rng, p.merge)) {
        k = candidates[Uniform(rng, 0, static_cast<int>(candidates.size()) - 1)];
      } else {
        k = static_cast<int>(blocks.size());
        blocks.push_back({i, b, nodes[n].depth, x, {}});
      }
      blocks[k].members.push_back(static_cast<int>(n));
      iset[n][i] = k;
    }
  }

  std::map<PlayerId, std::vector<ActionId>> actions;
  std::vector<std::vector<ActionId>> names(blocks.size());
  std::map<PlayerId, int> counter;
  for (size_t k = 0; k < blocks.size(); ++k) {
    const PlayerId i = blocks[k].owner;
    const char letter = static_cast<char>('a' + (i - 1) % 26);
    for (int a = 0; a < blocks[k].branching; ++a) {
      names[k].push_back(letter + std::to_string(counter[i]++));
      actions[i].push_back(names[k].back());
    }
  }
  if (static_cast<int>(actions.size()) != p.players) return std::nullopt;

  std::vector<History> histories(nodes.size());
  for (size_t n = 1; n < nodes.size(); ++n) {
    const int a = nodes[n].parent;
    Profile m;
    for (const auto& [i, idx] : nodes[n].move) m[i] = names[iset[a].at(i)][idx];
    histories[n] = histories[a].Child(m);
  }
  std::vector<InfoSet> infosets;
  for (const Block& b : blocks) {
    InfoSet s{b.owner, {}};
    for (int n : b.members) s.members.push_back(histories[n]);
    infosets.push_back(std::move(s));
  }
  Structure g(std::move(actions), std::move(histories), std::move(infosets));
  if (p.require_uo && !CheckUo(g).ok) return std::nullopt;
  if (p.require_vnm && !CheckVnm(g).ok) return std::nullopt;
  return g;
}

}  // namespace

Structure GenerateStructure(const GenParams& p) {
  if (p.players < 1 || p.max_depth < 1 || p.max_branching < 2) {
    throw EgsError("generator needs at least one player, depth 1 and branching 2");
  }
  Rng rng(p.seed);
  for (int attempt = 0; attempt < p.budget; ++attempt) {
    if (auto g = Sample(p, rng)) return *std::move(g);
  }
  throw EgsError("no structure met the constraints within " +
                 std::to_string(p.budget) +
                 " attempts; try fewer players, a larger depth or a lower "
                 "merge probability");
}

Game RandomGame(const Structure& g, uint64_t seed, int max_numerator) {
  Rng rng(seed);
  Game out{g, {}};
  for (size_t j = 0; j < g.players().size(); ++j) {
    std::vector<Rational> v;
    for (size_t z = 0; z < g.terminals().size(); ++z) {
      Rational x(Uniform(rng, -max_numerator, max_numerator), Uniform(rng, 1, 3));
      x.canonicalize();
      v.push_back(x);
    }
    out.payoffs.push_back(std::move(v));
  }
  return out;
}

}  // namespace egs
