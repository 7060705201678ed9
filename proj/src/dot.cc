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

#include "egs/dot.h"

#include <map>
#include <sstream>

#include "egs/io.h"

namespace egs {

namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string Emit(const Structure& g, const Game* game) {
  std::ostringstream out;
  out << "digraph egs {\n  node [shape=circle];\n";
  for (int n = 0; n < g.num_nodes(); ++n) {
    std::string label = n == g.root() ? "root" : FormatHistory(g.history(n));
    out << "  n" << n << " [label=";
    if (g.IsTerminal(n)) {
      if (game != nullptr) {
        label += "\\n(";
        for (size_t j = 0; j < game->payoffs.size(); ++j) {
          label += (j ? "," : "") +
                   FormatRational(game->payoffs[j][g.terminal_index(n)]);
        }
        label += ")";
      }
      out << Quote(label) << ", shape=box];\n";
    } else {
      out << Quote(label) << "];\n";
    }
  }
  for (int n = 0; n < g.num_nodes(); ++n) {
    for (int c : g.children(n)) {
      out << "  n" << n << " -> n" << c
          << " [label=" << Quote(FormatProfile(g.last_move(c))) << "];\n";
    }
  }
  std::map<PlayerId, int> index;
  for (int k = 0; k < g.num_infosets(); ++k) {
    const int idx = ++index[g.owner(k)];
    out << "  subgraph cluster_" << k << " {\n"
        << "    style=dashed;\n"
        << "    label=" << Quote(std::to_string(g.owner(k)) + ":" + std::to_string(idx))
        << ";\n   ";
    for (int n : g.members(k)) out << " n" << n << ";";
    out << "\n  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string ToDot(const Structure& g) { return Emit(g, nullptr); }

std::string ToDot(const Game& g) { return Emit(g.structure, &g); }

}  // namespace egs
