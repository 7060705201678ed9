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

#ifndef EGS_IO_H_
#define EGS_IO_H_

#include <gmpxx.h>

#include <map>
#include <string>

#include "egs/core.h"

// Text format for structures and games.
//
//   egs 1
//   player 1 actions A,B
//   player 2 actions c,d
//   node "" 1:A|B
//   node "1=A" 2:c|d
//   infoset 1 {""}
//   infoset 2 {"1=A"}
//   payoff "1=B" 1=0 2=1/2
//
// A `node` line declares a non-terminal history with the feasible actions
// of each active player; its children are the product of those lists and
// terminals are implicit. Histories are quoted, slash-separated profiles
// written `p=a` or `(p=a,q=b)`. A bare action name is accepted in place of
// `p=a` when exactly one player owns it. `#` starts a comment.
namespace egs {

class ParseError : public EgsError {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

using Rational = mpq_class;

struct EgsDocument {
  Structure structure;
  // Raw payoff lines keyed by history; checked when a Game is built.
  std::map<History, std::map<PlayerId, Rational>> payoffs;
  bool has_payoffs() const { return !payoffs.empty(); }
};

EgsDocument ParseEgs(const std::string& text);
Structure ParseStructure(const std::string& text);

// Parses one history in the quoted-history syntax, without the quotes.
// `actions` resolves bare action names.
History ParseHistory(const std::string& text,
                     const std::map<PlayerId, std::vector<ActionId>>& actions);

std::string SerializeStructure(const Structure& g);
std::string Serialize(const EgsDocument& doc);

// Rationals print as `p` or `p/q` with q > 0.
std::string FormatRational(const Rational& r);

}  // namespace egs

#endif  // EGS_IO_H_
