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

#ifndef EGS_TESTS_FIXTURES_H_
#define EGS_TESTS_FIXTURES_H_

#include <algorithm>
#include <string>
#include <vector>

#include "egs/core.h"
#include "egs/dominance.h"
#include "egs/io.h"

namespace egs::fixtures {

// Player 1 picks A, O or B; after A players 1 and 2 move together, after O
// or B player 2 moves without knowing which.
inline const char kRed1[] = R"egs(egs 1
player 1 actions A,O,B,E,F
player 2 actions c,d,h,i
node "" 1:A|O|B
node "1=A" 1:E|F 2:c|d
node "1=O" 2:h|i
node "1=B" 2:h|i
infoset 1 {""}
infoset 1 {"1=A"}
infoset 2 {"1=A"}
infoset 2 {"1=O","1=B"}
)egs";

// kRed1 with player 1's second set merged into the first.
inline const char kRed2[] = R"egs(egs 1
player 1 actions A,B,E,F,O
player 2 actions c,d,h,i
node "" 1:B|E|F|O
node "1=B" 2:h|i
node "1=E" 2:c|d
node "1=F" 2:c|d
node "1=O" 2:h|i
infoset 1 {""}
infoset 2 {"1=B","1=O"}
infoset 2 {"1=E","1=F"}
)egs";

inline const char kChain[] = R"egs(egs 1
player 1 actions L,R
player 2 actions a,b
node "" 1:L|R
node "1=L" 2:a|b
infoset 1 {""}
infoset 2 {"1=L"}
)egs";

// kChain with both decisions owned by player 1.
inline const char kChainSolo[] = R"egs(egs 1
player 1 actions L,R,a,b
node "" 1:L|R
node "1=L" 1:a|b
infoset 1 {""}
infoset 1 {"1=L"}
)egs";

inline const char kSim[] = R"egs(egs 1
player 1 actions A,B
player 2 actions c,d
node "" 1:A|B 2:c|d
infoset 1 {""}
infoset 2 {""}
)egs";

// Player 3 moves with player 2 after L and with player 4 after R.
inline const char kSim3[] = R"egs(egs 1
player 1 actions L,R
player 2 actions a,b
player 3 actions c,d
player 4 actions e,f
node "" 1:L|R
node "1=L" 2:a|b 3:c|d
node "1=R" 3:c|d 4:e|f
infoset 1 {""}
infoset 2 {"1=L"}
infoset 3 {"1=L","1=R"}
infoset 4 {"1=R"}
)egs";

// Players 2 and 3 move in either order or together, unaware of which.
inline const char kEnt[] = R"egs(egs 1
player 1 actions L,M,R
player 2 actions a,b
player 3 actions c,d
node "" 1:L|M|R
node "1=L" 2:a|b
node "1=L/2=a" 3:c|d
node "1=M" 2:a|b 3:c|d
node "1=R" 3:c|d
node "1=R/3=c" 2:a|b
infoset 1 {""}
infoset 2 {"1=L","1=M","1=R/3=c"}
infoset 3 {"1=L/2=a","1=M","1=R"}
)egs";

// Two information sets each following the other.
inline const char kBeforeAfter[] = R"egs(egs 1
player 1 actions L,R
player 2 actions a,b
player 3 actions c,d
node "" 1:L|R
node "1=L" 2:a|b
node "1=L/2=a" 3:c|d
node "1=L/2=b" 3:c|d
node "1=R" 3:c|d
node "1=R/3=c" 2:a|b
node "1=R/3=d" 2:a|b
infoset 1 {""}
infoset 2 {"1=L","1=R/3=c","1=R/3=d"}
infoset 3 {"1=L/2=a","1=L/2=b","1=R"}
)egs";

// A player's set containing a history and its own successor.
inline const char kAbsentMinded[] = R"egs(egs 1
player 1 actions E,C
node "" 1:E|C
node "1=C" 1:E|C
infoset 1 {"","1=C"}
)egs";

// Player 2 decides at R and again, together with player 3, after b.
inline const char kCoalesce[] = R"egs(egs 1
player 1 actions L,R,v,w
player 2 actions a,b,p,q
player 3 actions H,K
node "" 1:L|R
node "1=R" 2:a|b
node "1=R/2=b" 2:p|q 3:H|K
node "1=R/2=b/(2=q,3=H)" 1:v|w
infoset 1 {""}
infoset 1 {"1=R/2=b/(2=q,3=H)"}
infoset 2 {"1=R"}
infoset 2 {"1=R/2=b"}
infoset 3 {"1=R/2=b"}
)egs";

// Player 4 moves last everywhere; player 3's set spans A and B/d.
inline const char kNc[] = R"egs(egs 1
player 1 actions A,B
player 2 actions c,d,E,F
player 3 actions g,h
player 4 actions x,y
node "" 1:A|B
node "1=A" 3:g|h
node "1=A/3=g" 4:x|y
node "1=A/3=h" 4:x|y
node "1=B" 2:c|d
node "1=B/2=c" 2:E|F
node "1=B/2=c/2=E" 4:x|y
node "1=B/2=c/2=F" 4:x|y
node "1=B/2=d" 3:g|h
node "1=B/2=d/3=g" 4:x|y
node "1=B/2=d/3=h" 4:x|y
infoset 1 {""}
infoset 2 {"1=B"}
infoset 2 {"1=B/2=c"}
infoset 3 {"1=A","1=B/2=d"}
infoset 4 {"1=A/3=g","1=A/3=h","1=B/2=c/2=E","1=B/2=c/2=F","1=B/2=d/3=g","1=B/2=d/3=h"}
)egs";

// UO-minimal although lifting player 3's set to B is an IS opportunity.
inline const char kMud[] = R"egs(egs 1
player 1 actions A,B
player 2 actions c,d
player 3 actions g,h
player 4 actions e,f
node "" 1:A|B
node "1=A" 4:e|f
node "1=A/4=e" 3:g|h
node "1=B" 2:c|d
node "1=B/2=c" 3:g|h 4:e|f
node "1=B/2=d" 3:g|h
infoset 1 {""}
infoset 2 {"1=B"}
infoset 3 {"1=A/4=e","1=B/2=c","1=B/2=d"}
infoset 4 {"1=A","1=B/2=c"}
)egs";

// After A or B, players 2 and 3 move simultaneously and uninformed.
inline const char kNul[] = R"egs(egs 1
player 1 actions A,B
player 2 actions C,D,E
player 3 actions F,G
node "" 1:A|B
node "1=A" 2:C|D|E 3:F|G
node "1=B" 2:C|D|E 3:F|G
infoset 1 {""}
infoset 2 {"1=A","1=B"}
infoset 3 {"1=A","1=B"}
)egs";

// Payoffs: player 1 gets 1 after A and 0 after B; player 2 gets 2 for C,
// 1 for E, and for D 3 against F or 2 against G; player 3 gets 1 for G,
// and for F 2 against E or 0 otherwise.
inline Game NulGame() {
  EgsDocument doc = ParseEgs(kNul);
  for (const char* a : {"A", "B"}) {
    for (const char* c : {"C", "D", "E"}) {
      for (const char* f : {"F", "G"}) {
        const std::string sc = c, sf = f;
        const int v2 = sc == "C" ? 2 : sc == "E" ? 1 : (sf == "F" ? 3 : 2);
        const int v3 = sf == "G" ? 1 : (sc == "E" ? 2 : 0);
        History h = ParseHistory(
            std::string("1=") + a + "/(2=" + c + ",3=" + f + ")",
            doc.structure.action_sets());
        doc.payoffs[h] = {{1, std::string(a) == "A" ? 1 : 0}, {2, v2}, {3, v3}};
      }
    }
  }
  return MakeGame(doc);
}

// Players 4 and 5 move together after B/C/x and B/C/y; on the A side 5
// follows 4.
inline const char kIcot[] = R"egs(egs 1
player 1 actions A,B
player 2 actions D,E,C,H
player 3 actions F,G,x,y
player 4 actions u,v
player 5 actions p,q
node "" 1:A|B
node "1=A" 2:D|E
node "1=A/2=D" 3:F|G
node "1=A/2=D/3=F" 4:u|v
node "1=A/2=D/3=F/4=u" 5:p|q
node "1=B" 2:C|H
node "1=B/2=C" 3:x|y
node "1=B/2=C/3=x" 4:u|v 5:p|q
node "1=B/2=C/3=y" 4:u|v 5:p|q
infoset 1 {""}
infoset 2 {"1=A"}
infoset 2 {"1=B"}
infoset 3 {"1=A/2=D"}
infoset 3 {"1=B/2=C"}
infoset 4 {"1=A/2=D/3=F","1=B/2=C/3=x","1=B/2=C/3=y"}
infoset 5 {"1=A/2=D/3=F/4=u","1=B/2=C/3=x","1=B/2=C/3=y"}
)egs";

// Player 2 can be lifted to the root, or player 3 to B, but not both.
inline const char kTwoIcos[] = R"egs(egs 1
player 1 actions A,B
player 2 actions X,Y
player 3 actions s,t
node "" 1:A|B
node "1=A" 2:X|Y
node "1=B" 2:X|Y
node "1=B/2=X" 3:s|t
node "1=B/2=Y" 3:s|t
infoset 1 {""}
infoset 2 {"1=A","1=B"}
infoset 3 {"1=B/2=X","1=B/2=Y"}
)egs";

// Player 4's and player 5's sets overlap only at B/C/x, which belongs to
// neither lifted part.
inline const char kOverlap[] = R"egs(egs 1
player 1 actions A,B
player 2 actions C,D
player 3 actions C,E
player 4 actions u,v
player 5 actions p,q
player 6 actions x,y
node "" 1:A|B
node "1=A" 2:C|D
node "1=A/2=C" 4:u|v
node "1=A/2=C/4=u" 5:p|q
node "1=A/2=D" 4:u|v
node "1=B" 3:C|E
node "1=B/3=C" 6:x|y
node "1=B/3=C/6=x" 4:u|v 5:p|q
node "1=B/3=C/6=y" 5:p|q
infoset 1 {""}
infoset 2 {"1=A"}
infoset 3 {"1=B"}
infoset 4 {"1=A/2=C","1=A/2=D","1=B/3=C/6=x"}
infoset 5 {"1=A/2=C/4=u","1=B/3=C/6=x","1=B/3=C/6=y"}
infoset 6 {"1=B/3=C"}
)egs";

// Player 2's lower set can be lifted to R/A, but player 3 moves with it at
// R/A/C and cannot be lifted.
inline const char kNoPart[] = R"egs(egs 1
player 1 actions L,R
player 2 actions X,Y,m,n
player 3 actions s,t
player 4 actions A,K
player 5 actions C,D
node "" 1:L|R
node "1=L" 2:X|Y
node "1=L/2=X" 3:s|t
node "1=R" 4:A|K
node "1=R/4=A" 5:C|D
node "1=R/4=A/5=C" 2:m|n 3:s|t
node "1=R/4=A/5=D" 2:m|n
infoset 1 {""}
infoset 2 {"1=L"}
infoset 2 {"1=R/4=A/5=C","1=R/4=A/5=D"}
infoset 3 {"1=L/2=X","1=R/4=A/5=C"}
infoset 4 {"1=R"}
infoset 5 {"1=R/4=A"}
)egs";

// Players 2 and 3 move together below the root, partly after B.
inline const char kInterp[] = R"egs(egs 1
player 1 actions B,E
player 2 actions m,n
player 3 actions s,t
player 4 actions C,D
node "" 1:B|E
node "1=B" 4:C|D
node "1=B/4=C" 2:m|n 3:s|t
node "1=B/4=D" 2:m|n 3:s|t
node "1=E" 2:m|n 3:s|t
infoset 1 {""}
infoset 2 {"1=B/4=C","1=B/4=D","1=E"}
infoset 3 {"1=B/4=C","1=B/4=D","1=E"}
infoset 4 {"1=B"}
)egs";

// Two coalescings and a complete control whose moves depend on each other
// through equal lengths.
inline const char kSynth[] = R"egs(egs 1
player 1 actions A,B,C
player 2 actions x,y,p,r
player 3 actions c,d,q,s
player 4 actions e,f
player 5 actions u,v
node "" 1:A|B|C
node "1=A" 2:x|y
node "1=B" 2:x|y
node "1=A/2=x" 4:e|f
node "1=A/2=x/4=e" 2:p|r
node "1=A/2=x/4=f" 2:p|r
node "1=B/2=x" 3:c|d
node "1=B/2=y" 3:c|d
node "1=B/2=x/3=c" 2:p|r 3:q|s
node "1=B/2=x/3=d" 2:p|r
node "1=B/2=y/3=c" 3:q|s
node "1=B/2=x/3=d/2=p" 5:u|v
node "1=B/2=y/3=c/3=q" 5:u|v
infoset 1 {""}
infoset 2 {"1=A","1=B"}
infoset 3 {"1=B/2=x","1=B/2=y"}
infoset 4 {"1=A/2=x"}
infoset 2 {"1=A/2=x/4=e","1=A/2=x/4=f","1=B/2=x/3=c","1=B/2=x/3=d"}
infoset 3 {"1=B/2=x/3=c","1=B/2=y/3=c"}
infoset 5 {"1=B/2=x/3=d/2=p","1=B/2=y/3=c/3=q"}
)egs";

inline Structure Load(const char* text) { return ParseStructure(text); }

inline History H(const Structure& g, const std::string& text) {
  return ParseHistory(text, g.action_sets());
}

inline int Node(const Structure& g, const std::string& text) {
  return g.Find(H(g, text));
}

inline InfoSet Set(const Structure& g, PlayerId owner,
                   const std::vector<std::string>& members) {
  InfoSet s{owner, {}};
  for (const std::string& m : members) s.members.push_back(H(g, m));
  std::sort(s.members.begin(), s.members.end());
  return s;
}

inline int SetIndex(const Structure& g, PlayerId owner,
                    const std::vector<std::string>& members) {
  return g.InfoSetIndex(Set(g, owner, members));
}

}  // namespace egs::fixtures

#endif  // EGS_TESTS_FIXTURES_H_
