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

#include "egs/io.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace egs {

ParseError::ParseError(int line, int column, const std::string& message)
    : EgsError("line " + std::to_string(line) + ", column " +
               std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool IsNameChar(char c) {
  if (std::isspace(static_cast<unsigned char>(c))) return false;
  switch (c) {
    case '"': case '/': case ',': case '(': case ')': case '=': case '|':
    case ':': case '{': case '}': case '#':
      return false;
    default:
      return true;
  }
}

using ActionMap = std::map<PlayerId, std::vector<ActionId>>;

// Cursor over one line. Columns are 1-based; `offset` shifts them when the
// cursor scans the inside of a quoted string.
class Cursor {
 public:
  Cursor(const std::string& s, int line, int offset = 0)
      : s_(s), line_(line), offset_(offset) {}

  [[noreturn]] void Fail(const std::string& msg) const {
    throw ParseError(line_, static_cast<int>(pos_) + 1 + offset_, msg);
  }
  void SkipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= s_.size();
  }
  bool Peek(char c) {
    SkipSpace();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool Accept(char c) {
    if (!Peek(c)) return false;
    ++pos_;
    return true;
  }
  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }
  std::string Name(const char* what) {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < s_.size() && IsNameChar(s_[pos_])) ++pos_;
    if (start == pos_) Fail(std::string("expected ") + what);
    return s_.substr(start, pos_ - start);
  }
  int Int(const char* what) {
    SkipSpace();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    std::string tok = s_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+") {
      pos_ = start;
      Fail(std::string("expected ") + what);
    }
    try {
      return std::stoi(tok);
    } catch (const std::exception&) {
      pos_ = start;
      Fail(std::string("integer out of range for ") + what);
    }
  }
  // Returns the text between quotes and the column offset of its first
  // character.
  std::pair<std::string, int> Quoted() {
    SkipSpace();
    if (pos_ >= s_.size() || s_[pos_] != '"') Fail("expected '\"'");
    size_t start = ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
    if (pos_ >= s_.size()) Fail("unterminated string");
    std::string out = s_.substr(start, pos_ - start);
    ++pos_;
    return {out, static_cast<int>(start) + offset_};
  }
  Rational Rat(const char* what) {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '-' || s_[pos_] == '+' || s_[pos_] == '/')) {
      ++pos_;
    }
    std::string tok = s_.substr(start, pos_ - start);
    if (tok.empty()) Fail(std::string("expected ") + what);
    size_t slash = tok.find('/');
    if (tok.front() == '+') tok.erase(0, 1);
    Rational r;
    if (r.set_str(tok, 10) != 0) {
      pos_ = start;
      Fail("malformed rational '" + tok + "'");
    }
    if (slash != std::string::npos && r.get_den() == 0) {
      pos_ = start;
      Fail("zero denominator");
    }
    if (slash != std::string::npos &&
        std::stol(tok.substr(slash + 1)) <= 0) {
      pos_ = start;
      Fail("denominator must be positive");
    }
    r.canonicalize();
    return r;
  }
  int line() const { return line_; }
  size_t pos() const { return pos_; }

 private:
  const std::string& s_;
  int line_;
  int offset_;
  size_t pos_ = 0;
};

std::pair<PlayerId, ActionId> ParseEntry(Cursor& c, const ActionMap& actions) {
  bool numeric = true;
  std::string first = c.Name("player id or action");
  for (char ch : first) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-') numeric = false;
  }
  if (numeric && c.Accept('=')) {
    PlayerId p = std::stoi(first);
    return {p, c.Name("action")};
  }
  PlayerId owner = 0;
  int owners = 0;
  for (const auto& [p, acts] : actions) {
    if (std::binary_search(acts.begin(), acts.end(), first)) {
      owner = p;
      ++owners;
    }
  }
  if (owners != 1) {
    c.Fail(owners == 0 ? "unknown action '" + first + "'"
                       : "ambiguous action '" + first + "'");
  }
  return {owner, first};
}

History ParseHistoryAt(const std::string& text, int line, int offset,
                       const ActionMap& actions) {
  History h;
  Cursor c(text, line, offset);
  if (c.AtEnd()) return h;
  while (true) {
    Profile a;
    auto add = [&](const std::pair<PlayerId, ActionId>& e) {
      if (!a.emplace(e.first, e.second).second) {
        c.Fail("player " + std::to_string(e.first) +
               " appears twice in one profile");
      }
    };
    if (c.Accept('(')) {
      add(ParseEntry(c, actions));
      while (c.Accept(',')) add(ParseEntry(c, actions));
      c.Expect(')');
    } else {
      add(ParseEntry(c, actions));
    }
    h.moves.push_back(std::move(a));
    if (c.AtEnd()) break;
    c.Expect('/');
  }
  return h;
}

std::string StripComment(const std::string& line) {
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

}  // namespace

std::string FormatRational(const Rational& r) { return r.get_str(); }

History ParseHistory(const std::string& text, const ActionMap& actions) {
  return ParseHistoryAt(text, 1, 0, actions);
}

EgsDocument ParseEgs(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(StripComment(l));
  }

  // Player declarations come first so that bare action names anywhere in
  // the file can be resolved.
  ActionMap actions;
  bool header = false;
  for (size_t n = 0; n < lines.size(); ++n) {
    Cursor c(lines[n], static_cast<int>(n) + 1);
    if (c.AtEnd()) continue;
    std::string kw = c.Name("keyword");
    if (!header) {
      if (kw != "egs") c.Fail("expected header 'egs 1'");
      int v = c.Int("format version");
      if (v != 1) c.Fail("unsupported format version " + std::to_string(v));
      if (!c.AtEnd()) c.Fail("trailing text after header");
      header = true;
      continue;
    }
    if (kw != "player") continue;
    PlayerId p = c.Int("player id");
    if (c.Name("'actions'") != "actions") c.Fail("expected 'actions'");
    if (actions.count(p)) c.Fail("player " + std::to_string(p) + " declared twice");
    std::vector<ActionId> acts;
    acts.push_back(c.Name("action"));
    while (c.Accept(',')) acts.push_back(c.Name("action"));
    if (!c.AtEnd()) c.Fail("trailing text");
    std::sort(acts.begin(), acts.end());
    actions[p] = acts;
  }
  if (!header) throw ParseError(1, 1, "missing header 'egs 1'");

  std::set<History> histories;
  std::set<History> declared;
  std::vector<InfoSet> infosets;
  EgsDocument doc;
  for (size_t n = 0; n < lines.size(); ++n) {
    const int line = static_cast<int>(n) + 1;
    Cursor c(lines[n], line);
    if (c.AtEnd()) continue;
    std::string kw = c.Name("keyword");
    if (kw == "egs" || kw == "player") continue;
    if (kw == "node") {
      auto [text_h, off] = c.Quoted();
      History h = ParseHistoryAt(text_h, line, off, actions);
      if (!declared.insert(h).second) c.Fail("node declared twice");
      std::vector<std::pair<PlayerId, std::vector<ActionId>>> moves;
      while (!c.AtEnd()) {
        PlayerId p = c.Int("player id");
        c.Expect(':');
        std::vector<ActionId> acts{c.Name("action")};
        while (c.Accept('|')) acts.push_back(c.Name("action"));
        for (const auto& m : moves) {
          if (m.first == p) c.Fail("player listed twice on one node");
        }
        moves.emplace_back(p, std::move(acts));
      }
      if (moves.empty()) c.Fail("node without active players");
      histories.insert(h);
      // Children: product of the listed action lists.
      std::vector<Profile> prods{Profile{}};
      for (const auto& [p, acts] : moves) {
        std::vector<Profile> next;
        for (const Profile& base : prods) {
          for (const ActionId& a : acts) {
            Profile q = base;
            q[p] = a;
            next.push_back(std::move(q));
          }
        }
        prods = std::move(next);
      }
      for (const Profile& a : prods) histories.insert(h.Child(a));
    } else if (kw == "infoset") {
      InfoSet s;
      s.owner = c.Int("player id");
      c.Expect('{');
      if (!c.Peek('}')) {
        do {
          auto [text_h, off] = c.Quoted();
          s.members.push_back(ParseHistoryAt(text_h, line, off, actions));
        } while (c.Accept(','));
      }
      c.Expect('}');
      if (!c.AtEnd()) c.Fail("trailing text");
      infosets.push_back(std::move(s));
    } else if (kw == "payoff") {
      auto [text_h, off] = c.Quoted();
      History z = ParseHistoryAt(text_h, line, off, actions);
      auto& row = doc.payoffs[z];
      if (!row.empty()) c.Fail("payoff declared twice for one history");
      while (!c.AtEnd()) {
        PlayerId p = c.Int("player id");
        c.Expect('=');
        Rational v = c.Rat("rational payoff");
        if (!row.emplace(p, v).second) c.Fail("player listed twice");
      }
      if (row.empty()) c.Fail("payoff line without values");
    } else {
      c.Fail("unknown keyword '" + kw + "'");
    }
  }
  doc.structure = Structure(actions,
                            std::vector<History>(histories.begin(),
                                                 histories.end()),
                            std::move(infosets));
  return doc;
}

Structure ParseStructure(const std::string& text) {
  return ParseEgs(text).structure;
}

std::string SerializeStructure(const Structure& g) {
  EgsDocument doc;
  doc.structure = g;
  return Serialize(doc);
}

std::string Serialize(const EgsDocument& doc) {
  const Structure& g = doc.structure;
  std::ostringstream out;
  out << "egs 1\n";
  for (const auto& [p, acts] : g.action_sets()) {
    out << "player " << p << " actions ";
    for (size_t k = 0; k < acts.size(); ++k) out << (k ? "," : "") << acts[k];
    out << "\n";
  }
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (g.IsTerminal(v)) continue;
    out << "node \"" << FormatHistory(g.history(v)) << "\"";
    for (PlayerId p : g.active(v)) {
      out << " " << p << ":";
      const auto& f = g.feasible(v, p);
      for (size_t k = 0; k < f.size(); ++k) out << (k ? "|" : "") << f[k];
    }
    out << "\n";
  }
  for (const InfoSet& s : g.infosets()) {
    out << "infoset " << s.owner << " {";
    for (size_t k = 0; k < s.members.size(); ++k) {
      out << (k ? "," : "") << "\"" << FormatHistory(s.members[k]) << "\"";
    }
    out << "}\n";
  }
  for (const auto& [z, row] : doc.payoffs) {
    out << "payoff \"" << FormatHistory(z) << "\"";
    for (const auto& [p, v] : row) out << " " << p << "=" << FormatRational(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace egs
