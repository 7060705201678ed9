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

#include <algorithm>
#include <bit>
#include <set>

#include "egs/strategy.h"
#include "egs/transform.h"

namespace egs {

namespace {

constexpr size_t kMaxCombinations = 1 << 14;

std::string Quote(const History& h) { return "\"" + FormatHistory(h) + "\""; }

// An element of the bundle's moved sets: owner plus histories.
using MovedSet = std::pair<PlayerId, std::vector<History>>;

std::vector<History> Intersect(const std::vector<History>& a,
                               const std::vector<History>& b) {
  std::vector<History> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool IsSubset(const std::vector<History>& a, const std::vector<History>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// The first parent of a mover member outside the base, if any.
std::optional<History> Interpolating(const Structure& g,
                                     const CoalescingOpp& opp) {
  const int kb = g.InfoSetIndex(opp.base);
  const auto& bm = g.members(kb);
  for (int m : g.members(g.InfoSetIndex(opp.mover))) {
    int p = g.parent(m);
    if (!std::binary_search(bm.begin(), bm.end(), p)) return g.history(p);
  }
  return std::nullopt;
}

std::optional<History> Interpolating(const Structure& g, const IsOpp& opp) {
  const int a = g.Find(opp.anchor);
  for (const History& h : opp.submover) {
    int v = g.Find(h);
    if (g.parent(v) != a) return g.history(g.parent(v));
  }
  return std::nullopt;
}

bool ValidOpp(const Structure& g, const CoalescingOpp& o) {
  if (g.FindInfoSet(o.base) < 0 || g.FindInfoSet(o.mover) < 0 ||
      o.base.owner != o.mover.owner) {
    return false;
  }
  auto link = Controls(g, o.base, o.mover);
  return link && *link == o.link;
}

bool ValidOpp(const Structure& g, const IsOpp& o) {
  const int a = g.Find(o.anchor);
  const int k = g.FindInfoSet(o.mover);
  if (a < 0 || k < 0 || o.submover.empty() || g.IsActive(a, o.owner())) {
    return false;
  }
  for (const History& h : o.submover) {
    if (g.Find(h) < 0) return false;
  }
  if (!IsSubset(o.submover, o.mover.members)) return false;
  return Dictates(g, o.anchor, o.owner(), o.submover);
}

// Per information set of a class: the immediate coalescing into its own
// predecessor, or any non-empty set of its immediate IS parts.
struct Options {
  std::optional<CoalescingOpp> coalescing;
  std::vector<IsOpp> parts;
  // Subsets of `parts`, largest first.
  std::vector<uint32_t> masks;

  size_t size() const { return (coalescing ? 1 : 0) + masks.size(); }
};

Options OptionsFor(const Structure& g, int k) {
  Options o;
  const PlayerId i = g.owner(k);
  const auto& ms = g.members(k);
  if (auto pred = OwnPredecessor(g, k)) {
    const auto& bm = g.members(pred->first);
    bool immediate = true;
    for (int m : ms) {
      immediate = immediate && std::binary_search(bm.begin(), bm.end(), g.parent(m));
    }
    if (immediate) {
      auto link = Controls(g, g.infoset(pred->first), g.infoset(k));
      if (link) o.coalescing = CoalescingOpp{g.infoset(pred->first), g.infoset(k), *link};
    }
  }
  std::set<int> parents;
  for (int m : ms) {
    if (g.parent(m) >= 0 && !g.IsActive(g.parent(m), i)) parents.insert(g.parent(m));
  }
  for (int p : parents) {
    std::vector<int> d;
    for (int m : ms) {
      if (g.parent(m) == p) d.push_back(m);
    }
    if (g.ZOf(d) != g.Z(p)) continue;
    IsOpp part{g.history(p), {}, g.infoset(k)};
    for (int m : d) part.submover.push_back(g.history(m));
    o.parts.push_back(std::move(part));
  }
  if (o.parts.size() > 12) o.parts.resize(12);
  for (uint32_t mask = 1; mask < (1u << o.parts.size()); ++mask) {
    o.masks.push_back(mask);
  }
  std::stable_sort(o.masks.begin(), o.masks.end(), [](uint32_t a, uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  return o;
}

}  // namespace

std::string Describe(const Ico& t) {
  std::string out = "ico";
  for (const auto& c : t.coalescings) out += "\n  " + Describe(c);
  for (const auto& p : t.is_parts) out += "\n  " + Describe(p);
  return out;
}

bool IsImmediate(const Structure& g, const CoalescingOpp& opp) {
  return ValidOpp(g, opp) && !Interpolating(g, opp);
}

bool IsImmediate(const Structure& g, const IsOpp& opp) {
  return ValidOpp(g, opp) && !Interpolating(g, opp);
}

IcoCheck CheckIco(const Structure& g, const Ico& t) {
  IcoCheck r;
  if (t.empty()) {
    r.reason = "empty bundle";
    return r;
  }
  std::vector<int> movers;
  std::vector<MovedSet> moved;
  for (const auto& c : t.coalescings) {
    if (!ValidOpp(g, c)) {
      r.reason = "not a coalescing opportunity: " + Describe(c);
      return r;
    }
    if (auto h = Interpolating(g, c)) {
      r.reason = "coalescing is not immediate: history " + Quote(*h) +
                 " lies between base and mover";
      return r;
    }
    movers.push_back(g.InfoSetIndex(c.mover));
    moved.push_back({c.owner(), c.mover.members});
  }
  for (const auto& p : t.is_parts) {
    if (!ValidOpp(g, p)) {
      r.reason = "not an IS opportunity: " + Describe(p);
      return r;
    }
    if (auto h = Interpolating(g, p)) {
      r.reason = "IS part is not immediate: history " + Quote(*h) +
                 " lies between " + Quote(p.anchor) + " and the sub-mover";
      return r;
    }
    movers.push_back(g.InfoSetIndex(p.mover));
    moved.push_back({p.owner(), p.submover});
  }
  for (size_t a = 1; a < movers.size(); ++a) {
    if (!TransitivelySimultaneous(g, movers[0], movers[a])) {
      r.reason = "movers " + FormatInfoSet(g.infoset(movers[0])) + " and " +
                 FormatInfoSet(g.infoset(movers[a])) +
                 " are not transitively simultaneous";
      return r;
    }
  }
  {
    std::set<MovedSet> seen;
    for (const MovedSet& s : moved) {
      if (!seen.insert(s).second) {
        r.reason = "a moved set appears twice";
        return r;
      }
    }
  }
  r.ico = true;

  std::set<int> participants(movers.begin(), movers.end());
  for (int k = 0; k < g.num_infosets(); ++k) {
    if (participants.count(k)) continue;
    if (TransitivelySimultaneous(g, k, movers[0])) {
      r.reason = "information set " + FormatInfoSet(g.infoset(k)) +
                 " is transitively simultaneous with a participant but does "
                 "not participate";
      return r;
    }
  }
  for (int f : participants) {
    for (int e : participants) {
      if (f >= e) continue;
      auto common = Intersect(g.infoset(f).members, g.infoset(e).members);
      if (common.empty()) continue;
      bool covered = false;
      for (const MovedSet& b : moved) {
        if (b.first != g.owner(f) || !IsSubset(b.second, g.infoset(f).members)) continue;
        for (const MovedSet& c : moved) {
          if (c.first != g.owner(e) || !IsSubset(c.second, g.infoset(e).members)) continue;
          covered = covered || Intersect(b.second, c.second) == common;
        }
      }
      if (!covered) {
        r.reason = "overlap of " + FormatInfoSet(g.infoset(f)) + " and " +
                   FormatInfoSet(g.infoset(e)) + " does not move as a whole";
        return r;
      }
    }
  }
  r.complete = true;
  return r;
}

std::vector<Ico> FindCompleteIcosIn(const Structure& g,
                                    const std::vector<int>& sim_class,
                                    size_t limit) {
  std::vector<Ico> out;
  std::vector<Options> opts;
  for (int k : sim_class) {
    opts.push_back(OptionsFor(g, k));
    if (opts.back().size() == 0) return out;
  }
  std::vector<size_t> pick(opts.size(), 0);
  for (size_t n = 0; n < kMaxCombinations; ++n) {
    Ico t;
    for (size_t s = 0; s < opts.size(); ++s) {
      const Options& o = opts[s];
      size_t p = pick[s];
      if (o.coalescing) {
        if (p == 0) {
          t.coalescings.push_back(*o.coalescing);
          continue;
        }
        --p;
      }
      for (size_t b = 0; b < o.parts.size(); ++b) {
        if (o.masks[p] >> b & 1) t.is_parts.push_back(o.parts[b]);
      }
    }
    if (CheckIco(g, t).complete) {
      out.push_back(std::move(t));
      if (limit > 0 && out.size() >= limit) return out;
    }
    size_t s = opts.size();
    while (s > 0) {
      --s;
      if (++pick[s] < opts[s].size()) break;
      pick[s] = 0;
      if (s == 0) return out;
    }
    if (opts.empty()) return out;
  }
  return out;
}

std::vector<Ico> FindCompleteIcos(const Structure& g) {
  std::vector<Ico> out;
  for (const auto& c : SimClasses(g)) {
    for (Ico& t : FindCompleteIcosIn(g, c)) out.push_back(std::move(t));
  }
  return out;
}

Transformed ApplyTau(const Structure& g, const Ico& t, bool require_complete) {
  if (require_complete) {
    IcoCheck c = CheckIco(g, t);
    if (!c.complete) throw EgsError("not a complete ICO: " + c.reason);
  }
  return ApplySequence(g, t.is_parts, t.coalescings);
}

Compaction BackwardCompactify(const Structure& g) {
  Compaction out{g, {}, HistoryMap::Identity(g)};
  for (int guard = 0; guard < 10000; ++guard) {
    const Structure& cur = out.structure;
    struct Keyed {
      int depth;
      History first;
      std::vector<int> cls;
    };
    std::vector<Keyed> order;
    for (auto& c : SimClasses(cur)) {
      Keyed k{0, {}, c};
      bool any = false;
      for (int s : c) {
        for (int m : cur.members(s)) {
          k.depth = std::max(k.depth, cur.depth(m));
          if (!any || cur.history(m) < k.first) k.first = cur.history(m);
          any = true;
        }
      }
      order.push_back(std::move(k));
    }
    std::sort(order.begin(), order.end(), [](const Keyed& a, const Keyed& b) {
      if (a.depth != b.depth) return a.depth > b.depth;
      return a.first < b.first;
    });
    bool applied = false;
    for (const Keyed& k : order) {
      auto icos = FindCompleteIcosIn(cur, k.cls, 1);
      if (icos.empty()) continue;
      Transformed r = ApplyTau(cur, icos.front());
      out.map = Compose(out.map, r.map);
      out.schedule.push_back(icos.front());
      out.structure = std::move(r.structure);
      applied = true;
      break;
    }
    if (!applied) return out;
  }
  throw EgsError("backward compactification did not terminate");
}

}  // namespace egs
