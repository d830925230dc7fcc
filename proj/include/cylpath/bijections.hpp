#pragma once

// The four structure-preserving maps between downs-first origin cycles,
// balanced origin-connected weight functions, and lap sequences, plus the
// word-level compositions. Every greedy walk in here audits the weld-height
// invariant: a downs-first walk from a weld point never visits a weld point
// above its start. The audit counters let tests confirm the checks actually
// ran.

#include <atomic>
#include <cstdint>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cylpath/cylinder.hpp"
#include "cylpath/params.hpp"
#include "cylpath/weights.hpp"
#include "cylpath/words.hpp"

namespace cylpath {

namespace walk_audit {

inline std::atomic<std::uint64_t> check_count{0};
inline std::atomic<std::uint64_t> violation_count{0};

inline std::uint64_t checks() { return check_count.load(); }
inline std::uint64_t violations() { return violation_count.load(); }
inline void reset() {
  check_count.store(0);
  violation_count.store(0);
}

}  // namespace walk_audit

namespace detail {

inline std::string walk_trace(const Vertex& start,
                              const std::vector<Step>& dirs) {
  std::string t = "(" + std::to_string(start.x) + "," +
                  std::to_string(start.y) + ")";
  for (Step s : dirs) t += step_char(s);
  return t;
}

// Audits one visited vertex of a walk that began at weld height start_y.
inline void check_weld_height(const Vertex& v, long long start_y,
                              const char* who, const Vertex& start,
                              const std::vector<Step>& dirs) {
  if (!is_weld(v)) return;
  ++walk_audit::check_count;
  if (v.y > start_y) {
    ++walk_audit::violation_count;
    throw walk_invariant_error(
        std::string(who) + ": walk reached weld height " +
        std::to_string(v.y) + " above its start " + std::to_string(start_y) +
        "; trace " + walk_trace(start, dirs));
  }
}

}  // namespace detail

// A sequence of laps (C1 first). All laps must share the parameters.
struct LapSequence {
  Params params;
  std::vector<LapCycle> laps;

  LapSequence(const Params& p, std::vector<LapCycle> ls)
      : params(p), laps(std::move(ls)) {
    for (const LapCycle& lap : laps)
      if (!(lap.params() == params))
        throw precondition_error("lap parameters differ from the sequence's");
  }

  std::size_t size() const { return laps.size(); }
  bool operator==(const LapSequence&) const = default;
};

// Cycle -> weights: the weight of an edge is the number of times the cycle
// traverses it. Requires a downs-first cycle at the origin; such a cycle
// stays inside H, which the WeightFunction constructor re-checks edge by
// edge.
inline WeightFunction path_to_weights(const CylCycle& c) {
  if (!(c.start() == Vertex{0, 0}))
    throw precondition_error("cycle must start at the origin");
  if (const auto w = downs_first_witness(c))
    throw precondition_error(
        "cycle is not downs-first: vertex (" + std::to_string(w->vertex.x) +
        "," + std::to_string(w->vertex.y) + ") departs up at step " +
        std::to_string(w->up_step) + " and down at step " +
        std::to_string(w->down_step));
  const Params& p = c.params();
  WeightFunction::Map mult;
  Vertex v = c.start();
  std::vector<Step> taken;
  taken.reserve(c.length());
  for (Step s : c.dirs()) {
    ++mult[Edge{v, s}];
    v = step_from(p, v, s);
    taken.push_back(s);
    detail::check_weld_height(v, 0, "path_to_weights", c.start(), taken);
  }
  return WeightFunction(p, std::move(mult));
}

// Weights -> cycle: walk greedily from the origin, taking the down-edge
// while it has weight left and the up-edge otherwise, consuming one unit per
// step, and stop on reaching a vertex with zero remaining out-weight. That
// vertex must be the origin, and for a connected input the walk uses up all
// the weight; leftover weight is how a disconnected input shows itself.
inline CylCycle weights_to_path(const WeightFunction& wf) {
  if (!is_balanced(wf))
    throw not_balanced_error("weight function is not balanced");
  const Params& p = wf.params();
  WeightFunction::Map rem = wf.map();
  const Vertex origin{0, 0};
  std::vector<Step> dirs;
  dirs.reserve(static_cast<std::size_t>(wf.total()));
  Vertex v = origin;
  for (;;) {
    const auto take = [&](Step s) {
      const auto it = rem.find(Edge{v, s});
      if (it == rem.end() || it->second == 0) return false;
      --it->second;
      dirs.push_back(s);
      v = step_from(p, v, s);
      return true;
    };
    if (!take(Step::Down) && !take(Step::Up)) break;
    detail::check_weld_height(v, 0, "weights_to_path", origin, dirs);
  }
  if (!(v == origin))
    throw internal_error("greedy walk halted at (" + std::to_string(v.x) +
                         "," + std::to_string(v.y) +
                         ") instead of the origin; trace " +
                         detail::walk_trace(origin, dirs));
  if (static_cast<long long>(dirs.size()) != wf.total())
    throw not_origin_connected_error(
        "walk consumed " + std::to_string(dirs.size()) + " of " +
        std::to_string(wf.total()) +
        " total weight: weight function is not origin-connected");
  return CylCycle(p, origin, std::move(dirs));
}

// Laps -> weights: pack the laps below one another. The last lap stays at
// the origin; each earlier lap is shifted down by the largest amount keeping
// it weakly below its successor, so the two touch in at least one column.
// Shifts come out as non-positive multiples of a+b.
inline WeightFunction laps_to_weights(const LapSequence& seq) {
  const Params& p = seq.params;
  const int m = p.modulus();
  const std::size_t n = seq.laps.size();

  std::vector<std::vector<long long>> prof(n);
  for (std::size_t i = 0; i < n; ++i) prof[i] = seq.laps[i].profile();

  std::vector<long long> shift(n, 0);
  for (std::size_t i = n; i-- > 1;) {
    long long gap = std::numeric_limits<long long>::max();
    for (int x = 0; x < m; ++x)
      gap = std::min(gap, prof[i][x] - prof[i - 1][x]);
    shift[i - 1] = shift[i] + gap;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    // touching and weakly below, column by column
    long long min_gap = std::numeric_limits<long long>::max();
    for (int x = 0; x < m; ++x)
      min_gap = std::min(min_gap,
                         (prof[i + 1][x] + shift[i + 1]) -
                             (prof[i][x] + shift[i]));
    if (min_gap != 0)
      throw internal_error("packed laps " + std::to_string(i + 1) + " and " +
                           std::to_string(i + 2) + " do not touch");
    if (shift[i] > shift[i + 1] || shift[i] % m != 0 || shift[i] > 0)
      throw internal_error("packing shift " + std::to_string(shift[i]) +
                           " for lap " + std::to_string(i + 1) +
                           " is not a non-positive multiple of a+b");
  }

  WeightFunction::Map mult;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v{0, shift[i]};
    for (Step s : seq.laps[i].dirs()) {
      ++mult[Edge{v, s}];
      v = step_from(p, v, s);
    }
  }
  WeightFunction out(p, std::move(mult));
  if (out.total() != static_cast<long long>(n) * m)
    throw internal_error("packing lost weight: total " +
                         std::to_string(out.total()) + " for " +
                         std::to_string(n) + " laps");
  if (!is_balanced(out) || !is_origin_connected(out))
    throw internal_error(
        "packing produced an unbalanced or disconnected weight function");
  return out;
}

// Weights -> laps: repeatedly start at the lowest weld point that still has
// positive out-weight and walk greedily (down while possible) until the
// first return to it. Each such walk must close after exactly a+b steps and
// is recorded, translated to the origin, as the next lap; the lowest lap
// comes out first.
inline LapSequence weights_to_laps(const WeightFunction& wf) {
  if (!is_balanced(wf))
    throw not_balanced_error("weight function is not balanced");
  if (!is_origin_connected(wf))
    throw not_origin_connected_error("weight function is not origin-connected");
  const Params& p = wf.params();
  const int m = p.modulus();
  if (wf.total() % m != 0)
    throw precondition_error("total weight must be a multiple of a+b");

  WeightFunction::Map rem = wf.map();
  long long remaining = wf.total();
  std::vector<LapCycle> laps;
  laps.reserve(static_cast<std::size_t>(remaining / m));
  while (remaining > 0) {
    bool found = false;
    long long low = 0;
    for (const auto& [e, wt] : rem)
      if (wt > 0 && is_weld(e.from) && (!found || e.from.y < low)) {
        low = e.from.y;
        found = true;
      }
    if (!found)
      throw internal_error(
          "weight remains but no weld point has positive out-weight");

    const Vertex start{0, low};
    Vertex v = start;
    std::vector<Step> dirs;
    dirs.reserve(static_cast<std::size_t>(m));
    do {
      const auto take = [&](Step s) {
        const auto it = rem.find(Edge{v, s});
        if (it == rem.end() || it->second == 0) return false;
        --it->second;
        dirs.push_back(s);
        v = step_from(p, v, s);
        return true;
      };
      if (!take(Step::Down) && !take(Step::Up))
        throw internal_error("extraction walk is stuck at (" +
                             std::to_string(v.x) + "," + std::to_string(v.y) +
                             "); trace " + detail::walk_trace(start, dirs));
      detail::check_weld_height(v, low, "weights_to_laps", start, dirs);
    } while (!(v == start));
    if (dirs.size() != static_cast<std::size_t>(m))
      throw walk_invariant_error(
          "extracted walk closed after " + std::to_string(dirs.size()) +
          " steps instead of a+b; trace " + detail::walk_trace(start, dirs));
    remaining -= m;
    laps.emplace_back(p, std::move(dirs));
  }
  return LapSequence(p, std::move(laps));
}

inline LapSequence word_to_laps(const Word& w) {
  return weights_to_laps(path_to_weights(word_to_cycle(w)));
}

inline Word laps_to_word(const LapSequence& seq) {
  return cycle_to_word(weights_to_path(laps_to_weights(seq)));
}

// Text form: one direction string per line, first lap first.
inline std::string format_laps(const LapSequence& seq) {
  std::string out;
  for (const LapCycle& lap : seq.laps) out += lap.dir_string() + "\n";
  return out;
}

inline LapSequence parse_laps(const Params& p, std::string_view text) {
  std::vector<LapCycle> laps;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::vector<Step> dirs;
    for (std::size_t i = first; i <= last; ++i)
      dirs.push_back(step_from_char(line[i]));
    laps.emplace_back(p, std::move(dirs));
  }
  return LapSequence(p, std::move(laps));
}

}  // namespace cylpath
