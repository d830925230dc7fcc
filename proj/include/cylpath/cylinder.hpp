#pragma once

// The cylinder graphs. Vertices are pairs (x, y) with x a residue mod a+b,
// y an integer height, and y ≡ a·x (mod a+b). Every vertex has an up-edge to
// ((x+1) mod a+b, y+a) and a down-edge to ((x+1) mod a+b, y-b). The bounded
// graph H keeps only vertices at or below the ceiling min(a·x, b·(a+b-x)).
// Nothing is materialized; validity and edge endpoints are plain arithmetic.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cylpath/params.hpp"

namespace cylpath {

struct Vertex {
  int x = 0;        // column, in [0, a+b)
  long long y = 0;  // height
  bool operator==(const Vertex&) const = default;
};

struct Edge {
  Vertex from;
  Step dir = Step::Down;
  bool operator==(const Edge&) const = default;
};

// Height of the topmost origin lap above column x. Vertices of H are the
// lattice points at or below it; ceiling(0) = 0, so no weld point above the
// origin survives.
inline long long ceiling_height(const Params& p, int x) {
  return std::min(static_cast<long long>(p.a) * x,
                  static_cast<long long>(p.b) * (p.modulus() - x));
}

// Membership in the unbounded graph: column in range and height congruent.
inline bool on_lattice(const Params& p, int x, long long y) {
  if (x < 0 || x >= p.modulus()) return false;
  return (y - static_cast<long long>(p.a) * x) % p.modulus() == 0;
}

// Membership in H.
inline bool vertex_valid(const Params& p, int x, long long y) {
  return on_lattice(p, x, y) && y <= ceiling_height(p, x);
}

inline bool is_weld(const Vertex& v) { return v.x == 0; }

inline Vertex step_from(const Params& p, const Vertex& v, Step s) {
  Vertex next;
  next.x = v.x + 1 == p.modulus() ? 0 : v.x + 1;
  next.y = v.y + step_value(p, s);
  return next;
}

inline Vertex edge_head(const Params& p, const Edge& e) {
  return step_from(p, e.from, e.dir);
}

// Packs a vertex into one integer, usable as a hash-map key. Injective
// because x < a+b.
inline long long vertex_key(const Params& p, const Vertex& v) {
  return v.y * p.modulus() + v.x;
}

// A closed walk, recorded as its start vertex plus the direction sequence.
// Construction checks that the start lies on the lattice and that the walk
// returns to it (which forces the length to be a multiple of a+b). Staying
// inside H is a property of downs-first walks from the origin, not of
// arbitrary cycles, so the operations that rely on it check it themselves.
class CylCycle {
 public:
  CylCycle(const Params& p, Vertex start, std::vector<Step> dirs)
      : params_(p), start_(start), dirs_(std::move(dirs)) {
    if (!on_lattice(params_, start_.x, start_.y))
      throw precondition_error("cycle start (" + std::to_string(start_.x) +
                               "," + std::to_string(start_.y) +
                               ") is not a lattice vertex");
    Vertex v = start_;
    for (Step s : dirs_) v = step_from(params_, v, s);
    if (!(v == start_))
      throw precondition_error(
          "direction sequence does not return to its start: not a cycle");
  }

  const Params& params() const { return params_; }
  const Vertex& start() const { return start_; }
  const std::vector<Step>& dirs() const { return dirs_; }
  std::size_t length() const { return dirs_.size(); }

  // Vertices in walk order: length()+1 entries, first and last the start.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(dirs_.size() + 1);
    Vertex v = start_;
    out.push_back(v);
    for (Step s : dirs_) {
      v = step_from(params_, v, s);
      out.push_back(v);
    }
    return out;
  }

  bool operator==(const CylCycle&) const = default;

 private:
  Params params_;
  Vertex start_;
  std::vector<Step> dirs_;
};

struct DownsFirstWitness {
  Vertex vertex;
  std::size_t up_step;    // 1-based position of the earlier up departure
  std::size_t down_step;  // 1-based position of the later down departure
};

// A cycle is downs-first when, at every vertex, all its down departures
// come before all its up departures in walk order. Returns the first
// violation in walk order, or nothing.
inline std::optional<DownsFirstWitness> downs_first_witness(const CylCycle& c) {
  const Params& p = c.params();
  std::unordered_map<long long, std::size_t> first_up;
  Vertex v = c.start();
  for (std::size_t i = 0; i < c.dirs().size(); ++i) {
    const long long key = vertex_key(p, v);
    const Step s = c.dirs()[i];
    if (s == Step::Up) {
      first_up.emplace(key, i + 1);  // keep the earliest
    } else {
      auto it = first_up.find(key);
      if (it != first_up.end())
        return DownsFirstWitness{v, it->second, i + 1};
    }
    v = step_from(p, v, s);
  }
  return std::nullopt;
}

inline bool is_downs_first(const CylCycle& c) {
  return !downs_first_witness(c).has_value();
}

// One trip around the cylinder from the origin: length a+b, and closing
// forces exactly b ups and a downs. Lap cycles always stay inside H.
class LapCycle {
 public:
  LapCycle(const Params& p, std::vector<Step> dirs)
      : params_(p), dirs_(std::move(dirs)) {
    if (dirs_.size() != static_cast<std::size_t>(params_.modulus()))
      throw precondition_error("lap cycle must have length a+b, got " +
                               std::to_string(dirs_.size()));
    const long long ups = std::count(dirs_.begin(), dirs_.end(), Step::Up);
    if (ups != params_.b)
      throw precondition_error("lap cycle must contain exactly b up-steps");
  }

  const Params& params() const { return params_; }
  const std::vector<Step>& dirs() const { return dirs_; }

  // Height at each column x = 0..a+b-1 (a lap visits every column once);
  // profile()[0] is always 0.
  std::vector<long long> profile() const {
    std::vector<long long> h(params_.modulus());
    long long cur = 0;
    for (int x = 0; x < params_.modulus(); ++x) {
      h[x] = cur;
      cur += step_value(params_, dirs_[x]);
    }
    return h;
  }

  CylCycle to_cycle() const { return CylCycle(params_, Vertex{0, 0}, dirs_); }

  std::string dir_string() const {
    std::string s;
    s.reserve(dirs_.size());
    for (Step d : dirs_) s += step_char(d);
    return s;
  }

  bool operator==(const LapCycle&) const = default;

 private:
  Params params_;
  std::vector<Step> dirs_;
};

// All C(a+b, a) lap cycles in lexicographic order of their direction
// strings, D before U.
inline std::vector<LapCycle> enumerate_lap_cycles(const Params& p) {
  std::vector<Step> dirs(static_cast<std::size_t>(p.a), Step::Down);
  dirs.insert(dirs.end(), static_cast<std::size_t>(p.b), Step::Up);
  std::vector<LapCycle> out;
  do {
    out.emplace_back(p, dirs);
  } while (std::next_permutation(dirs.begin(), dirs.end()));
  return out;
}

// Text form "x,y:DIRS", e.g. "0,0:UDDUDD". An empty cycle at (0,0) is
// "0,0:".
inline std::string format_cycle(const CylCycle& c) {
  std::string s = std::to_string(c.start().x) + "," +
                  std::to_string(c.start().y) + ":";
  for (Step d : c.dirs()) s += step_char(d);
  return s;
}

inline CylCycle parse_cycle(const Params& p, std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw parse_error("empty cycle text, expected \"x,y:DIRS\"");
  text = text.substr(first, last - first + 1);

  const auto comma = text.find(',');
  const auto colon = text.find(':');
  if (comma == std::string_view::npos || colon == std::string_view::npos ||
      colon < comma)
    throw parse_error("bad cycle text, expected \"x,y:DIRS\"");
  int x = 0;
  long long y = 0;
  try {
    std::size_t used = 0;
    std::string xs(text.substr(0, comma));
    x = std::stoi(xs, &used);
    if (used != xs.size()) throw parse_error("trailing characters after x");
    std::string ys(text.substr(comma + 1, colon - comma - 1));
    y = std::stoll(ys, &used);
    if (used != ys.size()) throw parse_error("trailing characters after y");
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("bad cycle start coordinates in \"" +
                      std::string(text.substr(0, colon)) + "\"");
  }
  std::vector<Step> dirs;
  dirs.reserve(text.size() - colon - 1);
  for (char c : text.substr(colon + 1)) dirs.push_back(step_from_char(c));
  return CylCycle(p, Vertex{x, y}, std::move(dirs));
}

}  // namespace cylpath
