#pragma once

// Sparse nonnegative edge weights on H. The map never stores zeros, so two
// weight functions are equal exactly when their maps are; iteration order is
// the serialization order (height descending, column ascending, up before
// down).

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cylpath/cylinder.hpp"
#include "cylpath/params.hpp"

namespace cylpath {

struct EdgeOrder {
  bool operator()(const Edge& l, const Edge& r) const {
    if (l.from.y != r.from.y) return l.from.y > r.from.y;
    if (l.from.x != r.from.x) return l.from.x < r.from.x;
    const int lo = l.dir == Step::Up ? 0 : 1;
    const int ro = r.dir == Step::Up ? 0 : 1;
    return lo < ro;
  }
};

class WeightFunction {
 public:
  using Map = std::map<Edge, long long, EdgeOrder>;

  explicit WeightFunction(const Params& p) : params_(p) {}

  // Checks every stored entry: positive weight, both endpoints inside H.
  WeightFunction(const Params& p, Map weights)
      : params_(p), weights_(std::move(weights)) {
    for (const auto& [e, wt] : weights_) {
      if (wt <= 0)
        throw precondition_error("stored edge weights must be positive");
      validate_edge(params_, e);
      total_ += wt;
    }
  }

  static void validate_edge(const Params& p, const Edge& e) {
    if (!vertex_valid(p, e.from.x, e.from.y))
      throw precondition_error("edge tail (" + std::to_string(e.from.x) + "," +
                               std::to_string(e.from.y) +
                               ") lies outside the bounded graph");
    const Vertex h = edge_head(p, e);
    if (!vertex_valid(p, h.x, h.y))
      throw precondition_error("edge head (" + std::to_string(h.x) + "," +
                               std::to_string(h.y) +
                               ") lies outside the bounded graph");
  }

  const Params& params() const { return params_; }
  const Map& map() const { return weights_; }
  long long total() const { return total_; }
  bool empty() const { return weights_.empty(); }

  long long weight(const Edge& e) const {
    const auto it = weights_.find(e);
    return it == weights_.end() ? 0 : it->second;
  }

  bool operator==(const WeightFunction& o) const {
    return params_ == o.params_ && weights_ == o.weights_;
  }

 private:
  Params params_;
  Map weights_;
  long long total_ = 0;
};

// Summed weight into each vertex equals summed weight out of it.
inline bool is_balanced(const WeightFunction& wf) {
  const Params& p = wf.params();
  std::unordered_map<long long, long long> net;  // vertex key -> out minus in
  for (const auto& [e, wt] : wf.map()) {
    net[vertex_key(p, e.from)] += wt;
    net[vertex_key(p, edge_head(p, e))] -= wt;
  }
  for (const auto& [k, v] : net)
    if (v != 0) return false;
  return true;
}

// Every vertex with positive out-weight is reachable from the origin along
// positive-weight edges. The empty function is connected.
inline bool is_origin_connected(const WeightFunction& wf) {
  if (wf.empty()) return true;
  const Params& p = wf.params();
  std::unordered_set<long long> seen{vertex_key(p, Vertex{0, 0})};
  std::vector<Vertex> stack{Vertex{0, 0}};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Step s : {Step::Down, Step::Up}) {
      if (wf.weight(Edge{v, s}) > 0) {
        const Vertex h = step_from(p, v, s);
        if (seen.insert(vertex_key(p, h)).second) stack.push_back(h);
      }
    }
  }
  for (const auto& [e, wt] : wf.map())
    if (!seen.count(vertex_key(p, e.from))) return false;
  return true;
}

inline long long out_weight(const WeightFunction& wf, const Vertex& v) {
  if (!vertex_valid(wf.params(), v.x, v.y))
    throw precondition_error("vertex (" + std::to_string(v.x) + "," +
                             std::to_string(v.y) +
                             ") lies outside the bounded graph");
  return wf.weight(Edge{v, Step::Up}) + wf.weight(Edge{v, Step::Down});
}

// True when the cycle's edge multiplicities fit under the weights.
inline bool covers(const WeightFunction& wf, const CylCycle& c) {
  if (!(wf.params() == c.params()))
    throw precondition_error("weight function and cycle parameters differ");
  WeightFunction::Map mult;
  Vertex v = c.start();
  for (Step s : c.dirs()) {
    ++mult[Edge{v, s}];
    v = step_from(c.params(), v, s);
  }
  for (const auto& [e, cnt] : mult)
    if (cnt > wf.weight(e)) return false;
  return true;
}

// Text form: one line "x y DIR weight" per positive edge, in map order.
inline std::string format_weights(const WeightFunction& wf) {
  std::string out;
  for (const auto& [e, wt] : wf.map()) {
    out += std::to_string(e.from.x) + " " + std::to_string(e.from.y) + " ";
    out += step_char(e.dir);
    out += " " + std::to_string(wt) + "\n";
  }
  return out;
}

inline WeightFunction parse_weights(const Params& p, std::string_view text) {
  WeightFunction::Map weights;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int x = 0;
    long long y = 0, wt = 0;
    std::string dir;
    std::string extra;
    if (!(ls >> x >> y >> dir >> wt) || dir.size() != 1 || (ls >> extra))
      throw parse_error("bad weight line " + std::to_string(lineno) +
                        ", expected \"x y DIR weight\": " + line);
    if (wt <= 0)
      throw parse_error("weight on line " + std::to_string(lineno) +
                        " must be positive");
    const Edge e{Vertex{x, y}, step_from_char(dir[0])};
    if (!weights.emplace(e, wt).second)
      throw parse_error("duplicate edge on weight line " +
                        std::to_string(lineno));
  }
  return WeightFunction(p, std::move(weights));
}

}  // namespace cylpath
