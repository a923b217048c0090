#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "overtwist/pattern.h"
#include "overtwist/plinear.h"
#include "overtwist/rational.h"

namespace overtwist {

struct MarkovNode {
  Rational lo;
  Rational hi;
  Side side;      // relative to the fixed point a
  int segment;    // P-basic interval [segment, segment + 1] containing this node
};

struct MarkovEdge {
  int from;
  int to;
  int weight;  // 1 iff the endpoints lie on opposite sides of a

  friend bool operator==(const MarkovEdge&, const MarkovEdge&) = default;
};

// Covering graph of the P ∪ {a}-basic intervals of a convergent pattern.
// Node (I, J) is an edge iff f(I) ⊇ J for the P-linear map f. Nodes are
// ordered left to right; edges are sorted by (from, to).
class MarkovGraph {
 public:
  explicit MarkovGraph(const Pattern& pattern);

  const Pattern& pattern() const { return map_.pattern(); }
  const PLinearMap& map() const { return map_; }
  const Rational& fixed_point() const { return fixed_point_; }

  int size() const { return static_cast<int>(nodes_.size()); }
  const MarkovNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const std::vector<MarkovNode>& nodes() const { return nodes_; }
  const std::vector<MarkovEdge>& edges() const { return edges_; }
  const std::vector<int>& successors(int i) const { return successors_[static_cast<std::size_t>(i)]; }

  bool has_edge(int from, int to) const;
  int weight(int from, int to) const;

  // Node index of the basic interval containing x (x not in P ∪ {a}).
  int node_containing(const Rational& x) const;

 private:
  PLinearMap map_;
  Rational fixed_point_;
  std::vector<MarkovNode> nodes_;
  std::vector<MarkovEdge> edges_;
  std::vector<std::vector<int>> successors_;
};

MarkovGraph build_markov(const Pattern& pattern);

struct CycleMean {
  Rational r;                         // left endpoint of the over-rotation interval
  bool infimum_not_attained = false;  // a zero-weight cycle shares a component with a positive one
};

// r = (minimum mean edge weight over cycles in components that carry a
// positive-weight cycle) / 2, via Karp's algorithm in exact arithmetic.
CycleMean min_cycle_mean(const MarkovGraph& graph);

struct OverRotationInterval {
  Rational left;
  Rational right{1, 2};
  bool left_attained = true;
};

OverRotationInterval over_rotation_interval(const Pattern& pattern);

using Loop = std::vector<int>;

// Calls visit for every primitive closed walk of length <= max_len, each
// reported once in its lexicographically least rotation. Order is by start
// node, then depth-first over successors in index order.
void for_each_loop(const MarkovGraph& graph, int max_len, const std::function<void(const Loop&)>& visit);

// Same walks, sorted by (length, node sequence).
std::vector<Loop> enumerate_loops(const MarkovGraph& graph, int max_len);

struct ForcedCycle {
  Pattern pattern;
  OverRotationPair orp;
  std::vector<Rational> witness;  // one orbit in temporal order, starting in loop[0]
  Loop loop;
  bool degenerate = false;        // composite branch had slope 1; witness is a midpoint representative
};

// Periodic orbit of f_P following loop, if the loop carries one away from a.
std::optional<ForcedCycle> loop_to_orbit(const MarkovGraph& graph, const Loop& loop);
std::optional<ForcedCycle> loop_to_orbit(const Pattern& pattern, const Loop& loop);

// Distinct patterns of periodic orbits of f_P with period <= max_period,
// ordered by (period, one-line images).
std::vector<ForcedCycle> forced_cycles_up_to(const Pattern& pattern, int max_period);

// Two intervals with disjoint interiors, endpoints in P ∪ Fix(f_P), each of
// whose images covers their union. Works for divergent patterns too.
struct Horseshoe {
  Rational i_lo, i_hi, j_lo, j_hi;
};
std::optional<Horseshoe> find_horseshoe(const Pattern& pattern);
bool has_horseshoe(const Pattern& pattern);

// Graphviz rendering; byte-stable for a given pattern.
std::string to_dot(const MarkovGraph& graph);

}  // namespace overtwist
