#include "overtwist/markov.h"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "overtwist/error.h"

namespace overtwist {

MarkovGraph::MarkovGraph(const Pattern& pattern) : map_(pattern), fixed_point_(overtwist::fixed_point(pattern)) {
  const int n = pattern.period();
  const int turn = turning_interval(pattern);
  for (int i = 1; i < n; ++i) {
    if (i == turn) {
      nodes_.push_back({Rational(i), fixed_point_, Side::left, i});
      nodes_.push_back({fixed_point_, Rational(i + 1), Side::right, i});
    } else {
      nodes_.push_back({Rational(i), Rational(i + 1), i < turn ? Side::left : Side::right, i});
    }
  }
  successors_.resize(nodes_.size());
  for (int from = 0; from < size(); ++from) {
    const MarkovNode& src = node(from);
    const Affine b = map_.branch(src.segment);
    const Rational u = b(src.lo);
    const Rational v = b(src.hi);
    const Rational lo = std::min(u, v);
    const Rational hi = std::max(u, v);
    for (int to = 0; to < size(); ++to) {
      const MarkovNode& dst = node(to);
      if (dst.lo >= lo && dst.hi <= hi) {
        edges_.push_back({from, to, src.side == dst.side ? 0 : 1});
        successors_[static_cast<std::size_t>(from)].push_back(to);
      }
    }
  }
}

bool MarkovGraph::has_edge(int from, int to) const {
  if (from < 0 || from >= size()) return false;
  const auto& s = successors(from);
  return std::binary_search(s.begin(), s.end(), to);
}

int MarkovGraph::weight(int from, int to) const { return node(from).side == node(to).side ? 0 : 1; }

int MarkovGraph::node_containing(const Rational& x) const {
  for (int i = 0; i < size(); ++i)
    if (node(i).lo < x && x < node(i).hi) return i;
  throw std::out_of_range("point " + x.str() + " is not interior to a basic interval");
}

MarkovGraph build_markov(const Pattern& pattern) { return MarkovGraph(pattern); }

namespace {

// Tarjan's algorithm; returns component id per node.
class Components {
 public:
  explicit Components(const MarkovGraph& g) : g_(g) {
    const auto n = static_cast<std::size_t>(g.size());
    index_.assign(n, -1);
    low_.assign(n, 0);
    on_stack_.assign(n, false);
    comp_.assign(n, -1);
    for (int v = 0; v < g.size(); ++v)
      if (index_[static_cast<std::size_t>(v)] < 0) visit(v);
  }

  int count() const { return count_; }
  int of(int v) const { return comp_[static_cast<std::size_t>(v)]; }

 private:
  void visit(int v) {
    const auto vi = static_cast<std::size_t>(v);
    index_[vi] = low_[vi] = next_++;
    stack_.push_back(v);
    on_stack_[vi] = true;
    for (int w : g_.successors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (index_[wi] < 0) {
        visit(w);
        low_[vi] = std::min(low_[vi], low_[wi]);
      } else if (on_stack_[wi]) {
        low_[vi] = std::min(low_[vi], index_[wi]);
      }
    }
    if (low_[vi] == index_[vi]) {
      int w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[static_cast<std::size_t>(w)] = false;
        comp_[static_cast<std::size_t>(w)] = count_;
      } while (w != v);
      ++count_;
    }
  }

  const MarkovGraph& g_;
  std::vector<int> index_, low_, comp_, stack_;
  std::vector<bool> on_stack_;
  int next_ = 0;
  int count_ = 0;
};

// Karp's minimum cycle mean on a strongly connected subgraph given by its
// member nodes; edges leaving the member set are ignored.
Rational karp(const MarkovGraph& g, const std::vector<int>& members) {
  const int m = static_cast<int>(members.size());
  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;

  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  // dist[k][v]: minimum weight of a walk with exactly k edges from members[0] to v
  std::vector<std::vector<std::int64_t>> dist(static_cast<std::size_t>(m + 1),
                                              std::vector<std::int64_t>(static_cast<std::size_t>(m), inf));
  dist[0][0] = 0;
  for (int k = 1; k <= m; ++k) {
    for (int u = 0; u < m; ++u) {
      const std::int64_t du = dist[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(u)];
      if (du == inf) continue;
      const int gu = members[static_cast<std::size_t>(u)];
      for (int gv : g.successors(gu)) {
        const int v = local[static_cast<std::size_t>(gv)];
        if (v < 0) continue;
        auto& dv = dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
        dv = std::min(dv, du + g.weight(gu, gv));
      }
    }
  }
  std::optional<Rational> best;
  for (int v = 0; v < m; ++v) {
    const std::int64_t dn = dist[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)];
    if (dn == inf) continue;
    std::optional<Rational> worst;
    for (int k = 0; k < m; ++k) {
      const std::int64_t dk = dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
      if (dk == inf) continue;
      Rational candidate(dn - dk, m - k);
      if (!worst || candidate > *worst) worst = candidate;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  if (!best) throw InternalError("strongly connected component without a cycle");
  return *best;
}

}  // namespace

CycleMean min_cycle_mean(const MarkovGraph& graph) {
  Components comps(graph);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(comps.count()));
  std::vector<bool> positive(static_cast<std::size_t>(comps.count()), false);
  std::vector<bool> cyclic(static_cast<std::size_t>(comps.count()), false);
  for (int v = 0; v < graph.size(); ++v) members[static_cast<std::size_t>(comps.of(v))].push_back(v);
  for (const MarkovEdge& e : graph.edges()) {
    if (comps.of(e.from) != comps.of(e.to)) continue;
    const auto c = static_cast<std::size_t>(comps.of(e.from));
    cyclic[c] = true;
    if (e.weight > 0) positive[c] = true;
  }
  std::optional<CycleMean> best;
  for (std::size_t c = 0; c < members.size(); ++c) {
    if (!cyclic[c] || !positive[c]) continue;
    const Rational mean = karp(graph, members[c]);
    CycleMean candidate{mean / 2, mean.is_zero()};
    if (!best || candidate.r < best->r) best = candidate;
  }
  if (!best) throw InternalError("no cycle in the Markov graph of " + graph.pattern().str());
  return *best;
}

OverRotationInterval over_rotation_interval(const Pattern& pattern) {
  const CycleMean m = min_cycle_mean(build_markov(pattern));
  return {m.r, Rational(1, 2), !m.infimum_not_attained};
}

namespace {

// Lyndon test: strictly smaller than every proper rotation (hence primitive).
bool is_least_primitive_rotation(const Loop& w) {
  const std::size_t n = w.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t i = 0; i < n; ++i) {
      const int a = w[i];
      const int b = w[(i + shift) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: not primitive
    }
  }
  return true;
}

void extend(const MarkovGraph& g, int max_len, Loop& path, const std::function<void(const Loop&)>& visit) {
  const int start = path.front();
  const int last = path.back();
  if (g.has_edge(last, start) && is_least_primitive_rotation(path)) visit(path);
  if (static_cast<int>(path.size()) == max_len) return;
  for (int next : g.successors(last)) {
    if (next < start) continue;
    path.push_back(next);
    extend(g, max_len, path, visit);
    path.pop_back();
  }
}

}  // namespace

void for_each_loop(const MarkovGraph& graph, int max_len, const std::function<void(const Loop&)>& visit) {
  if (max_len < 1) return;
  Loop path;
  path.reserve(static_cast<std::size_t>(max_len));
  for (int s = 0; s < graph.size(); ++s) {
    path.assign(1, s);
    extend(graph, max_len, path, visit);
  }
}

std::vector<Loop> enumerate_loops(const MarkovGraph& graph, int max_len) {
  std::vector<Loop> out;
  for_each_loop(graph, max_len, [&](const Loop& l) { out.push_back(l); });
  std::sort(out.begin(), out.end(), [](const Loop& a, const Loop& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

struct Interval {
  Rational lo, hi;
  bool empty() const { return lo > hi; }
};

// {x in domain : map(x) in target}; map has nonzero slope.
Interval pull_back(const Interval& domain, const Affine& map, const Rational& lo, const Rational& hi) {
  Rational a = (lo - map.offset) / map.slope;
  Rational b = (hi - map.offset) / map.slope;
  if (a > b) std::swap(a, b);
  return {std::max(domain.lo, a), std::min(domain.hi, b)};
}

}  // namespace

namespace {

struct LoopBranch {
  Interval domain;   // points of the first node that follow the loop
  Affine composite;  // f^k on domain
};

std::optional<LoopBranch> loop_branch(const MarkovGraph& graph, const Loop& loop) {
  if (loop.empty()) throw LoopNotInGraph("empty loop");
  const std::size_t k = loop.size();
  for (std::size_t j = 0; j < k; ++j) {
    if (loop[j] < 0 || loop[j] >= graph.size() || !graph.has_edge(loop[j], loop[(j + 1) % k]))
      throw LoopNotInGraph("loop step " + std::to_string(j) + " is not an edge of the Markov graph");
  }
  const MarkovNode& first = graph.node(loop[0]);
  LoopBranch b{{first.lo, first.hi}, {}};
  for (std::size_t j = 0; j < k; ++j) {
    const MarkovNode& nd = graph.node(loop[j]);
    b.domain = pull_back(b.domain, b.composite, nd.lo, nd.hi);
    if (b.domain.empty()) return std::nullopt;
    b.composite = graph.map().branch(nd.segment).after(b.composite);
  }
  return b;
}

// Least t >= 1 with f^t(x) = x, capped at k + 1.
std::size_t period_of(const MarkovGraph& graph, const Rational& x, std::size_t k) {
  Rational y = graph.map()(x);
  std::size_t t = 1;
  while (y != x && t <= k) {
    y = graph.map()(y);
    ++t;
  }
  return t;
}

}  // namespace

std::optional<ForcedCycle> loop_to_orbit(const MarkovGraph& graph, const Loop& loop) {
  const std::size_t k = loop.size();
  const auto branch = loop_branch(graph, loop);
  if (!branch) return std::nullopt;
  const Interval& domain = branch->domain;
  const Affine& composite = branch->composite;

  Rational start;
  bool degenerate = false;
  if (composite.slope != Rational(1)) {
    start = composite.offset / (Rational(1) - composite.slope);
    if (start < domain.lo || start > domain.hi) return std::nullopt;
  } else {
    if (!composite.offset.is_zero()) return std::nullopt;
    // f^k is the identity here; the midpoint can sit on a shorter orbit
    // (the centre of a reversing isometry), the quarter point cannot.
    start = midpoint(domain.lo, domain.hi);
    if (period_of(graph, start, k) < k) start = midpoint(domain.lo, start);
    degenerate = true;
  }

  std::vector<Rational> orbit{start};
  Rational x = start;
  for (std::size_t j = 0; j < k; ++j) {
    if (x == graph.fixed_point()) return std::nullopt;
    x = graph.map()(x);
    if (j + 1 < k) orbit.push_back(x);
  }
  if (x != start) throw InternalError("loop solution is not periodic");

  std::size_t period = 1;
  while (period < k && orbit[period] != orbit[0]) ++period;
  orbit.resize(period);
  if (period < 2) return std::nullopt;

  Pattern p = pattern_of_orbit(orbit);
  OverRotationPair orp = over_rotation_pair(p);
  return ForcedCycle{std::move(p), orp, std::move(orbit), loop, degenerate};
}

std::optional<ForcedCycle> loop_to_orbit(const Pattern& pattern, const Loop& loop) {
  return loop_to_orbit(build_markov(pattern), loop);
}

std::vector<ForcedCycle> forced_cycles_up_to(const Pattern& pattern, int max_period) {
  const MarkovGraph graph = build_markov(pattern);
  auto earlier = [](const Loop& a, const Loop& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::map<Pattern, ForcedCycle> found;
  auto record = [&](const Loop& loop) {
    auto cycle = loop_to_orbit(graph, loop);
    if (!cycle) return;
    auto it = found.find(cycle->pattern);
    if (it == found.end())
      found.emplace(cycle->pattern, std::move(*cycle));
    else if (earlier(loop, it->second.loop))
      it->second = std::move(*cycle);
  };
  for_each_loop(graph, max_period, [&](const Loop& loop) {
    record(loop);
    // A reversing isometry along the loop makes f^{2k} the identity, so
    // orbits of twice the length follow the loop traversed twice.
    if (2 * static_cast<int>(loop.size()) > max_period) return;
    const auto branch = loop_branch(graph, loop);
    if (!branch || branch->composite.slope != Rational(-1)) return;
    Loop twice = loop;
    twice.insert(twice.end(), loop.begin(), loop.end());
    record(twice);
  });
  std::vector<ForcedCycle> out;
  for (auto& [pat, cycle] : found) out.push_back(std::move(cycle));
  std::stable_sort(out.begin(), out.end(), [](const ForcedCycle& a, const ForcedCycle& b) {
    return a.pattern.period() < b.pattern.period();
  });
  return out;
}

std::optional<Horseshoe> find_horseshoe(const Pattern& pattern) {
  const PLinearMap f(pattern);
  std::vector<Rational> ends;
  for (int x = 1; x <= pattern.period(); ++x) ends.emplace_back(x);
  for (const Rational& a : f.fixed_points()) ends.push_back(a);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  const std::size_t m = ends.size();
  std::vector<std::vector<std::pair<Rational, Rational>>> hull(m, std::vector<std::pair<Rational, Rational>>(m));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) hull[u][v] = f.image_hull(ends[u], ends[v]);

  auto covers = [&](std::size_t u, std::size_t v, const Rational& lo, const Rational& hi) {
    return hull[u][v].first <= lo && hull[u][v].second >= hi;
  };
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      for (std::size_t w = v; w < m; ++w)
        for (std::size_t z = w + 1; z < m; ++z)
          if (covers(u, v, ends[u], ends[z]) && covers(w, z, ends[u], ends[z]))
            return Horseshoe{ends[u], ends[v], ends[w], ends[z]};
  return std::nullopt;
}

bool has_horseshoe(const Pattern& pattern) { return find_horseshoe(pattern).has_value(); }

namespace {

std::string compact(const Rational& r) {
  return r.is_integer() ? std::to_string(r.numerator()) : r.str();
}

}  // namespace

std::string to_dot(const MarkovGraph& graph) {
  std::ostringstream out;
  out << "digraph markov {\n";
  out << "  // pattern " << graph.pattern().str() << ", fixed point " << graph.fixed_point().str() << "\n";
  for (int i = 0; i < graph.size(); ++i) {
    const MarkovNode& nd = graph.node(i);
    out << "  n" << i << " [label=\"[" << compact(nd.lo) << "," << compact(nd.hi) << "] "
        << (nd.side == Side::left ? 'L' : 'R') << "\"];\n";
  }
  for (const MarkovEdge& e : graph.edges())
    out << "  n" << e.from << " -> n" << e.to << " [w=" << e.weight << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace overtwist
