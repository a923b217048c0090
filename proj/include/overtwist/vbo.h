#pragma once

#include <optional>
#include <string>
#include <vector>

#include "overtwist/kneading.h"
#include "overtwist/pattern.h"

namespace overtwist {

// The unimodal over-twist pattern of over-rotation number p/q:
//   j + p            for 1 <= j <= q - 2p
//   2q - 2p + 1 - j  for q - 2p < j <= q - p
//   q + 1 - j        for q - p < j <= q
// Requires gcd(p, q) = 1 and 2p < q, or (p, q) = (1, 2).
Pattern gamma(int p, int q);

struct LiftedPoint {
  int copy;      // 1..k; copy 1 is outermost (farthest from the fixed point)
  int time;      // 1..q; time 1 is the turning point of the copy
  int slot;      // spatial index within the copy's gamma pattern
  int position;  // spatial index among all k*q points
};

// k interleaved copies of gamma(p, q). Points of equal slot sit next to each
// other; left of the fixed point copy 1 is leftmost, right of it rightmost.
// The premap sends every point to the next point of its own copy.
struct Lifting {
  int k;
  int p;
  int q;
  std::vector<LiftedPoint> points;  // indexed by position - 1
  std::vector<int> premap;          // premap[position - 1] = image position

  int position(int copy, int time) const;
  const LiftedPoint& at(int position) const { return points[static_cast<std::size_t>(position - 1)]; }
};

Lifting k_tuple_lifting(int k, int p, int q);

// Rewires the lifting into one cycle: the leftmost point of copy 1 goes to
// m_2, the preimage of m_i in copy i goes to m_{i+1} for 1 < i < k, and the
// preimage of m_k in copy k takes over the old image of copy 1's leftmost
// point. Here m_i is the p-th point from the left of copy i.
Pattern glue(const Lifting& lifting);

// glue(k_tuple_lifting(k, p, q)): a unimodal very badly ordered cycle of
// over-rotation pair (kp, kq).
Pattern vbo_build(int k, int p, int q);

struct VboReport {
  int k = 0;                      // period / q
  bool unimodal = false;
  std::optional<OverRotationPair> orp;
  bool orp_matches = false;       // orp == (kp, kq)
  std::optional<CodeClass> code_class;
  bool code_route = false;        // code non-decreasing and rho == p/q
  std::optional<KneadingSequence> kneading;
  bool kneading_route = false;    // nu'_{p/q} >= nu(P) >= nu_{p/q}
  std::optional<Rational> r;
  bool markov_route = false;      // minimum cycle mean gives r == p/q
  bool overtwist = false;
  bool block_over_overtwist = false;
  bool very_badly_ordered = false;
  bool irreducible = false;       // observation only: no block structure at all
  bool routes_agree = true;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Checks that pattern is a unimodal very badly ordered cycle over p/q, by the
// code, the kneading sandwich and the minimum cycle mean. Each failed check
// adds an entry to failures naming the route.
VboReport verify_vbo(const Pattern& pattern, int p, int q);

}  // namespace overtwist
