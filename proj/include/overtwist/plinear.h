#pragma once

#include <vector>

#include "overtwist/pattern.h"
#include "overtwist/rational.h"

namespace overtwist {

// x -> slope * x + offset
struct Affine {
  Rational slope{1};
  Rational offset{0};

  Rational operator()(const Rational& x) const { return slope * x + offset; }

  // (*this)(inner(x))
  Affine after(const Affine& inner) const {
    return {slope * inner.slope, slope * inner.offset + offset};
  }
};

// The connect-the-dots map of a pattern with its points at 1..n.
class PLinearMap {
 public:
  explicit PLinearMap(Pattern pattern) : pattern_(std::move(pattern)) {}

  const Pattern& pattern() const { return pattern_; }

  // Linear branch on the basic interval [segment, segment + 1].
  Affine branch(int segment) const;

  // Evaluates f on [1, n]; throws std::out_of_range outside it.
  Rational operator()(const Rational& x) const;

  // Image hull [min f, max f] of the interval [lo, hi].
  std::pair<Rational, Rational> image_hull(const Rational& lo, const Rational& hi) const;

  // Every fixed point in [1, n], in increasing order.
  std::vector<Rational> fixed_points() const;

 private:
  Pattern pattern_;
};

}  // namespace overtwist
