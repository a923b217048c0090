#include "overtwist/plinear.h"

#include <algorithm>
#include <stdexcept>

namespace overtwist {

Affine PLinearMap::branch(int segment) const {
  const int fi = pattern_.image(segment);
  const int slope = pattern_.image(segment + 1) - fi;
  return {Rational(slope), Rational(fi - static_cast<std::int64_t>(slope) * segment)};
}

Rational PLinearMap::operator()(const Rational& x) const {
  const int n = pattern_.period();
  if (x < Rational(1) || x > Rational(n)) throw std::out_of_range("point outside [1, n]");
  // floor(x) for x >= 1
  int segment = static_cast<int>(x.numerator() / x.denominator());
  if (segment == n) segment = n - 1;
  return branch(segment)(x);
}

std::pair<Rational, Rational> PLinearMap::image_hull(const Rational& lo, const Rational& hi) const {
  Rational a = (*this)(lo);
  Rational b = (*this)(hi);
  Rational low = std::min(a, b);
  Rational high = std::max(a, b);
  for (int x = 1; x <= pattern_.period(); ++x) {
    Rational rx(x);
    if (rx <= lo || rx >= hi) continue;
    Rational fx(pattern_.image(x));
    low = std::min(low, fx);
    high = std::max(high, fx);
  }
  return {low, high};
}

std::vector<Rational> PLinearMap::fixed_points() const {
  std::vector<Rational> out;
  for (int i = 1; i < pattern_.period(); ++i) {
    const int fi = pattern_.image(i);
    const int fj = pattern_.image(i + 1);
    // Endpoints of P are never fixed, so a sign change of f(x) - x is needed.
    if ((fi > i) == (fj > i + 1)) continue;
    Affine b = branch(i);
    out.push_back(b.offset / (Rational(1) - b.slope));
  }
  return out;
}

}  // namespace overtwist
