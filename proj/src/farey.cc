#include "overtwist/farey.h"

#include <algorithm>

#include "overtwist/error.h"

namespace overtwist {

Rational lf(int p, int q) {
  if (p < 1 || q < 2 || 2 * p > q)
    throw RhoOutOfRange("lf needs 0 < p/q <= 1/2, got " + std::to_string(p) + "/" + std::to_string(q));
  Rational best(0);
  for (int k = 1; k < q; ++k) {
    // largest l with l/k < p/q, i.e. l*q < p*k
    const std::int64_t l = (static_cast<std::int64_t>(p) * k - 1) / q;
    best = std::max(best, Rational(l, k));
  }
  return best;
}

}  // namespace overtwist
