#pragma once

#include "overtwist/rational.h"

namespace overtwist {

// Largest l/k < p/q with l >= 0 and 1 <= k < q, by direct search over k.
// Returns 0/1 when nothing positive qualifies (e.g. lf(1, 3)).
// Requires 0 < p/q <= 1/2 and q >= 2; p and q need not be coprime.
Rational lf(int p, int q);

}  // namespace overtwist
