#include "overtwist/classify.h"

#include "overtwist/error.h"
#include "overtwist/markov.h"

namespace overtwist {

bool is_overtwist(const Pattern& pattern) {
  return is_convergent(pattern) && code_class(pattern) == CodeClass::strictly_monotone;
}

bool has_block_structure_over_overtwist(const Pattern& pattern) {
  const Rational rho = over_rotation_pair(pattern).rho();
  for (const BlockDecomposition& b : block_decompositions(pattern))
    if (b.quotient.period() >= 2 && is_overtwist(b.quotient) && over_rotation_pair(b.quotient).rho() == rho)
      return true;
  return false;
}

bool is_very_badly_ordered(const Pattern& pattern) {
  require_convergent(pattern);
  const bool by_code = code_class(pattern) != CodeClass::not_nondecreasing;
  const Rational r = min_cycle_mean(build_markov(pattern)).r;
  const bool by_markov = r == over_rotation_pair(pattern).rho();
  if (by_code != by_markov)
    throw InternalError("pattern " + pattern.str() + ": code route says r = rho is " + (by_code ? "true" : "false") +
                        ", minimum cycle mean is " + r.str());
  return by_code && !is_overtwist(pattern) && !has_block_structure_over_overtwist(pattern);
}

}  // namespace overtwist
