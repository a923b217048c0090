#pragma once

#include "overtwist/pattern.h"

namespace overtwist {

// Convergent with strictly monotone code.
bool is_overtwist(const Pattern& pattern);

// Some block structure collapses the pattern onto an over-twist of the same
// over-rotation number.
bool has_block_structure_over_overtwist(const Pattern& pattern);

// Over-rotation number equals the left end of the forced over-rotation
// interval, yet there is no block structure over an over-twist of that number.
// The equality is decided from the code (non-decreasing) and independently
// from the minimum cycle mean; a disagreement throws InternalError.
// Throws DivergentPattern for divergent input.
bool is_very_badly_ordered(const Pattern& pattern);

}  // namespace overtwist
