#pragma once

#include <cstdint>
#include <vector>

namespace overtwist {

enum class Sharpness { sharper, equal, duller };

// Position of m relative to n in the Sharkovsky ordering
// 3, 5, 7, ..., 2*3, 2*5, ..., 4*3, ..., 8, 4, 2, 1.
Sharpness sharkovsky_compare(std::int64_t m, std::int64_t n);

// Argument of Sh(.): a positive integer or the type 2^infinity.
struct SharkovskyType {
  std::int64_t value = 1;
  bool two_to_infinity = false;

  static SharkovskyType power_of_two_limit() { return {0, true}; }
};

// Members of Sh(k) not exceeding bound, sharpest first. Sh(k) is k together
// with everything k is sharper than; Sh(2^inf) is the set of powers of two,
// which has no sharpest member and is listed in increasing order instead.
std::vector<std::int64_t> sharkovsky_tail(SharkovskyType k, std::int64_t bound);

}  // namespace overtwist
