#include "overtwist/sharkovsky.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace overtwist {

namespace {

// Smaller key means sharper.
std::tuple<int, std::int64_t, std::int64_t> rank_key(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("Sharkovsky ordering is defined on positive integers");
  std::int64_t exponent = 0;
  std::int64_t odd = m;
  while (odd % 2 == 0) {
    odd /= 2;
    ++exponent;
  }
  if (odd > 1) return {0, exponent, odd};
  return {1, -exponent, 0};
}

}  // namespace

Sharpness sharkovsky_compare(std::int64_t m, std::int64_t n) {
  auto a = rank_key(m);
  auto b = rank_key(n);
  if (a < b) return Sharpness::sharper;
  if (b < a) return Sharpness::duller;
  return Sharpness::equal;
}

std::vector<std::int64_t> sharkovsky_tail(SharkovskyType k, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= bound; ++m) {
    bool member = false;
    if (k.two_to_infinity)
      member = (m & (m - 1)) == 0;
    else
      member = sharkovsky_compare(k.value, m) != Sharpness::duller;
    if (member) out.push_back(m);
  }
  // Sh(2^inf) has no sharpest member; it is enumerated upward.
  if (k.two_to_infinity) return out;
  std::sort(out.begin(), out.end(), [](std::int64_t a, std::int64_t b) {
    return sharkovsky_compare(a, b) == Sharpness::sharper;
  });
  return out;
}

}  // namespace overtwist
