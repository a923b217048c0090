#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "overtwist/pattern.h"

namespace overtwist {

// Eventually periodic word over {L, C, R}: preperiod followed by period
// repeated forever. Construction canonicalizes (primitive period, shortest
// preperiod), so two sequences are equal iff their parts are equal.
class KneadingSequence {
 public:
  KneadingSequence(std::string preperiod, std::string period);

  const std::string& preperiod() const { return preperiod_; }
  const std::string& period() const { return period_; }

  // Symbol at 0-based position i.
  char at(std::size_t i) const;

  // First count symbols.
  std::string prefix(std::size_t count) const;

  // sigma^j
  KneadingSequence shifted(std::size_t j) const;

  // "RL(RRLRR)^inf"
  std::string str() const;

  friend bool operator==(const KneadingSequence&, const KneadingSequence&) = default;

 private:
  std::string preperiod_;
  std::string period_;
};

KneadingSequence parse_kneading(std::string_view text);

enum class Order { a_greater, equal, b_greater };

struct Comparison {
  Order order = Order::equal;
  std::size_t first_difference = 0;  // 0-based; meaningless when equal
  std::size_t r_count = 0;           // R symbols strictly before first_difference
  bool hit_c = false;                // a C sits at the first difference
};

// Parity order on itineraries with L < C < R: at the first difference the
// larger symbol wins after an even number of R's, the smaller after an odd
// number. Terminates within max preperiod + lcm of the period lengths.
Comparison compare(const KneadingSequence& a, const KneadingSequence& b);

bool is_shift_maximal(const KneadingSequence& a);

// Symbols of the forward orbit of start against the turning point of a unimodal pattern.
KneadingSequence itinerary_of_point(const Pattern& pattern, int start);

// Itinerary of the image of the turning point.
KneadingSequence kneading_of_pattern(const Pattern& pattern);

// nu_{p/q}: itinerary of rho under x -> x + rho mod 1; C at 0, R on (0, 2rho), L on [2rho, 1).
// Requires gcd(p, q) = 1 and 0 < p/q < 1/2.
KneadingSequence rotation_kneading(int p, int q);

// nu'_{p/q}, the strongest kneading sequence whose over-rotation interval is
// [p/q, 1/2]. Built by the symbol rules and by the CRL -> LRR substitution;
// throws InternalError if the two disagree.
KneadingSequence strongest_kneading(int p, int q);

// The two routes, exposed for testing.
KneadingSequence strongest_kneading_by_rules(int p, int q);
KneadingSequence strongest_kneading_by_substitution(int p, int q);

enum class IntervalClass { equals, strictly_contains, does_not_contain };

std::string to_string(IntervalClass c);

// Position of the over-rotation interval of f_P relative to [p/q, 1/2],
// decided from nu' >= nu(P) >= nu. For period <= markov_check_bound the answer
// is cross-checked against the minimum cycle mean; disagreement throws
// InternalError.
IntervalClass interval_class(const Pattern& pattern, int p, int q, int markov_check_bound = 16);

}  // namespace overtwist
