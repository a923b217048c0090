#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "overtwist/rational.h"

namespace overtwist {

// A cyclic permutation of {1..n} in spatial (left to right) labeling.
//
// image(i) is the spatial index of the image of the i-th point from the left;
// both i and image(i) are 1-based. A Pattern can only be constructed from a
// single n-cycle with n >= 2, so every instance satisfies those invariants.
class Pattern {
 public:
  explicit Pattern(std::vector<int> images);

  int period() const { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  std::span<const int> images() const { return images_; }

  // Single-space one-line notation, the canonical serialization.
  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

// Accepts one-line notation "2 4 6 5 3 1" or cycle notation "(1 2 4 5 3 6)";
// a trailing repeat of the first element, as in "(1 2 4 5 3 6 1)", is allowed.
// Throws ParseError for malformed text and InvalidPattern when the text is
// well formed but does not describe a single cycle of length >= 2.
Pattern parse_pattern(std::string_view text);

// Pattern of a finite set of distinct reals given in temporal order
// (orbit[j + 1] is the image of orbit[j], the last point maps to the first).
Pattern pattern_of_orbit(std::span<const Rational> orbit);

struct OverRotationPair {
  int p = 0;
  int q = 0;

  Rational rho() const { return Rational(p, q); }
  bool coprime() const;

  friend bool operator==(const OverRotationPair&, const OverRotationPair&) = default;
};

OverRotationPair over_rotation_pair(const Pattern& pattern);

// No x < y with f(x) < x and f(y) > y.
bool is_convergent(const Pattern& pattern);

// Throws DivergentPattern unless is_convergent(pattern).
void require_convergent(const Pattern& pattern);

// Spatial index i of the unique basic interval [i, i+1] whose left endpoint
// moves right and right endpoint moves left. Requires a convergent pattern.
int turning_interval(const Pattern& pattern);

// Fixed point a of the P-linear map with points embedded at 1..n.
Rational fixed_point(const Pattern& pattern);

enum class Side { left, right };

struct CodeTable {
  std::vector<Rational> values;  // values[i - 1] = L(point i)
  Rational fixed_point;
  std::vector<Side> side;        // side[i - 1] relative to fixed_point

  const Rational& at(int point) const { return values[static_cast<std::size_t>(point - 1)]; }
};

// Code L with L(leftmost) = 0 and L(f(y)) = L(y) + rho - phi(y), where phi(y)
// is 1 exactly when y lies right of a and f(y) left of it.
CodeTable code(const Pattern& pattern);

enum class CodeClass { strictly_monotone, nondecreasing_not_monotone, not_nondecreasing };

// Classifies L along >_a on each side of a: moving away from a the code must
// strictly decrease (strictly_monotone) or weakly decrease with at least one
// tie (nondecreasing_not_monotone).
CodeClass code_class(const Pattern& pattern);
CodeClass code_class(const CodeTable& table);

std::string to_string(CodeClass c);

struct BlockDecomposition {
  int block_size;
  Pattern quotient;
};

// All block structures; an empty result means the pattern is irreducible.
std::vector<BlockDecomposition> block_decompositions(const Pattern& pattern);

bool is_unimodal(const Pattern& pattern);

// Spatial index of the maximum; throws NotUnimodal for non-unimodal input.
// The maximum may sit at point 1 (monotone decreasing patterns such as [2,1]).
int max_point(const Pattern& pattern);

}  // namespace overtwist
