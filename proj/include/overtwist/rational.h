#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace overtwist {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

// Exact fraction over 64-bit integers.
//
// Always kept in lowest terms with a positive denominator, so equal values
// have equal representations and defaulted equality is exact. Intermediate
// products are formed in 128 bits; a result that does not fit back into 64
// bits throws std::overflow_error rather than silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  // "p/q", always with an explicit denominator ("0/1", "3/1").
  std::string str() const;

 private:
  static Rational from_wide(detail::wide_int numerator, detail::wide_int denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational midpoint(const Rational& a, const Rational& b);

}  // namespace overtwist
