#include "overtwist/kneading.h"

#include <numeric>

#include "overtwist/error.h"
#include "overtwist/markov.h"

namespace overtwist {

namespace {

int symbol_value(char s) {
  switch (s) {
    case 'L': return 0;
    case 'C': return 1;
    case 'R': return 2;
  }
  throw ParseError(std::string("bad kneading symbol '") + s + "'");
}

void check_symbols(const std::string& word) {
  for (char s : word) symbol_value(s);
}

void check_rotation_number(int p, int q) {
  if (p < 1 || 2 * p >= q)
    throw RhoOutOfRange("need 0 < p/q < 1/2, got " + std::to_string(p) + "/" + std::to_string(q));
  if (std::gcd(p, q) != 1)
    throw BadParameters("p and q must be coprime, got " + std::to_string(p) + "/" + std::to_string(q));
}

}  // namespace

KneadingSequence::KneadingSequence(std::string preperiod, std::string period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw ParseError("kneading period must be nonempty");
  check_symbols(preperiod_);
  check_symbols(period_);
  const std::size_t n = period_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = period_[i] == period_[i - d];
    if (repeats) {
      period_.resize(d);
      break;
    }
  }
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    period_ = period_.back() + period_.substr(0, period_.size() - 1);
  }
}

char KneadingSequence::at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

std::string KneadingSequence::prefix(std::size_t count) const {
  std::string out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(at(i));
  return out;
}

KneadingSequence KneadingSequence::shifted(std::size_t j) const {
  if (j <= preperiod_.size()) return {preperiod_.substr(j), period_};
  const std::size_t r = (j - preperiod_.size()) % period_.size();
  return {"", period_.substr(r) + period_.substr(0, r)};
}

std::string KneadingSequence::str() const { return preperiod_ + "(" + period_ + ")^inf"; }

KneadingSequence parse_kneading(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.find(")^inf");
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      close + 5 != text.size())
    throw ParseError("malformed kneading sequence '" + std::string(text) + "'");
  return {std::string(text.substr(0, open)), std::string(text.substr(open + 1, close - open - 1))};
}

Comparison compare(const KneadingSequence& a, const KneadingSequence& b) {
  const std::size_t horizon = std::max(a.preperiod().size(), b.preperiod().size()) +
                              std::lcm(a.period().size(), b.period().size());
  Comparison out;
  for (std::size_t i = 0; i < horizon; ++i) {
    const char x = a.at(i);
    const char y = b.at(i);
    if (x == y) {
      if (x == 'R') ++out.r_count;
      continue;
    }
    out.first_difference = i;
    out.hit_c = x == 'C' || y == 'C';
    const bool a_larger_symbol = symbol_value(x) > symbol_value(y);
    const bool even = out.r_count % 2 == 0;
    out.order = (a_larger_symbol == even) ? Order::a_greater : Order::b_greater;
    return out;
  }
  out.order = Order::equal;
  out.first_difference = horizon;
  return out;
}

bool is_shift_maximal(const KneadingSequence& a) {
  const std::size_t shifts = a.preperiod().size() + a.period().size();
  for (std::size_t j = 1; j < shifts; ++j)
    if (compare(a, a.shifted(j)).order == Order::b_greater) return false;
  return true;
}

KneadingSequence itinerary_of_point(const Pattern& pattern, int start) {
  const int c = max_point(pattern);
  if (start < 1 || start > pattern.period())
    throw InvalidPattern("start point " + std::to_string(start) + " outside the pattern");
  std::string word;
  int x = start;
  for (int i = 0; i < pattern.period(); ++i) {
    word.push_back(x == c ? 'C' : (x < c ? 'L' : 'R'));
    x = pattern.image(x);
  }
  return {"", word};
}

KneadingSequence kneading_of_pattern(const Pattern& pattern) {
  KneadingSequence k = itinerary_of_point(pattern, pattern.image(max_point(pattern)));
  if (!k.preperiod().empty() || k.period().find('C') != k.period().size() - 1)
    throw InternalError("kneading sequence of " + pattern.str() + " does not end its period in C");
  return k;
}

KneadingSequence rotation_kneading(int p, int q) {
  check_rotation_number(p, q);
  const Rational rho(p, q);
  const Rational twice = rho * 2;
  std::string word;
  Rational x = rho;
  for (int n = 0; n < q; ++n) {
    if (x.is_zero())
      word.push_back('C');
    else if (x < twice)
      word.push_back('R');
    else
      word.push_back('L');
    x += rho;
    if (x >= Rational(1)) x -= 1;
  }
  if (word.find('C') != static_cast<std::size_t>(q - 1))
    throw InternalError("rotation kneading for " + rho.str() + " has C off the last position");
  return {"", word};
}

KneadingSequence strongest_kneading_by_rules(int p, int q) {
  const std::string nu = rotation_kneading(p, q).period();
  const auto uq = static_cast<std::size_t>(q);
  auto nu_at = [&](std::size_t i) { return nu[i % uq]; };
  if (nu_at(uq) != 'R' || nu_at(uq + 1) != 'L')
    throw InternalError("rotation kneading does not continue C, R, L");
  std::string prime;  // positions 0 .. q+1
  for (std::size_t i = 0; i + 1 < uq; ++i) prime.push_back(nu_at(i));
  prime.push_back('L');  // replaces C at q-1
  prime.push_back('R');  // position q, unchanged
  prime.push_back('R');  // position q+1, L turned into R
  // From here on nu'(j) = nu'(j - q).
  return {prime.substr(0, 2), prime.substr(2, uq)};
}

KneadingSequence strongest_kneading_by_substitution(int p, int q) {
  const KneadingSequence nu = rotation_kneading(p, q);
  const auto uq = static_cast<std::size_t>(q);
  const std::string head = nu.prefix(2);
  if (head != "RL") throw InternalError("rotation kneading does not start with RL");
  std::string tail;
  for (std::size_t i = 2; i < 2 + 3 * uq; ++i) tail.push_back(nu.at(i));
  for (std::size_t pos = tail.find("CRL"); pos != std::string::npos; pos = tail.find("CRL", pos + 3))
    tail.replace(pos, 3, "LRR");
  for (std::size_t i = uq; i < 2 * uq; ++i)
    if (tail[i] != tail[i - uq]) throw InternalError("substituted sequence is not q-periodic");
  return {head, tail.substr(0, uq)};
}

KneadingSequence strongest_kneading(int p, int q) {
  KneadingSequence rules = strongest_kneading_by_rules(p, q);
  KneadingSequence substituted = strongest_kneading_by_substitution(p, q);
  if (!(rules == substituted))
    throw InternalError("strongest kneading routes disagree: " + rules.str() + " vs " + substituted.str());
  return rules;
}

std::string to_string(IntervalClass c) {
  switch (c) {
    case IntervalClass::equals: return "equals";
    case IntervalClass::strictly_contains: return "strictly_contains";
    case IntervalClass::does_not_contain: return "does_not_contain";
  }
  return "unknown";
}

IntervalClass interval_class(const Pattern& pattern, int p, int q, int markov_check_bound) {
  const KneadingSequence nu_p = kneading_of_pattern(pattern);
  const KneadingSequence weakest = rotation_kneading(p, q);
  const KneadingSequence strongest = strongest_kneading(p, q);

  IntervalClass result;
  if (compare(nu_p, strongest).order == Order::a_greater)
    result = IntervalClass::strictly_contains;
  else if (compare(weakest, nu_p).order == Order::a_greater)
    result = IntervalClass::does_not_contain;
  else
    result = IntervalClass::equals;

  if (pattern.period() <= markov_check_bound) {
    const Rational r = min_cycle_mean(build_markov(pattern)).r;
    const Rational rho(p, q);
    const IntervalClass by_markov = r == rho ? IntervalClass::equals
                                    : r < rho ? IntervalClass::strictly_contains
                                              : IntervalClass::does_not_contain;
    if (by_markov != result)
      throw InternalError("interval class of " + pattern.str() + " at " + rho.str() + ": kneading says " +
                          to_string(result) + ", minimum cycle mean " + r.str() + " says " +
                          to_string(by_markov));
  }
  return result;
}

}  // namespace overtwist
