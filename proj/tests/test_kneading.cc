#include <doctest.h>

#include <numeric>
#include <random>

#include "overtwist/error.h"
#include "overtwist/kneading.h"
#include "overtwist/markov.h"
#include "overtwist/vbo.h"
#include "support/patterns.h"

using namespace overtwist;

namespace {

Pattern P(std::vector<int> v) { return Pattern(std::move(v)); }
KneadingSequence K(const char* text) { return parse_kneading(text); }

int symbol_rank(char s) { return s == 'L' ? 0 : s == 'C' ? 1 : 2; }

// Parity order on expanded prefixes; the bound covers any pair with
// preperiods and periods no longer than those of a and b.
Order oracle_compare(const KneadingSequence& a, const KneadingSequence& b) {
  const std::size_t n = std::max(a.preperiod().size(), b.preperiod().size()) +
                        2 * std::lcm(a.period().size(), b.period().size()) + 2;
  const std::string x = a.prefix(n), y = b.prefix(n);
  int rs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) {
      const bool bigger = symbol_rank(x[i]) > symbol_rank(y[i]);
      return (bigger == (rs % 2 == 0)) ? Order::a_greater : Order::b_greater;
    }
    if (x[i] == 'R') ++rs;
  }
  return Order::equal;
}

bool succ(const KneadingSequence& a, const KneadingSequence& b) { return compare(a, b).order == Order::a_greater; }

}  // namespace

TEST_CASE("text form and canonicalization") {
  CHECK(K("RL(RRLRR)^inf").str() == "RL(RRLRR)^inf");
  CHECK(KneadingSequence("RLRL", "RL") == KneadingSequence("", "RL"));
  CHECK(KneadingSequence("", "RLCRLC").period() == "RLC");
  CHECK(KneadingSequence("R", "LR").str() == "(RL)^inf");
  CHECK(K("RL(RRLRR)^inf").prefix(12) == "RLRRLRRRRLRR");
  CHECK(K("RL(RRLRR)^inf").shifted(2) == K("(RRLRR)^inf"));
  CHECK_THROWS_AS(parse_kneading("RL(RX)^inf"), ParseError);
  CHECK_THROWS_AS(parse_kneading("RL"), ParseError);
}

TEST_CASE("itineraries") {
  CHECK(itinerary_of_point(P({2, 4, 6, 5, 3, 1}), 6) == K("(RLLRRC)^inf"));
  CHECK(itinerary_of_point(P({3, 5, 4, 2, 1}), 5) == K("(RLRRC)^inf"));
  CHECK(itinerary_of_point(P({3, 5, 4, 2, 1}), 2).at(0) == 'C');
  CHECK_THROWS_AS(itinerary_of_point(P({3, 1, 4, 2}), 1), NotUnimodal);
}

TEST_CASE("kneading of patterns") {
  CHECK(kneading_of_pattern(P({4, 6, 10, 9, 8, 7, 5, 3, 2, 1})) == K("(RLRRLRRRRC)^inf"));
  CHECK(kneading_of_pattern(P({3, 5, 4, 2, 1})) == K("(RLRRC)^inf"));
  CHECK(kneading_of_pattern(P({2, 1})) == K("(RC)^inf"));
}

TEST_CASE("comparison examples") {
  const auto c = compare(strongest_kneading(2, 5), K("(RLRRLRRRRC)^inf"));
  CHECK(c.order == Order::a_greater);
  CHECK(c.first_difference + 1 == 10);
  CHECK(c.r_count == 7);
  CHECK(c.hit_c);
  CHECK(compare(K("(RLC)^inf"), K("(RLC)^inf")).order == Order::equal);
  const auto d = compare(K("(RLC)^inf"), K("(RLRRC)^inf"));
  CHECK(d.order == Order::a_greater);
  CHECK(d.first_difference == 2);
  CHECK(d.r_count == 1);
}

TEST_CASE("comparison agrees with prefix expansion on random sequences") {
  std::mt19937 rng(99);
  auto word = [&](int lo, int hi) {
    std::uniform_int_distribution<int> len(lo, hi), sym(0, 2);
    std::string w;
    for (int i = len(rng); i > 0; --i) w += "LCR"[sym(rng)];
    return w;
  };
  for (int i = 0; i < 5000; ++i) {
    KneadingSequence a(word(0, 3), word(1, 4));
    // b often shares a long prefix with a
    KneadingSequence b = (i % 3 == 0) ? KneadingSequence(a.preperiod() + a.period(), a.period())
                         : (i % 3 == 1) ? KneadingSequence(a.prefix(a.preperiod().size() + 3), word(1, 4))
                                        : KneadingSequence(word(0, 3), word(1, 4));
    const auto got = compare(a, b);
    CHECK(got.order == oracle_compare(a, b));
    CHECK((got.order == Order::equal) == (a == b));
    const auto back = compare(b, a).order;
    CHECK((got.order == Order::a_greater) == (back == Order::b_greater));
  }
}

TEST_CASE("shift maximality") {
  CHECK(is_shift_maximal(K("(RLRRC)^inf")));
  CHECK(is_shift_maximal(K("RL(RRLRR)^inf")));
  CHECK_FALSE(is_shift_maximal(K("L(R)^inf")));
  CHECK_FALSE(is_shift_maximal(K("(LRC)^inf")));
}

TEST_CASE("rotation kneading") {
  CHECK(rotation_kneading(2, 5) == K("(RLRRC)^inf"));
  CHECK(rotation_kneading(1, 3) == K("(RLC)^inf"));
  CHECK(rotation_kneading(1, 4) == K("(RLLC)^inf"));
  CHECK_THROWS_AS(rotation_kneading(1, 2), RhoOutOfRange);
  CHECK_THROWS_AS(rotation_kneading(3, 5), RhoOutOfRange);
  CHECK_THROWS_AS(rotation_kneading(2, 6), Error);
}

TEST_CASE("strongest kneading") {
  CHECK(strongest_kneading(2, 5) == K("RL(RRLRR)^inf"));
  CHECK(strongest_kneading(2, 5).prefix(12) == "RLRRLRRRRLRR");
  CHECK(strongest_kneading(1, 3) == K("RL(LRR)^inf"));
  CHECK(strongest_kneading(1, 4) == K("RL(LLRR)^inf"));
  CHECK_THROWS_AS(strongest_kneading(1, 2), RhoOutOfRange);
}

TEST_CASE("interval classes") {
  CHECK(interval_class(P({4, 6, 10, 9, 8, 7, 5, 3, 2, 1}), 2, 5) == IntervalClass::equals);
  CHECK(interval_class(P({3, 5, 4, 2, 1}), 2, 5) == IntervalClass::equals);
  CHECK(interval_class(P({2, 4, 6, 5, 3, 1}), 2, 5) == IntervalClass::strictly_contains);
  CHECK(interval_class(P({2, 1}), 1, 3) == IntervalClass::does_not_contain);
  CHECK(to_string(IntervalClass::strictly_contains) == "strictly_contains");
  CHECK_THROWS_AS(interval_class(P({3, 1, 4, 2}), 1, 3), NotUnimodal);
  CHECK_THROWS_AS(interval_class(P({2, 3, 1}), 1, 2), RhoOutOfRange);
}

TEST_CASE("rotation sequences decrease as the rotation number grows") {
  std::vector<std::pair<int, int>> farey;
  for (int q = 3; q <= 12; ++q)
    for (int p = 1; 2 * p < q; ++p)
      if (std::gcd(p, q) == 1) farey.emplace_back(p, q);
  for (auto [l, k] : farey)
    for (auto [p, q] : farey)
      if (Rational(l, k) < Rational(p, q)) CHECK(succ(rotation_kneading(l, k), rotation_kneading(p, q)));
}

TEST_CASE("sandwich and dual construction up to denominator 25") {
  for (auto [p, q] : testing::coprime_pairs(25)) {
    CAPTURE(p);
    CAPTURE(q);
    const auto nu = rotation_kneading(p, q);
    const auto nu1 = strongest_kneading(p, q);
    CHECK(succ(nu1, nu));
    CHECK(is_shift_maximal(nu));
    CHECK(is_shift_maximal(nu1));
    CHECK(nu.preperiod().empty());
    CHECK(nu.period().size() == static_cast<std::size_t>(q));
    CHECK(std::count(nu.period().begin(), nu.period().end(), 'C') == 1);
    CHECK(nu.period()[static_cast<std::size_t>(q - 1)] == 'C');
    CHECK(nu1.str().find('C') == std::string::npos);
    CHECK(strongest_kneading_by_rules(p, q) == strongest_kneading_by_substitution(p, q));
    CHECK(kneading_of_pattern(gamma(p, q)) == nu);
  }
}

TEST_CASE("itineraries preserve the spatial order on unimodal patterns up to period 8") {
  int pairs = 0;
  for (const Pattern& pat : testing::cyclic_patterns_up_to(8)) {
    if (!is_unimodal(pat)) continue;
    const int n = pat.period();
    std::vector<KneadingSequence> its;
    for (int x = 1; x <= n; ++x) its.push_back(itinerary_of_point(pat, x));
    for (int y = 1; y <= n; ++y)
      for (int x = y + 1; x <= n; ++x) {
        const auto& ix = its[static_cast<std::size_t>(x - 1)];
        const auto& iy = its[static_cast<std::size_t>(y - 1)];
        const auto c = compare(ix, iy);
        REQUIRE(c.order != Order::equal);
        const std::string px = ix.prefix(c.first_difference), py = iy.prefix(c.first_difference);
        if (px.find('C') != std::string::npos || py.find('C') != std::string::npos) continue;
        ++pairs;
        CHECK(c.order == Order::a_greater);
      }
  }
  CHECK(pairs > 0);
}

TEST_CASE("kneading interval test matches the minimum cycle mean") {
  for (const Pattern& pat : testing::cyclic_patterns_up_to(8)) {
    if (!is_unimodal(pat) || !is_convergent(pat)) continue;
    const Rational r = min_cycle_mean(build_markov(pat)).r;
    for (auto [p, q] : testing::coprime_pairs(8)) {
      const auto cls = interval_class(pat, p, q, 0);
      CHECK((cls == IntervalClass::equals) == (r == Rational(p, q)));
      CHECK((cls == IntervalClass::strictly_contains) == (r < Rational(p, q)));
      CHECK((cls == IntervalClass::does_not_contain) == (r > Rational(p, q)));
    }
  }
}
