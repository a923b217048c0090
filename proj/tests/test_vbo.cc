#include <doctest.h>

#include <numeric>

#include "overtwist/classify.h"
#include "overtwist/error.h"
#include "overtwist/kneading.h"
#include "overtwist/markov.h"
#include "overtwist/vbo.h"
#include "support/patterns.h"

using namespace overtwist;

namespace {

Pattern P(std::vector<int> v) { return Pattern(std::move(v)); }

std::vector<std::pair<int, int>> copy_slot_order(const Lifting& lf) {
  std::vector<std::pair<int, int>> out;
  for (const auto& pt : lf.points) out.emplace_back(pt.copy, pt.slot);
  return out;
}

}  // namespace

TEST_CASE("gamma patterns") {
  CHECK(gamma(2, 5) == P({3, 5, 4, 2, 1}));
  CHECK(gamma(1, 3) == P({2, 3, 1}));
  CHECK(gamma(1, 2) == P({2, 1}));
  CHECK_THROWS_AS(gamma(2, 4), BadParameters);
  CHECK_THROWS_AS(gamma(3, 5), BadParameters);
  CHECK_THROWS_AS(gamma(0, 5), BadParameters);
}

TEST_CASE("k-tuple lifting placement") {
  const auto l25 = k_tuple_lifting(2, 2, 5);
  CHECK(copy_slot_order(l25) ==
        std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {2, 5}, {1, 5}});
  const auto l13 = k_tuple_lifting(2, 1, 3);
  CHECK(copy_slot_order(l13) == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {2, 3}, {1, 3}});
  CHECK_THROWS_AS(k_tuple_lifting(2, 2, 4), BadParameters);
  CHECK_THROWS_AS(k_tuple_lifting(1, 2, 5), BadParameters);
}

TEST_CASE("lifting invariants") {
  for (int k = 2; k <= 5; ++k)
    for (auto [p, q] : testing::coprime_pairs(12)) {
      const auto lf = k_tuple_lifting(k, p, q);
      const Pattern g = gamma(p, q);
      const int n = k * q;
      REQUIRE(static_cast<int>(lf.points.size()) == n);
      // each copy is a copy of gamma, with time 1 at its max point
      for (int pos = 1; pos <= n; ++pos) {
        const auto& pt = lf.at(pos);
        const auto& im = lf.at(lf.premap[static_cast<std::size_t>(pos - 1)]);
        CHECK(im.copy == pt.copy);
        CHECK(im.slot == g.image(pt.slot));
        CHECK(im.time == pt.time % q + 1);
        if (pt.time == 1) CHECK(pt.slot == max_point(g));
      }
      // copy 1 is outermost in every slot
      for (int s = 1; s <= q; ++s) {
        std::vector<int> pos_by_copy;
        for (const auto& pt : lf.points)
          if (pt.slot == s) pos_by_copy.push_back(pt.position);
        REQUIRE(static_cast<int>(pos_by_copy.size()) == k);
        const bool left = s <= q - p;
        for (std::size_t i = 0; i + 1 < pos_by_copy.size(); ++i)
          CHECK(lf.at(pos_by_copy[i]).copy == (left ? static_cast<int>(i) + 1 : k - static_cast<int>(i)));
      }
      // premap is unimodal with its maximum at c_{1,1}
      const int top = lf.position(1, 1);
      for (int pos = 1; pos < n; ++pos) {
        const int a = lf.premap[static_cast<std::size_t>(pos - 1)], b = lf.premap[static_cast<std::size_t>(pos)];
        CHECK((pos < top ? a < b : a > b));
      }
    }
}

TEST_CASE("gluing reproduces the known cycles") {
  CHECK(glue(k_tuple_lifting(2, 1, 3)) == P({2, 4, 6, 5, 3, 1}));
  CHECK(glue(k_tuple_lifting(2, 2, 5)) == P({4, 6, 10, 9, 8, 7, 5, 3, 2, 1}));
  CHECK(vbo_build(2, 1, 3).str() == "2 4 6 5 3 1");
  CHECK_THROWS_AS(vbo_build(2, 2, 4), BadParameters);
  const Pattern nine = glue(k_tuple_lifting(3, 1, 3));
  CHECK(nine.period() == 9);
  CHECK(is_unimodal(nine));
  CHECK(verify_vbo(nine, 1, 3).passed());
}

TEST_CASE("the (4,10) cycle") {
  const Pattern g = vbo_build(2, 2, 5);
  CHECK(over_rotation_pair(g) == OverRotationPair{4, 10});
  const Rational a = fixed_point(g);
  CHECK(a > Rational(6));
  CHECK(a < Rational(7));
  const auto rep = verify_vbo(g, 2, 5);
  CHECK(rep.passed());
  REQUIRE(rep.kneading);
  CHECK(*rep.kneading == parse_kneading("(RLRRLRRRRC)^inf"));
  CHECK(rep.r == Rational(2, 5));
}

TEST_CASE("verification reports") {
  const auto ok = verify_vbo(P({2, 4, 6, 5, 3, 1}), 1, 3);
  CHECK(ok.passed());
  CHECK(ok.k == 2);
  CHECK(ok.code_route);
  CHECK(ok.kneading_route);
  CHECK(ok.markov_route);
  CHECK(ok.routes_agree);
  CHECK(ok.very_badly_ordered);
  CHECK(ok.irreducible);

  const auto bad = verify_vbo(P({2, 3, 1}), 1, 3);
  CHECK_FALSE(bad.passed());
  CHECK(bad.overtwist);

  const auto divergent = verify_vbo(P({3, 1, 4, 2}), 1, 3);
  CHECK_FALSE(divergent.passed());
  CHECK_FALSE(divergent.unimodal);
  CHECK_THROWS_AS(verify_vbo(P({2, 1}), 1, 2), BadParameters);
}

TEST_CASE("construction sweep passes verification by all three routes") {
  for (int k = 2; k <= 5; ++k)
    for (auto [p, q] : testing::coprime_pairs(12)) {
      CAPTURE(k);
      CAPTURE(p);
      CAPTURE(q);
      const Pattern g = vbo_build(k, p, q);
      const auto rep = verify_vbo(g, p, q);
      CHECK(rep.passed());
      CHECK(rep.code_route);
      CHECK(rep.kneading_route);
      CHECK(rep.markov_route);
      CHECK(rep.r == Rational(p, q));
      CHECK(rep.irreducible);  // observed, not required by verification
      const auto orp = over_rotation_pair(g);
      CHECK(std::gcd(orp.p, orp.q) == k);
    }
}

TEST_CASE("gamma is the over-twist of its rotation number up to denominator 25") {
  for (auto [p, q] : testing::coprime_pairs(25)) {
    CAPTURE(p);
    CAPTURE(q);
    const Pattern g = gamma(p, q);
    CHECK(over_rotation_pair(g) == OverRotationPair{p, q});
    CHECK(is_overtwist(g));
    CHECK(interval_class(g, p, q) == IntervalClass::equals);
  }
}
