#include "overtwist/vbo.h"

#include <numeric>

#include "overtwist/classify.h"
#include "overtwist/error.h"
#include "overtwist/markov.h"

namespace overtwist {

namespace {

std::string fraction(int p, int q) { return std::to_string(p) + "/" + std::to_string(q); }

void check_generator(int p, int q) {
  if (p < 1 || q < 2 || std::gcd(p, q) != 1)
    throw BadParameters("need coprime p >= 1, q >= 2, got " + fraction(p, q));
  if (2 * p >= q) throw BadParameters("need 2p < q, got " + fraction(p, q));
}

}  // namespace

Pattern gamma(int p, int q) {
  if (!(p == 1 && q == 2)) check_generator(p, q);
  std::vector<int> images(static_cast<std::size_t>(q));
  for (int j = 1; j <= q; ++j) {
    int v;
    if (j <= q - 2 * p)
      v = j + p;
    else if (j <= q - p)
      v = 2 * q - 2 * p + 1 - j;
    else
      v = q + 1 - j;
    images[static_cast<std::size_t>(j - 1)] = v;
  }
  return Pattern(std::move(images));
}

int Lifting::position(int copy, int time) const {
  for (const LiftedPoint& pt : points)
    if (pt.copy == copy && pt.time == time) return pt.position;
  throw std::out_of_range("no lifted point c_{" + std::to_string(copy) + "," + std::to_string(time) + "}");
}

Lifting k_tuple_lifting(int k, int p, int q) {
  if (k < 2) throw BadParameters("need k >= 2, got " + std::to_string(k));
  check_generator(p, q);
  const Pattern base = gamma(p, q);
  const int left_slots = q - p;  // slots 1..q-p lie left of the fixed point
  auto place = [&](int copy, int slot) {
    return slot <= left_slots ? (slot - 1) * k + copy : (slot - 1) * k + (k + 1 - copy);
  };

  // time of each slot: time 1 is the turning point, time j+1 its image
  std::vector<int> time_of_slot(static_cast<std::size_t>(q) + 1, 0);
  int slot = max_point(base);
  for (int t = 1; t <= q; ++t) {
    time_of_slot[static_cast<std::size_t>(slot)] = t;
    slot = base.image(slot);
  }

  Lifting out{k, p, q, {}, {}};
  const auto total = static_cast<std::size_t>(k * q);
  out.points.resize(total);
  out.premap.resize(total);
  for (int copy = 1; copy <= k; ++copy) {
    for (int s = 1; s <= q; ++s) {
      const int pos = place(copy, s);
      out.points[static_cast<std::size_t>(pos - 1)] = {copy, time_of_slot[static_cast<std::size_t>(s)], s, pos};
      out.premap[static_cast<std::size_t>(pos - 1)] = place(copy, base.image(s));
    }
  }
  return out;
}

Pattern glue(const Lifting& lifting) {
  const int k = lifting.k;
  const int p = lifting.p;
  const int n = k * lifting.q;
  auto marked = [&](int copy) {
    for (const LiftedPoint& pt : lifting.points)
      if (pt.copy == copy && pt.slot == p) return pt.position;
    throw InternalError("lifting has no p-th point in copy " + std::to_string(copy));
  };
  auto preimage_in_copy = [&](int copy, int target) {
    for (int x = 1; x <= n; ++x)
      if (lifting.at(x).copy == copy && lifting.premap[static_cast<std::size_t>(x - 1)] == target) return x;
    throw InternalError("no preimage of " + std::to_string(target) + " in copy " + std::to_string(copy));
  };

  int leftmost = 0;
  for (const LiftedPoint& pt : lifting.points)
    if (pt.copy == 1 && (leftmost == 0 || pt.position < leftmost)) leftmost = pt.position;
  if (lifting.at(leftmost).time != 3)
    throw InternalError("leftmost point of copy 1 is not its third orbit point");

  std::vector<int> images = lifting.premap;
  const int old_image = images[static_cast<std::size_t>(leftmost - 1)];
  if (old_image != marked(k) + 1)
    throw InternalError("closing target is not immediately right of the last marked point");

  images[static_cast<std::size_t>(leftmost - 1)] = marked(2);
  for (int i = 2; i <= k; ++i) {
    const int source = preimage_in_copy(i, marked(i));
    images[static_cast<std::size_t>(source - 1)] = i < k ? marked(i + 1) : old_image;
  }
  try {
    return Pattern(std::move(images));
  } catch (const InvalidPattern& e) {
    throw InternalError(std::string("gluing broke the cycle: ") + e.what());
  }
}

Pattern vbo_build(int k, int p, int q) { return glue(k_tuple_lifting(k, p, q)); }

VboReport verify_vbo(const Pattern& pattern, int p, int q) {
  check_generator(p, q);
  VboReport rep;
  auto fail = [&](std::string what) { rep.failures.push_back(std::move(what)); };
  const Rational target(p, q);
  const int n = pattern.period();

  if (n % q != 0) {
    fail("orp: period " + std::to_string(n) + " is not a multiple of " + std::to_string(q));
  } else {
    rep.k = n / q;
  }
  rep.orp = over_rotation_pair(pattern);
  rep.orp_matches = rep.k > 0 && *rep.orp == OverRotationPair{rep.k * p, rep.k * q};
  if (!rep.orp_matches)
    fail("orp: got (" + std::to_string(rep.orp->p) + "," + std::to_string(rep.orp->q) + ")");

  rep.unimodal = is_unimodal(pattern);
  if (!rep.unimodal) fail("unimodal: pattern is not unimodal");

  const bool convergent = is_convergent(pattern);
  if (!convergent) {
    fail("convergent: pattern is divergent");
    return rep;
  }

  rep.code_class = code_class(pattern);
  rep.code_route = *rep.code_class != CodeClass::not_nondecreasing && rep.orp->rho() == target;
  if (!rep.code_route) fail("code route: code is not non-decreasing at rho = " + target.str());

  if (rep.unimodal) {
    rep.kneading = kneading_of_pattern(pattern);
    const bool below_strongest = compare(strongest_kneading(p, q), *rep.kneading).order != Order::b_greater;
    const bool above_weakest = compare(*rep.kneading, rotation_kneading(p, q)).order != Order::b_greater;
    rep.kneading_route = below_strongest && above_weakest;
    if (!rep.kneading_route) fail("kneading route: " + rep.kneading->str() + " outside [nu, nu']");
  }

  rep.r = min_cycle_mean(build_markov(pattern)).r;
  rep.markov_route = *rep.r == target;
  if (!rep.markov_route) fail("markov route: r = " + rep.r->str());

  rep.routes_agree = rep.code_route == rep.markov_route && (!rep.unimodal || rep.kneading_route == rep.markov_route);
  if (!rep.routes_agree) fail("routes disagree on r = " + target.str());

  rep.overtwist = is_overtwist(pattern);
  if (rep.overtwist) fail("classification: pattern is an over-twist");
  rep.block_over_overtwist = has_block_structure_over_overtwist(pattern);
  if (rep.block_over_overtwist) fail("classification: block structure over an over-twist");
  rep.very_badly_ordered = is_very_badly_ordered(pattern);
  if (!rep.very_badly_ordered) fail("classification: not very badly ordered");
  rep.irreducible = block_decompositions(pattern).empty();
  return rep;
}

}  // namespace overtwist
