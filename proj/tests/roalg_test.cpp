#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ordrecon/roalg.hpp"
#include "testutil.hpp"

using namespace ordrecon;
using namespace ordrecon::testutil;

namespace {

RoSetLin iv(long long a, long long b) {
  return RoSetLin::interval(Rat(a), Rat(b));
}

// Independent membership oracle: merge *closed* intervals and take the
// interior, instead of the open-merge used by the canonical form.
bool int_cl_member(const std::vector<LinInterval>& raw, const Rat& p) {
  std::vector<std::pair<ExtPoint, ExtPoint>> closed;
  for (const auto& i : raw) closed.emplace_back(i.lo, i.hi);
  std::sort(closed.begin(), closed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<ExtPoint, ExtPoint>> merged;
  for (const auto& c : closed) {
    if (!merged.empty() && (c.first < merged.back().second ||
                            c.first == merged.back().second)) {
      if (merged.back().second < c.second) merged.back().second = c.second;
    } else {
      merged.push_back(c);
    }
  }
  ExtPoint x{p};
  for (const auto& [lo, hi] : merged)
    if (lo < x && x < hi) return true;
  return false;
}

}  // namespace

TEST_CASE("sum merges touching intervals") {
  CHECK(ro_sum(iv(0, 1), iv(1, 2)) == iv(0, 2));
  CHECK(ro_sum(RoSetLin(), iv(0, 1)) == iv(0, 1));
  RoSetLin u = ro_sum(iv(0, 1), iv(2, 3));
  CHECK(u.components().size() == 2);
}

TEST_CASE("complement and meet") {
  RoSetLin c = ro_complement(iv(0, 1));
  REQUIRE(c.components().size() == 2);
  CHECK(c.components()[0] == LinInterval(ExtPoint::neg_inf(), ExtPoint(Rat(0))));
  CHECK(c.components()[1] == LinInterval(ExtPoint(Rat(1)), ExtPoint::pos_inf()));
  CHECK(ro_complement(RoSetLin()) == RoSetLin::whole());
  CHECK(ro_meet(iv(0, 2), iv(1, 3)) == iv(1, 2));
}

TEST_CASE("leq and disjoint") {
  CHECK(ro_leq(iv(0, 1), iv(0, 2)));
  CHECK(ro_disjoint(iv(0, 1), iv(1, 2)));
  RoSetLin v = ro_sum(iv(0, 1), RoSetLin::interval(Rat(3, 2), Rat(3)));
  CHECK_FALSE(ro_leq(iv(0, 2), v));  // 5/4 witnesses
  CHECK(v.contains(Rat(5, 4)) == false);
}

TEST_CASE("canonical membership matches int(cl) oracle on random sets") {
  Rng rng(20260810);
  for (int trial = 0; trial < 300; ++trial) {
    int k = rand_int(rng, 1, 5);
    std::vector<LinInterval> raw;
    for (int i = 0; i < k; ++i) {
      auto pts = rand_distinct_sorted(rng, 2);
      raw.emplace_back(ExtPoint(pts[0]), ExtPoint(pts[1]));
    }
    RoSetLin u = RoSetLin::from_intervals(raw);
    for (int s = 0; s < 60; ++s) {
      Rat p = rand_rat(rng);
      CHECK(u.contains(p) == int_cl_member(raw, p));
    }
  }
}

TEST_CASE("boolean algebra laws exact on random sets") {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    RoSetLin u = rand_roset(rng);
    RoSetLin v = rand_roset(rng);
    RoSetLin w = rand_roset(rng);
    CHECK(ro_complement(ro_complement(u)) == u);
    CHECK(ro_complement(ro_sum(u, v)) ==
          ro_meet(ro_complement(u), ro_complement(v)));
    CHECK(ro_sum(u, ro_complement(u)) == RoSetLin::whole());
    CHECK(ro_meet(u, ro_complement(u)) == RoSetLin());
    CHECK(ro_sum(u, ro_meet(u, v)) == u);
    CHECK(ro_meet(u, ro_sum(u, v)) == u);
    CHECK(ro_sum(ro_sum(u, v), w) == ro_sum(u, ro_sum(v, w)));
    CHECK(ro_sum(u, v) == ro_sum(v, u));
    CHECK(ro_sum(u, u) == u);
  }
}

TEST_CASE("hull and segregation") {
  RoSetLin u = ro_sum(iv(0, 1), iv(2, 3));
  auto h = convex_hull(u);
  REQUIRE(h.has_value());
  CHECK(*h == LinInterval(ExtPoint(Rat(0)), ExtPoint(Rat(3))));
  CHECK_FALSE(convex_hull(RoSetLin()).has_value());
  RoSetLin ray = ro_sum(RoSetLin::interval(ExtPoint::neg_inf(), ExtPoint(Rat(0))),
                        iv(1, 2));
  CHECK(convex_hull(ray)->lo.is_neg_inf());

  CHECK(seg_lin(iv(0, 1), iv(2, 3)));
  CHECK_FALSE(seg_lin(iv(0, 2), iv(1, 3)));
  CHECK(seg_lin(RoSetLin(), iv(0, 1)));
  // (2,3) lies between the components of (0,1)u(4,5).
  CHECK_FALSE(seg_lin(ro_sum(iv(0, 1), iv(4, 5)), iv(2, 3)));
}

TEST_CASE("seg implies disjoint but not conversely") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    RoSetLin u = rand_roset(rng), v = rand_roset(rng);
    if (seg_lin(u, v)) CHECK(ro_disjoint(u, v));
  }
  RoSetLin u = ro_sum(iv(0, 1), iv(4, 5));
  CHECK(ro_disjoint(u, iv(2, 3)));
  CHECK_FALSE(seg_lin(u, iv(2, 3)));  // regression pin
}

TEST_CASE("bets") {
  CHECK(bets(iv(0, 1), iv(2, 3), iv(4, 5)));
  CHECK(bets(iv(4, 5), iv(2, 3), iv(0, 1)));
  CHECK_FALSE(bets(iv(0, 2), iv(1, 3), iv(4, 5)));
  CHECK_FALSE(bets(RoSetLin(), iv(2, 3), iv(4, 5)));
  // Characterization: bets iff pairwise segregation plus a middle hull.
  Rng rng(99);
  int cases = 0;
  while (cases < 50) {
    RoSetLin a = rand_roset(rng, 2, false), b = rand_roset(rng, 2, false),
             c = rand_roset(rng, 2, false);
    if (a.empty() || b.empty() || c.empty()) continue;
    ++cases;
    bool lhs = bets(a, b, c);
    bool rhs = seg_lin(a, b) && seg_lin(b, c) && seg_lin(a, c) &&
               ((ro_lt(a, b) && ro_lt(b, c)) || (ro_lt(c, b) && ro_lt(b, a)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("structural tests") {
  CHECK(is_bounded_interval(iv(0, 1)));
  CHECK(is_ray(RoSetLin::interval(ExtPoint::neg_inf(), ExtPoint(Rat(0)))));
  RoSetLin u = ro_sum(iv(0, 1), iv(2, 3));
  CHECK_FALSE(is_bounded_interval(u));
  CHECK_FALSE(is_ray(u));
  CHECK_FALSE(is_bounded_interval(RoSetLin::whole()));
}

// --- circle ---

namespace {

RoSetCirc arc(long long sn, long long sd, long long en, long long ed) {
  return RoSetCirc::arc(Rat(sn, sd), Rat(en, ed));
}

}  // namespace

TEST_CASE("circle canonicalization closes punctures") {
  // (0,1/2) + (1/2,0) covers all but two points: the sum is everything.
  CHECK(ro_sum(arc(0, 1, 1, 2), arc(1, 2, 1, 1)) == RoSetCirc::whole());
  // An isolated puncture inside a union of two touching arcs closes.
  RoSetCirc u = RoSetCirc::from_arcs(
      {CircInterval(CirclePoint(Rat(0)), CirclePoint(Rat(1, 2))),
       CircInterval(CirclePoint(Rat(1, 2)), CirclePoint(Rat(3, 4)))});
  CHECK(u == arc(0, 1, 3, 4));
}

TEST_CASE("circle boolean algebra laws") {
  Rng rng(321);
  for (int t = 0; t < 300; ++t) {
    RoSetCirc u = rand_roset_circ(rng);
    RoSetCirc v = rand_roset_circ(rng);
    CHECK(ro_complement(ro_complement(u)) == u);
    CHECK(ro_complement(ro_sum(u, v)) ==
          ro_meet(ro_complement(u), ro_complement(v)));
    CHECK(ro_sum(u, ro_complement(u)) == RoSetCirc::whole());
    CHECK(ro_meet(u, ro_complement(u)) == RoSetCirc());
    CHECK(ro_sum(u, ro_meet(u, v)) == u);
    CHECK(ro_meet(u, ro_sum(u, v)) == u);
  }
}

TEST_CASE("circle membership sanity") {
  RoSetCirc u = arc(3, 4, 1, 4);  // wraps through 0
  CHECK(u.contains(CirclePoint(Rat(0))));
  CHECK_FALSE(u.contains(CirclePoint(Rat(1, 2))));
  RoSetCirc c = ro_complement(u);
  CHECK(c == arc(1, 4, 3, 4));
}

TEST_CASE("seg_circ") {
  CHECK(seg_circ(arc(0, 1, 1, 4), arc(1, 2, 3, 4)));
  CHECK(seg_circ(RoSetCirc(), arc(0, 1, 1, 4)));
  // Interleaved two-component sets cannot be separated.
  RoSetCirc u = ro_sum(arc(0, 1, 1, 4), arc(1, 2, 5, 8));
  RoSetCirc v = ro_sum(arc(3, 8, 7, 16), arc(3, 4, 7, 8));
  CHECK_FALSE(seg_circ(u, v));
  // Non-interleaved two-component sets can.
  RoSetCirc w = ro_sum(arc(0, 1, 1, 8), arc(3, 16, 1, 4));
  CHECK(seg_circ(w, arc(1, 2, 3, 4)));
}

TEST_CASE("crs and seps") {
  CHECK(crs_pm(arc(0, 1, 1, 8), arc(1, 4, 3, 8), arc(1, 2, 5, 8)));
  CHECK(crs(arc(0, 1, 1, 8), arc(1, 4, 3, 8), arc(1, 2, 5, 8)));
  CHECK_FALSE(crs(arc(1, 2, 5, 8), arc(1, 4, 3, 8), arc(0, 1, 1, 8)));
  CHECK(crs_pm(arc(1, 2, 5, 8), arc(1, 4, 3, 8), arc(0, 1, 1, 8)));
  CHECK(seps(arc(0, 1, 1, 8), arc(1, 4, 3, 8), arc(1, 2, 5, 8),
             arc(3, 4, 7, 8)));
  CHECK_FALSE(seps(arc(0, 1, 1, 8), arc(1, 2, 5, 8), arc(1, 4, 3, 8),
                   arc(3, 4, 7, 8)));
  // Random all-selection sample check against the definition.
  Rng rng(555);
  for (int t = 0; t < 100; ++t) {
    RoSetCirc a = rand_roset_circ(rng, 2), b = rand_roset_circ(rng, 2),
              c = rand_roset_circ(rng, 2), d = rand_roset_circ(rng, 2);
    if (a.empty() || b.empty() || c.empty() || d.empty()) continue;
    bool claimed = seps(a, b, c, d);
    // sample selections
    bool all = true;
    for (const auto& aa : a.arcs())
      for (const auto& bb : b.arcs())
        for (const auto& cc : c.arcs())
          for (const auto& dd : d.arcs())
            all = all && sep(aa.sample(), bb.sample(), cc.sample(), dd.sample());
    if (claimed) CHECK(all);
  }
}

TEST_CASE("circle structural") {
  CHECK(is_bounded_interval(arc(0, 1, 1, 2)));
  CHECK_FALSE(is_bounded_interval(RoSetCirc::whole()));
  CHECK_FALSE(is_bounded_interval(ro_sum(arc(0, 1, 1, 4), arc(1, 2, 3, 4))));
}
