#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbg/pd.hpp"

using namespace rbg;

TEST_CASE("one-crossing kinked unknot") {
  auto d = parse_pd("X[1,4,2,3]");
  CHECK(d.crossing_count() == 1);
  CHECK(d.n_components == 1);
  CHECK(writhe(d) == 1);
}

TEST_CASE("three-crossing trefoil PD") {
  auto d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(d.crossing_count() == 3);
  CHECK(d.n_components == 1);
  CHECK(d.is_knot());
  // this standard code is the left-handed trefoil
  CHECK(writhe(d) == -3);
  CHECK(writhe(mirror(d)) == 3);
}

TEST_CASE("duplicated crossing text is rejected") {
  CHECK_THROWS_AS(parse_pd("X[1,4,2,3] X[1,4,2,3]"), InconsistentEdges);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1]"), InconsistentEdges);
  CHECK_THROWS_AS(parse_pd("X[1,4,2"), MalformedPd);
  CHECK_THROWS_AS(parse_pd(""), MalformedPd);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), MalformedPd);
}

TEST_CASE("crossingless components via P vertices") {
  auto d = parse_pd("P[1,1]");
  CHECK(d.crossing_count() == 0);
  CHECK(d.n_components == 1);
  CHECK(parse_pd("P[1,2] P[2,1]").n_components == 1);
  CHECK(parse_pd("P[1,1] P[2,2]").n_components == 2);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,3] P[1,5] P[5,1]"), MalformedPd);
}

TEST_CASE("DT parsing") {
  auto tre = parse_dt("4 6 2");
  CHECK(tre.crossing_count() == 3);
  CHECK(tre.is_knot());
  CHECK(std::abs(writhe(tre)) == 3);

  auto fig8 = parse_dt("4 6 8 2");
  CHECK(fig8.crossing_count() == 4);
  CHECK(fig8.is_knot());
  CHECK(writhe(fig8) == 0);

  auto six2 = parse_dt("4 8 10 12 2 6");
  CHECK(six2.crossing_count() == 6);
  CHECK(six2.is_knot());

  CHECK_THROWS_AS(parse_dt("2 4 5"), MalformedDt);
  CHECK_THROWS_AS(parse_dt("4 6 8"), MalformedDt);
  CHECK_THROWS_AS(parse_dt(""), MalformedDt);
}

TEST_CASE("writhe of braid closures") {
  CHECK(writhe(unknot()) == 0);
  auto rh_tre = from_braid(2, {1, 1, 1});
  CHECK(rh_tre.is_knot());
  CHECK(writhe(rh_tre) == 3);
  auto lh_tre = from_braid(2, {-1, -1, -1});
  CHECK(writhe(lh_tre) == -3);
  CHECK(writhe(mirror(rh_tre)) == -3);
}

TEST_CASE("linking numbers") {
  auto hopf = from_braid(2, {1, 1});
  CHECK(hopf.n_components == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);
  CHECK(linking_number(hopf, 1, 0) == 1);
  CHECK(linking_number(mirror(hopf), 0, 1) == -1);
  CHECK_THROWS_AS(linking_number(hopf, 0, 0), SameComponent);

  auto t24 = from_braid(2, {1, 1, 1, 1});
  CHECK(t24.n_components == 2);
  CHECK(linking_number(t24, 0, 1) == 2);
}

TEST_CASE("mirror and reverse are involutions") {
  auto d = parse_dt("4 8 10 12 2 6");
  CHECK(mirror(mirror(d)).xs == d.xs);
  CHECK(reverse(reverse(d)).xs == d.xs);
  CHECK(writhe(reverse(d)) == writhe(d));
}

TEST_CASE("serialization round-trips exactly") {
  for (auto* txt : {"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "X[1,4,2,3]"}) {
    auto d = parse_pd(txt);
    auto rt = parse_pd(serialize_pd(d));
    auto rt2 = parse_pd(serialize_pd(rt));
    CHECK(serialize_pd(rt) == serialize_pd(d));
    CHECK(rt2.xs == rt.xs);
  }
  auto d = parse_dt("4 6 8 2");
  CHECK(parse_pd(serialize_pd(d)).n_components == 1);
  CHECK(serialize_pd(parse_pd(serialize_pd(d))) == serialize_pd(d));

  auto hopf = from_braid(2, {1, 1});
  auto rt = parse_pd(serialize_pd(hopf));
  CHECK(rt.n_components == 2);
  CHECK(serialize_pd(rt) == serialize_pd(hopf));
}

TEST_CASE("digest separates chiralities and ignores labeling") {
  auto a = from_braid(2, {1, 1, 1});
  auto b = from_braid(2, {-1, -1, -1});
  CHECK(pd_digest(a) != pd_digest(b));
  // same diagram reached through different labelings
  auto relab = parse_pd(serialize_pd(a));
  CHECK(pd_digest(relab) == pd_digest(a));
  CHECK(pd_digest(unknot()) == pd_digest(parse_pd("P[7,7]")));
}

TEST_CASE("connected sum") {
  auto tre = from_braid(2, {1, 1, 1});
  auto fig8 = parse_dt("4 6 8 2");
  CHECK(connected_sum(tre, unknot()).xs == tre.xs);
  CHECK(connected_sum(unknot(), fig8).xs == fig8.xs);
  auto s = connected_sum(tre, fig8);
  CHECK(s.crossing_count() == 7);
  CHECK(s.is_knot());
  CHECK(writhe(s) == writhe(tre) + writhe(fig8));
  CHECK_THROWS_AS(connected_sum(from_braid(2, {1, 1}), tre), NotAKnot);
}

TEST_CASE("parallel full twists") {
  // edges 5 (left) and 6 (right) run coherently between the first two
  // crossings of the 4-crossing (2,4)-torus braid closure
  auto t24 = from_braid(2, {1, 1, 1, 1});
  TwistSlot slot{"s", 5, 6, false, +1};

  auto same = insert_full_twists(t24, slot, 0);
  CHECK(same.xs == t24.xs);

  auto plus = insert_full_twists(t24, slot, 1);
  CHECK(plus.crossing_count() == 6);
  CHECK(writhe(plus) == writhe(t24) + 2);
  // stacking a full twist inside the braid is literally two more braid letters
  CHECK(pd_digest(plus) == pd_digest(from_braid(2, {1, 1, 1, 1, 1, 1})));

  auto minus = insert_full_twists(t24, slot, -1);
  CHECK(minus.crossing_count() == 6);
  CHECK(writhe(minus) == writhe(t24) - 2);
  CHECK(minus.n_components == 2);

  auto two = insert_full_twists(t24, slot, 2);
  CHECK(pd_digest(two) == pd_digest(from_braid(2, {1, 1, 1, 1, 1, 1, 1, 1})));

  CHECK_THROWS_AS(insert_full_twists(t24, TwistSlot{"s", 5, 5, false, 1}, 1), InvalidSlot);
  CHECK_THROWS_AS(insert_full_twists(t24, TwistSlot{"s", 5, 99, false, 1}, 1), InvalidSlot);
}

TEST_CASE("antiparallel full twists") {
  // the two edges of a positive kink run antiparallel
  auto kink = parse_pd("X[1,4,2,3]");
  int e1 = kink.xs[0][0], e2 = kink.xs[0][2];
  TwistSlot slot{"s", e1, e2, true, +1};
  for (int t : {1, -1, 2, -2}) {
    auto d = insert_full_twists(kink, slot, t);
    CHECK(d.crossing_count() == 1 + 2 * std::abs(t));
    CHECK(d.n_components == 1);
    CHECK(writhe(d) == 1 - 2 * t);
  }
}
