#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>

#include "doctest.h"
#include "rbg/obstruct.hpp"

using namespace rbg;

TEST_CASE("surd sign analysis") {
  CHECK(Surd{3, -1, 3}.cmp(2) < 0);   // 3 - sqrt(3) < 2
  CHECK(Surd{3, -1, 3}.cmp(1) > 0);   // 3 - sqrt(3) > 1
  CHECK(Surd{4, -1, 4}.cmp(2) == 0);  // 4 - sqrt(4) == 2
  CHECK(Surd{0, 0, 0}.cmp(0) == 0);
  CHECK(Surd{-3, 1, 3}.sign() < 0);
  CHECK(Surd{-1, 1, 3}.sign() > 0);
  CHECK(Surd{0, -2, 5}.sign() < 0);
}

TEST_CASE("bounds") {
  CHECK(kslice_bound(0).value.cmp(0) == 0);
  auto b2 = kslice_bound(2).value;
  CHECK(b2.a == 2);
  CHECK(b2.b == -1);
  CHECK(b2.c == 2);
  CHECK(thm_sinv_bound('a', 3).value.cmp(1) > 0);
  CHECK(thm_sinv_bound('b', 3).value.cmp(2) == 0);  // 4 - sqrt(4)
  CHECK(thm_sinv_bound('b', 0).value.cmp(0) == 0);
  CHECK(kslice_bound_mirror(3).value.cmp(0) < 0);
  CHECK_THROWS(thm_sinv_bound('c', 1));
}

TEST_CASE("exactness against squaring oracle") {
  // decide m > k - sqrt(k) by integer arithmetic and compare
  for (long long k = 1; k <= 10000; k += 37) {
    auto bd = kslice_bound(k).value;
    for (long long m = -2; m <= k + 2; m += 2) {
      // m > k - sqrt(k)  <=>  sqrt(k) > k - m  <=>  k-m < 0 or (k-m)^2 < k
      long long d = k - m;
      bool oracle = d < 0 || d * d < k;
      CHECK((bd.cmp(m) < 0) == oracle);
    }
  }
}

TEST_CASE("twist bound") {
  CHECK(twist_bound(4, 0) == 4);
  CHECK(twist_bound(4, 1) == 4);
  CHECK(twist_bound(0, 3) == 6);
  CHECK(twist_bound(0, -3) == 6);
  CHECK(twist_bound(-2, -1) == -2);
}

TEST_CASE("not_kslice verdicts") {
  CHECK(not_kslice(2, 2).obstructed);
  CHECK_FALSE(not_kslice(0, 1).obstructed);
  CHECK(not_kslice(2, 3).obstructed);
  CHECK_FALSE(not_kslice(2, 4).obstructed);  // 2 == 4 - sqrt(4), not >
  // monotonicity
  for (long long k = 1; k <= 50; ++k)
    for (long long s = -10; s <= 20; s += 2)
      if (not_kslice(s, k).obstructed) CHECK(not_kslice(s + 2, k).obstructed);
}

TEST_CASE("useful_k window") {
  for (long long k : {3, 6, 8, 11, 13, 15}) CHECK(useful_k(k));
  for (long long k : {1, 2, 4, 5, 7}) CHECK_FALSE(useful_k(k));
  // brute-force double-precision scan agrees on 1..100 (window stays far
  // from even integers at this scale)
  for (long long k = 1; k <= 100; ++k) {
    double lo = k - std::sqrt(static_cast<double>(k));
    double hi = k + 1 - std::sqrt(static_cast<double>(k + 1));
    bool brute = false;
    for (long long m = 0; m <= k + 2; m += 2)
      if (lo < m && m <= hi) brute = true;
    CHECK(useful_k(k) == brute);
  }
}

TEST_CASE("prop_r1") {
  CHECK(prop_r1_applies(3, 1, 5));
  CHECK_FALSE(prop_r1_applies(3, -1, 1));
  CHECK_FALSE(prop_r1_applies(3, 3, 1));
  CHECK_FALSE(prop_r1_applies(3, 3, 5));  // l^2 = 9 > 3
}

static bool in_good_set(long long n) {
  // {1,2,4} ∪ {p^k} ∪ {2p^k} with p an odd prime
  if (n == 1 || n == 2 || n == 4) return true;
  long long m = n % 2 == 0 ? n / 2 : n;
  if (m % 2 == 0) return false;  // divisible by 4 (and not 4 itself)
  // m must be an odd prime power
  for (long long p = 3; p * p <= m; p += 2)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      return m == 1;
    }
  return m > 1;
}

TEST_CASE("meridian extendability") {
  CHECK(meridian_extendability(1).extends_always);
  CHECK(meridian_extendability(7).units == std::set<long long>{1, 6});
  auto r8 = meridian_extendability(8);
  CHECK(r8.units == std::set<long long>{1, 3, 5, 7});
  CHECK_FALSE(r8.extends_always);
  for (long long n = 1; n <= 200; ++n) {
    auto rep = meridian_extendability(n);
    CHECK(rep.extends_always == in_good_set(n));
    if (n > 1) CHECK(rep.units.count(1));
    for (long long u : rep.units) CHECK(rep.units.count((n - u) % n));
  }
}

TEST_CASE("candidate classification") {
  auto r1 = classify_candidate(2, 0, 3, -1, 1);
  CHECK(r1.classification == CandidateClass::exotic_candidate);
  CHECK(r1.b_exceeds);
  CHECK_FALSE(r1.g_exceeds);

  auto r2 = classify_candidate(2, 0, 2, -1, 1);
  CHECK(r2.classification == CandidateClass::obstruction_only);

  auto r3 = classify_candidate(0, 0, 3, -1, 1);
  CHECK(r3.classification == CandidateClass::uninformative);

  auto r4 = classify_candidate(2, 0, 3, 1, 5);  // killed by r > 1, l^2 <= k
  CHECK(r4.classification == CandidateClass::obstruction_only);
  CHECK(r4.killed_by_prop_r1);
}
