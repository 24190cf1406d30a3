#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbg/errors.hpp"
#include "rbg/lee.hpp"
#include "rbg/pd.hpp"

using namespace rbg;

namespace {
PlanarDiagram rh_trefoil() { return from_braid(2, {1, 1, 1}); }
}  // namespace

TEST_CASE("lee homology dimension") {
  CHECK(lee_homology(unknot()).total_dim == 2);
  CHECK(lee_homology(rh_trefoil()).total_dim == 2);
  CHECK(lee_homology(parse_dt("4 6 8 2")).total_dim == 2);
  // 2-component links get 4 generators
  CHECK(lee_homology(from_braid(2, {1, 1})).total_dim == 4);
  CHECK(lee_homology(from_braid(2, {1, 1, -1, -1})).total_dim == 4);
}

TEST_CASE("lee generators of a knot sit in degree zero") {
  auto lh = lee_homology(parse_dt("4 8 10 12 2 6"));
  CHECK(lh.dim_by_i == std::map<int, int>{{0, 2}});
}

TEST_CASE("s of small knots") {
  CHECK(rasmussen_s(unknot()) == 0);
  CHECK(rasmussen_s(parse_pd("X[4,4,2,2]")) == 0);
  CHECK(rasmussen_s(rh_trefoil()) == 2);
  CHECK(rasmussen_s(mirror(rh_trefoil())) == -2);
  CHECK(rasmussen_s(parse_dt("4 6 8 2")) == 0);       // figure eight
  CHECK(rasmussen_s(from_braid(2, {1, 1, 1, 1, 1})) == 4);  // T(2,5)
  CHECK(rasmussen_s(parse_dt("4 8 10 2 12 6")) == 0);  // 6_3
}

TEST_CASE("s of the (3,4) torus knot") {
  // 8_19 = closure of (sigma1 sigma2)^4; s = g_4 * 2 = 6
  CHECK(rasmussen_s(from_braid(3, {1, 2, 1, 2, 1, 2, 1, 2})) == 6);
}

TEST_CASE("s is additive under connected sum") {
  auto tre = rh_trefoil();
  auto fig8 = parse_dt("4 6 8 2");
  CHECK(rasmussen_s(connected_sum(tre, tre)) == 4);
  CHECK(rasmussen_s(connected_sum(tre, mirror(tre))) == 0);
  CHECK(rasmussen_s(connected_sum(tre, fig8)) == 2);
}

TEST_CASE("links are rejected") {
  CHECK_THROWS_AS(rasmussen_s(from_braid(2, {1, 1})), NotAKnot);
}

TEST_CASE("s equals the signature bound on positive braids") {
  // for positive braid closures s = w - strands + 1
  for (auto& [strands, word] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {1, 1, 1}}, {2, {1, 1, 1, 1, 1}}, {3, {1, 2, 1, 2}}, {3, {1, 1, 1, 2}}}) {
    PlanarDiagram d = from_braid(strands, word);
    if (!d.is_knot()) continue;
    CHECK(rasmussen_s(d) == static_cast<int>(word.size()) - strands + 1);
  }
}
