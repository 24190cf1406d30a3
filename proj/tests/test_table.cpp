#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "rbg/table.hpp"

using namespace rbg;

static const KnotTableEntry& find(const std::vector<KnotTableEntry>& t,
                                  const std::string& name) {
  auto it = std::find_if(t.begin(), t.end(),
                         [&](const auto& e) { return e.name == name; });
  REQUIRE(it != t.end());
  return *it;
}

TEST_CASE("bundled table loads and verifies") {
  auto table = load_table();
  CHECK(table.size() >= 10);
  auto checks = verify_table(table);
  for (const auto& c : checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
    CHECK(c.chirality == Chirality::as_recorded);
  }
}

TEST_CASE("recorded facts used elsewhere") {
  auto table = load_table();
  CHECK(find(table, "4_1").s == 0);
  CHECK(find(table, "4_1").det == 5);
  CHECK(find(table, "6_2").det == 11);
  CHECK(find(table, "K13n3596").det == 43);
  // the 3-surgery pair with equal s-invariants
  CHECK(find(table, "10_125").s == find(table, "10_132").s);
  // not H-slice in any #m CP^2: positive signature, vanishing s
  CHECK(find(table, "11_270").signature == 2);
  CHECK(find(table, "11_270").s == 0);
}

TEST_CASE("mirror policy") {
  auto table = load_table();
  KnotTableEntry e = find(table, "6_2");
  // record the mirrored invariants; the diagram itself is unchanged
  e.signature = -e.signature;
  e.s = -e.s;
  e.jones = e.jones.power_substituted(-1);
  auto checks = verify_table({e});
  CHECK(checks[0].pass);
  CHECK(checks[0].chirality == Chirality::mirrored);
}

TEST_CASE("corrupted entry fails with a field diff") {
  auto table = load_table();
  KnotTableEntry e = find(table, "3_1");
  e.det = 99;
  auto checks = verify_table({e});
  CHECK_FALSE(checks[0].pass);
  CHECK(checks[0].detail.find("det") != std::string::npos);
  CHECK(checks[0].detail.find("99") != std::string::npos);
}
